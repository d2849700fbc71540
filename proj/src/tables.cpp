#include <numeric>
#include <set>

#include "seqlab/error.hpp"
#include "seqlab/maxorder.hpp"
#include "seqlab/relations.hpp"

namespace seqlab {

namespace {

TableRow row(unsigned long q, std::uint64_t t, std::size_t c,
             std::vector<std::size_t> m, bool remark = false) {
  return TableRow{BigInt(q), t, c, std::move(m), remark};
}

std::string set_string(const std::vector<std::size_t>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(v[i]);
  }
  return s + "}";
}

}  // namespace

const std::vector<TableRow>& reference_table(int which) {
  static const std::vector<TableRow> ell = {
      row(3, 2, 2, {1}, true),        row(9, 6, 4, {3}, true),
      row(27, 18, 5, {5}),            row(5, 4, 3, {2}, true),
      row(625, 500, 10, {10}),        row(19, 18, 5, {5}),
      row(361, 342, 9, {9}),          row(6859, 6498, 13, {13}),
  };
  static const std::vector<TableRow> non_ell = {
      row(51, 8, 6, {4, 5}),          row(63, 6, 6, {3, 4, 5}),
      row(65, 12, 7, {4, 6}),         row(93, 10, 7, {4, 5, 6}),
      row(217, 15, 8, {5, 6, 7, 8}),
  };
  if (which == 1) return ell;
  if (which == 2) return non_ell;
  throw Error(ErrorCode::InvalidParameter, "table must be 1 or 2");
}

TableRow compute_table_row(int which, const BigInt& q) {
  TableRow r;
  r.q = q;
  r.period = multiplicative_order(2, q);
  r.ceil_log2 = ceil_log2(q);
  if (which == 1) {
    if (!is_ell_modulus(q)) {
      throw Error(ErrorCode::NotEllModulus, "table 1 rows need an l-modulus");
    }
    const std::size_t m = moc_periodic(fcsr_word(1, q));
    r.m_values = {m};
    r.floor_remark = m < r.ceil_log2;
    return r;
  }
  if (which != 2) throw Error(ErrorCode::InvalidParameter, "table must be 1 or 2");
  if (q < 3 || mpz_even_p(q.get_mpz_t())) {
    throw Error(ErrorCode::EvenModulus, "table 2 rows need odd q >= 3");
  }
  std::set<std::size_t> values;
  for (BigInt a = 1; a < q; ++a) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t());
    if (g == 1) values.insert(moc_from_coset(a, q));
  }
  r.m_values.assign(values.begin(), values.end());
  return r;
}

bool TableReport::all_match() const {
  for (const auto& c : rows) {
    if (!c.match) return false;
  }
  return true;
}

TableReport reproduce_table(int which) {
  return reproduce_table(which, reference_table(which));
}

TableReport reproduce_table(int which, const std::vector<TableRow>& expected) {
  TableReport out;
  out.which = which;
  for (const auto& e : expected) {
    TableComparison c{e, compute_table_row(which, e.q), false};
    c.match = c.expected == c.computed;
    out.rows.push_back(std::move(c));
  }
  return out;
}

std::vector<VerificationReport> to_reports(const TableReport& table) {
  std::vector<VerificationReport> out;
  for (const auto& c : table.rows) {
    VerificationReport r{"table" + std::to_string(table.which),
                         "q=" + c.expected.q.get_str()};
    r.add("T", static_cast<std::size_t>(c.computed.period));
    r.add("ceil_log2_q", c.computed.ceil_log2);
    r.add("M", set_string(c.computed.m_values));
    if (table.which == 1) r.add("floor_remark", c.computed.floor_remark ? "yes" : "no");
    if (!c.match) {
      r.fail("expected T=" + std::to_string(c.expected.period) +
             " ceil=" + std::to_string(c.expected.ceil_log2) +
             " M=" + set_string(c.expected.m_values) +
             (c.expected.floor_remark ? " floor" : ""));
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace seqlab
