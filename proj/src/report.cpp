#include <cmath>
#include <cstdio>
#include <ostream>

#include <json.hpp>

#include "seqlab/relations.hpp"

namespace seqlab {

namespace {

using ojson = nlohmann::ordered_json;

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string set_string(const std::vector<std::size_t>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(v[i]);
  }
  return s + "}";
}

ojson report_json(const VerificationReport& r) {
  ojson j;
  j["claim_id"] = r.claim_id;
  j["instance"] = r.instance;
  j["grade"] = std::string(to_string(r.grade));
  j["status"] = std::string(to_string(r.status));
  if (!r.reason.empty()) j["reason"] = r.reason;
  ojson ev = ojson::object();
  for (const auto& [k, v] : r.evidence) ev[k] = v;
  j["evidence"] = std::move(ev);
  return j;
}

}  // namespace

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s = buf;
  if (s == "-0.000000") s = "0.000000";
  return s;
}

void write_reports_csv(const std::vector<VerificationReport>& reports,
                       std::ostream& out) {
  out << "# claim_id,instance,grade,status,evidence\n";
  for (const auto& r : reports) {
    std::string ev;
    for (const auto& [k, v] : r.evidence) {
      if (!ev.empty()) ev += ';';
      ev += k + '=' + v;
    }
    if (!r.reason.empty()) ev = "reason=" + r.reason + (ev.empty() ? "" : ";" + ev);
    out << csv_field(r.claim_id) << ',' << csv_field(r.instance) << ','
        << to_string(r.grade) << ',' << to_string(r.status) << ','
        << csv_field(ev) << '\n';
  }
}

void write_reports_json(const std::vector<VerificationReport>& reports,
                        std::ostream& out) {
  ojson arr = ojson::array();
  for (const auto& r : reports) arr.push_back(report_json(r));
  out << arr.dump(2) << '\n';
}

void write_table_csv(const TableReport& table, std::ostream& out) {
  out << "# table,q,T,ceil_log2_q,M_expected,M_computed,floor_remark,match\n";
  for (const auto& c : table.rows) {
    out << table.which << ',' << c.computed.q.get_str() << ','
        << c.computed.period << ',' << c.computed.ceil_log2 << ','
        << set_string(c.expected.m_values) << ','
        << set_string(c.computed.m_values) << ','
        << (c.computed.floor_remark ? "yes" : "no") << ','
        << (c.match ? "yes" : "no") << '\n';
  }
}

void write_table_json(const TableReport& table, std::ostream& out) {
  ojson j;
  j["table"] = table.which;
  j["all_match"] = table.all_match();
  ojson rows = ojson::array();
  for (const auto& c : table.rows) {
    ojson r;
    r["q"] = c.computed.q.get_str();
    r["T"] = c.computed.period;
    r["ceil_log2_q"] = c.computed.ceil_log2;
    r["M_expected"] = c.expected.m_values;
    r["M_computed"] = c.computed.m_values;
    r["floor_remark"] = c.computed.floor_remark;
    r["match"] = c.match;
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  out << j.dump(2) << '\n';
}

void write_scan_csv(const ScanReport& scan, std::ostream& out) {
  out << "# instance=" << scan.instance << '\n';
  out << "# N,mu,log2_mu,half_N,target,deviation,allowance,within\n";
  for (const auto& r : scan.rows) {
    out << r.n << ',' << r.mu.get_str() << ',' << format_real(r.log2_mu) << ','
        << format_real(r.half_n) << ',' << format_real(r.target) << ','
        << format_real(r.deviation) << ',' << format_real(r.allowance) << ','
        << (r.within ? "yes" : "no") << '\n';
  }
}

void write_scan_json(const ScanReport& scan, std::ostream& out) {
  ojson j;
  j["instance"] = scan.instance;
  j["grade"] = "report";
  j["within_everywhere"] = scan.within_everywhere();
  ojson rows = ojson::array();
  for (const auto& r : scan.rows) {
    ojson row;
    row["N"] = r.n;
    row["mu"] = r.mu.get_str();
    row["log2_mu"] = format_real(r.log2_mu);
    row["half_N"] = format_real(r.half_n);
    row["target"] = format_real(r.target);
    row["deviation"] = format_real(r.deviation);
    row["allowance"] = format_real(r.allowance);
    row["within"] = r.within;
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  out << j.dump(2) << '\n';
}

}  // namespace seqlab
