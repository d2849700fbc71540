#include "seqlab/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "seqlab/adic.hpp"
#include "seqlab/error.hpp"
#include "seqlab/maxorder.hpp"
#include "seqlab/measures.hpp"
#include "seqlab/relations.hpp"

namespace seqlab {

namespace {

using ojson = nlohmann::ordered_json;

enum class Format { Csv, Json };

struct Options {
  std::string seq;
  std::size_t n = 0;
  std::string measures = "moc,adic,linear";
  std::string format = "csv";
  std::string out_path;
  int which = 1;
  std::size_t exhaustive_t = 0;
  double c = 8.0;
  double grid_ratio = 1.3;
  std::optional<double> cap_log2;
  std::string claim;
};

class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw Error(ErrorCode::Io, "cannot open " + path);
      stream_ = &file_;
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

Format format_of(const Options& o) {
  return o.format == "json" ? Format::Json : Format::Csv;
}

SeqSpec seq_or(const Options& o, const char* fallback) {
  return parse_seqspec(o.seq.empty() ? fallback : o.seq);
}

std::size_t n_or(const Options& o, std::size_t fallback) {
  return o.n ? o.n : fallback;
}

// --- generate ---------------------------------------------------------------

int cmd_generate(const Options& o, std::ostream& out) {
  const SeqSpec spec = parse_seqspec(o.seq);
  if (o.n == 0 && spec.family != Family::File) {
    throw Error(ErrorCode::MissingParameter, "generate needs --n");
  }
  const Word w = materialize(spec, o.n);
  Output sink(o.out_path, out);
  write_bits(w, sink.get());
  return 0;
}

// --- analyze ----------------------------------------------------------------

struct MeasureSet {
  bool moc = false, adic = false, linear = false, correlation = false,
       expansion = false;
};

MeasureSet parse_measures(const std::string& list) {
  MeasureSet m;
  std::size_t at = 0;
  while (at <= list.size()) {
    const std::size_t comma = std::min(list.find(',', at), list.size());
    const std::string name = list.substr(at, comma - at);
    if (name == "moc") m.moc = true;
    else if (name == "adic") m.adic = true;
    else if (name == "linear") m.linear = true;
    else if (name == "correlation") m.correlation = true;
    else if (name == "expansion") m.expansion = true;
    else throw Error(ErrorCode::InvalidParameter, "unknown measure '" + name + "'");
    at = comma + 1;
  }
  return m;
}

int cmd_analyze(const Options& o, std::ostream& out) {
  const SeqSpec spec = parse_seqspec(o.seq);
  const MeasureSet m = parse_measures(o.measures);
  if (o.n == 0 && spec.family != Family::File) {
    throw Error(ErrorCode::MissingParameter, "analyze needs --n");
  }
  const Word w = materialize(spec, o.n);
  const std::size_t n_max = w.size();

  Profile<std::size_t> moc_p, lin_p, corr_p;
  Profile<BigInt> adic_p;
  if (m.moc) moc_p = moc_profile(w);
  if (m.adic) adic_p = adic_profile(w);
  if (m.linear || m.expansion) lin_p = linear_profile(w);
  if (m.correlation) corr_p = correlation2_profile(w);

  // Column order is fixed regardless of the order given in --measures.
  std::vector<std::string> columns{"N"};
  if (m.moc) columns.push_back("M");
  if (m.adic) {
    columns.push_back("mu");
    columns.push_back("log2_mu");
  }
  if (m.linear) columns.push_back("L");
  if (m.correlation) columns.push_back("C2");
  if (m.expansion) columns.push_back("E");

  Output sink(o.out_path, out);
  std::ostream& os = sink.get();
  ojson rows = ojson::array();
  if (format_of(o) == Format::Csv) {
    os << "# seq=" << spec.text << '\n' << "# ";
    for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
    os << '\n';
  }
  for (std::size_t n = 1; n <= n_max; ++n) {
    std::vector<std::pair<std::string, ojson>> cells;
    cells.emplace_back("N", n);
    if (m.moc) cells.emplace_back("M", moc_p.at(n));
    if (m.adic) {
      cells.emplace_back("mu", adic_p.at(n).get_str());
      cells.emplace_back("log2_mu", format_real(log2_of(adic_p.at(n))));
    }
    if (m.linear) cells.emplace_back("L", lin_p.at(n));
    if (m.correlation) {
      cells.emplace_back("C2", n >= 2 ? ojson(corr_p.at(n)) : ojson(nullptr));
    }
    if (m.expansion) {
      const auto e = expansion_complexity(w, n, lin_p.at(n) + 1);
      cells.emplace_back("E", *e.value);
    }
    if (format_of(o) == Format::Csv) {
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) os << ',';
        const ojson& v = cells[i].second;
        if (v.is_string()) os << v.get<std::string>();
        else if (!v.is_null()) os << v.dump();
      }
      os << '\n';
    } else {
      ojson row;
      for (auto& [k, v] : cells) row[k] = std::move(v);
      rows.push_back(std::move(row));
    }
  }
  if (format_of(o) == Format::Json) {
    ojson j;
    j["seq"] = spec.text;
    j["columns"] = columns;
    j["rows"] = std::move(rows);
    os << j.dump(2) << '\n';
  }
  return 0;
}

// --- periodic ---------------------------------------------------------------

int cmd_periodic(const Options& o, std::ostream& out) {
  const SeqSpec spec = parse_seqspec(o.seq);
  const auto s = periodic_of(spec);
  if (!s) {
    throw Error(ErrorCode::InvalidParameter,
                std::string(to_string(spec.family)) + " is not periodic");
  }
  const RationalRep rep = connection(*s);
  const AdicValue phi = phi2(*s);
  const AdicValue sym = phi2_symmetric(*s);
  const std::size_t m = moc_periodic(*s);
  const std::size_t l = linear_profile(s->unroll(2 * s->period())).back();

  Output sink(o.out_path, out);
  std::ostream& os = sink.get();
  if (format_of(o) == Format::Csv) {
    os << "# seq=" << spec.text << '\n'
       << "# T,A,q,phi2,phi2_symmetric,M,L\n"
       << s->period() << ',' << rep.A.get_str() << ',' << rep.q.get_str() << ','
       << format_real(phi.log2_value) << ',' << format_real(sym.log2_value)
       << ',' << m << ',' << l << '\n';
  } else {
    ojson j;
    j["seq"] = spec.text;
    j["T"] = s->period();
    j["A"] = rep.A.get_str();
    j["q"] = rep.q.get_str();
    j["phi2"] = format_real(phi.log2_value);
    j["phi2_symmetric"] = format_real(sym.log2_value);
    j["q_symmetric"] = sym.mu.get_str();
    j["M"] = m;
    j["L"] = l;
    os << j.dump(2) << '\n';
  }
  return 0;
}

// --- verify -----------------------------------------------------------------

std::vector<VerificationReport> run_claim(const std::string& claim,
                                          const Options& o);

std::vector<VerificationReport> full_suite() {
  Options none;
  std::vector<VerificationReport> out;
  for (const char* claim : {"thm1", "thm2", "lemma1", "cor1", "thm4", "thm5",
                            "lemma3", "thm6", "msequence", "lower-bound",
                            "cross", "table1", "table2"}) {
    for (auto& r : run_claim(claim, none)) out.push_back(std::move(r));
  }
  {
    Options rs;
    rs.seq = "rudin-shapiro";
    for (auto& r : run_claim("lower-bound", rs)) out.push_back(std::move(r));
  }
  return out;
}

std::vector<VerificationReport> run_claim(const std::string& claim,
                                          const Options& o) {
  auto periodic_arg = [&]() -> std::optional<PeriodicSequence> {
    if (o.seq.empty()) return std::nullopt;
    const SeqSpec spec = parse_seqspec(o.seq);
    auto s = periodic_of(spec);
    if (!s) {
      throw Error(ErrorCode::InvalidParameter, claim + " needs a periodic --seq");
    }
    return s;
  };
  auto ell_q = [&]() -> std::optional<BigInt> {
    if (o.seq.empty()) return std::nullopt;
    const SeqSpec spec = parse_seqspec(o.seq);
    if (spec.family != Family::Ell) {
      throw Error(ErrorCode::InvalidParameter, claim + " takes an ell:q=... sequence");
    }
    return spec.q;
  };

  if (claim == "all") return full_suite();
  if (claim == "thm1") {
    const SeqSpec spec = seq_or(o, "thue-morse");
    return {verify_thm1(materialize(spec, n_or(o, 256)),
                        spec.text + " N=" + std::to_string(n_or(o, 256)))};
  }
  if (claim == "cor1") {
    const SeqSpec spec = seq_or(o, "thue-morse");
    return {verify_cor1(materialize(spec, n_or(o, 256)),
                        spec.text + " N=" + std::to_string(n_or(o, 256)))};
  }
  if (claim == "thm2") {
    if (auto s = periodic_arg()) return {verify_thm2(*s)};
    return {verify_thm2_exhaustive(o.exhaustive_t ? o.exhaustive_t : 10)};
  }
  if (claim == "lemma1") {
    if (auto s = periodic_arg()) return {verify_lemma1(*s)};
    return {verify_lemma1_exhaustive(o.exhaustive_t ? o.exhaustive_t : 8)};
  }
  if (claim == "thm4") {
    if (auto q = ell_q()) return {verify_thm4(*q, std::max<std::uint64_t>(1000, to_u64(*q)))};
    return {verify_thm4_range(n_or(o, 1000))};
  }
  if (claim == "thm5") {
    if (auto q = ell_q()) return {verify_thm5(*q)};
    return {verify_thm5_range(n_or(o, 10000))};
  }
  if (claim == "lemma3") {
    return {lemma3_scan(static_cast<unsigned>(n_or(o, 30)))};
  }
  if (claim == "thm6") {
    return {verify_thm6_exhaustive(o.exhaustive_t ? o.exhaustive_t : 12)};
  }
  if (claim == "msequence") {
    const SeqSpec spec = seq_or(o, "lfsr:r=4,taps=0+1,seed=1000");
    if (spec.family != Family::Lfsr) {
      throw Error(ErrorCode::InvalidParameter, "msequence takes an lfsr sequence");
    }
    return {verify_msequence(spec.lfsr)};
  }
  if (claim == "lower-bound") {
    const SeqSpec spec = seq_or(o, "thue-morse");
    if (spec.family != Family::Pattern || spec.along) {
      throw Error(ErrorCode::InvalidParameter, "lower-bound takes a pattern sequence");
    }
    return {verify_pattern_lower_bound(spec.k, n_or(o, 2000))};
  }
  if (claim == "cross") {
    const SeqSpec spec = seq_or(o, "thue-morse");
    const std::size_t n = n_or(o, 100);
    return {verify_cross_measures(materialize(spec, n),
                                  spec.text + " N=" + std::to_string(n),
                                  {(n + 1) / 2, n})};
  }
  if (claim == "table1") return to_reports(reproduce_table(1));
  if (claim == "table2") return to_reports(reproduce_table(2));
  throw Error(ErrorCode::InvalidParameter, "unknown claim '" + claim + "'");
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  std::vector<VerificationReport> reports;
  try {
    reports = run_claim(o.claim, o);
  } catch (const Error& e) {
    err << "seqlab: verify " << o.claim << ": " << e.what() << '\n';
    return 2;
  }
  Output sink(o.out_path, out);
  if (format_of(o) == Format::Csv) write_reports_csv(reports, sink.get());
  else write_reports_json(reports, sink.get());
  int code = 0;
  for (const auto& r : reports) {
    if (r.grade == Grade::Assert && r.status == Status::Fail) {
      std::string cex;
      for (const auto& [k, v] : r.evidence) {
        if (k == "counterexample") cex = v;
      }
      err << "seqlab: " << r.claim_id << " failed on " << r.instance << ": "
          << cex << '\n';
      code = 1;
    }
  }
  return code;
}

// --- tables / scan ------------------------------------------------------------

int cmd_tables(const Options& o, std::ostream& out, std::ostream& err) {
  const TableReport t = reproduce_table(o.which);
  Output sink(o.out_path, out);
  if (format_of(o) == Format::Csv) write_table_csv(t, sink.get());
  else write_table_json(t, sink.get());
  if (!t.all_match()) {
    err << "seqlab: table " << o.which << " does not match\n";
    return 1;
  }
  return 0;
}

int cmd_scan(const Options& o, std::ostream& out) {
  const SeqSpec spec = parse_seqspec(o.seq);
  if (o.n == 0) throw Error(ErrorCode::MissingParameter, "scan needs --nmax");
  ScanOptions opt;
  opt.n_max = o.n;
  opt.c = o.c;
  opt.grid_ratio = o.grid_ratio;
  opt.cap_log2 = o.cap_log2;
  if (!opt.cap_log2 && spec.family == Family::Legendre) {
    // Legendre sequences level off at their periodic 2-adic complexity.
    opt.cap_log2 = phi2(*periodic_of(spec)).log2_value;
  }
  const ScanReport scan = conjecture_scan(materialize(spec, o.n), spec.text, opt);
  Output sink(o.out_path, out);
  if (format_of(o) == Format::Csv) {
    sink.get() << "# c=" << format_real(opt.c) << " grid_ratio="
               << format_real(opt.grid_ratio);
    if (opt.cap_log2) sink.get() << " cap_log2=" << format_real(*opt.cap_log2);
    sink.get() << '\n';
    write_scan_csv(scan, sink.get());
  } else {
    write_scan_json(scan, sink.get());
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"seqlab: maximum-order and 2-adic complexity laboratory", "seqlab"};
  app.require_subcommand(1, 1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", o.out_path, "write to PATH instead of stdout");
  };
  auto add_n = [&](CLI::App* sub) {
    sub->add_option("--n,--nmax", o.n, "prefix length / range");
  };

  auto* gen = app.add_subcommand("generate", "write the first N bits");
  gen->add_option("--seq", o.seq, "sequence spec")->required();
  add_n(gen);
  gen->add_option("--out", o.out_path, "write to PATH instead of stdout");

  auto* analyze = app.add_subcommand("analyze", "per-N profiles");
  analyze->add_option("--seq", o.seq, "sequence spec")->required();
  add_n(analyze);
  analyze->add_option("--measures", o.measures,
                      "comma list of moc,adic,linear,correlation,expansion");
  add_common(analyze);

  auto* periodic = app.add_subcommand("periodic", "periodic complexities");
  periodic->add_option("--seq", o.seq, "sequence spec")->required();
  add_common(periodic);

  auto* verify = app.add_subcommand("verify", "run a verifier by claim id");
  verify->add_option("claim", o.claim,
                     "thm1 thm2 lemma1 cor1 thm4 thm5 lemma3 thm6 msequence "
                     "lower-bound cross table1 table2 all")
      ->required();
  verify->add_option("--seq", o.seq, "sequence spec");
  add_n(verify);
  verify->add_option("--exhaustive-T", o.exhaustive_t, "largest period");
  add_common(verify);

  auto* tables = app.add_subcommand("tables", "reproduce a reference table");
  tables->add_option("--which", o.which, "1 or 2")->check(CLI::IsMember({1, 2}));
  add_common(tables);

  auto* scan = app.add_subcommand("scan", "conjecture scan of log2 mu(N)");
  scan->add_option("--seq", o.seq, "sequence spec")->required();
  add_n(scan);
  scan->add_option("--c", o.c, "allowance constant");
  scan->add_option("--grid-ratio", o.grid_ratio, "geometric grid ratio");
  scan->add_option("--cap-log2", o.cap_log2, "target cap in bits");
  add_common(scan);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "seqlab: " << e.what() << '\n';
    return 2;
  }

  try {
    if (gen->parsed()) return cmd_generate(o, out);
    if (analyze->parsed()) return cmd_analyze(o, out);
    if (periodic->parsed()) return cmd_periodic(o, out);
    if (verify->parsed()) return cmd_verify(o, out, err);
    if (tables->parsed()) return cmd_tables(o, out, err);
    if (scan->parsed()) return cmd_scan(o, out);
  } catch (const Error& e) {
    err << "seqlab: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace seqlab
