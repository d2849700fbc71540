#pragma once

// Mechanical checks of the relations between maximum-order complexity,
// 2-adic complexity and the companion measures. Checks of proved bounds carry
// "assert" grade; conjecture scans carry "report" grade and never count as
// failures of the library.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "seqlab/generators.hpp"
#include "seqlab/numtheory.hpp"
#include "seqlab/sequence.hpp"

namespace seqlab {

enum class Status { Pass, Fail, Skipped };
enum class Grade { Assert, Report };

std::string_view to_string(Status s) noexcept;
std::string_view to_string(Grade g) noexcept;

struct VerificationReport {
  std::string claim_id;
  std::string instance;
  Grade grade = Grade::Assert;
  Status status = Status::Pass;
  std::string reason;  // for Skipped
  std::vector<std::pair<std::string, std::string>> evidence;

  void add(std::string key, std::string value) {
    evidence.emplace_back(std::move(key), std::move(value));
  }
  void add(std::string key, std::size_t value) {
    add(std::move(key), std::to_string(value));
  }
  void add(std::string key, const BigInt& value) {
    add(std::move(key), value.get_str());
  }
  // Marks the report failed and records the counterexample.
  void fail(std::string counterexample) {
    if (status != Status::Fail) add("counterexample", std::move(counterexample));
    status = Status::Fail;
  }
  bool passed() const noexcept { return status != Status::Fail; }
};

// M(S,N) <= ceil(Phi_2(S,N)) + 1 for every N <= |w|.
VerificationReport verify_thm1(const Word& w, const std::string& instance);

// M(S) <= ceil(Phi_2(S)).
VerificationReport verify_thm2(const PeriodicSequence& s);
// Every word of least period T, 1 <= T <= t_max.
VerificationReport verify_thm2_exhaustive(std::size_t t_max);

// mu(N) = q for N in {2T+1, 2T+2, 2T+3}; mu(2T) is reported. Periods
// above kLemma1MaxPeriod raise TooLarge.
inline constexpr std::size_t kLemma1MaxPeriod = 4096;
VerificationReport verify_lemma1(const PeriodicSequence& s);
VerificationReport verify_lemma1_exhaustive(std::size_t t_max);

// ceil(Phi_2(S,N)) >= log2(N + 1 - C_2(S,N)) - 1 at N = |w|.
VerificationReport verify_cor1(const Word& w, const std::string& instance);

// moc_from_coset(A, q) = moc_periodic(fcsr_word(A, q)) for all A coprime to
// q; evidence carries the observed value set. q odd, 3 <= q <= 1000 by
// default (raise via q_limit).
VerificationReport verify_thm4(const BigInt& q, std::uint64_t q_limit = 1000);
VerificationReport verify_thm4_range(std::uint64_t q_max);

// Closed form for l-sequences vs the computed M.
VerificationReport verify_thm5(const BigInt& q);
VerificationReport verify_thm5_range(std::uint64_t q_max);
// q = 2^k + 1, k <= k_max: the l-moduli among them must be exactly {3,5,9}.
VerificationReport lemma3_scan(unsigned k_max);
std::vector<BigInt> lemma3_moduli(unsigned k_max);

// Every word of least period T with M = T - 1 has q = 2^T - 1. At T = 8 the
// non-maximal M = T - 2 example (0,0,1,0,0,1,0,0), q = 85 is also checked.
VerificationReport verify_thm6(std::size_t t);
VerificationReport verify_thm6_exhaustive(std::size_t t_max);

// L(M) = r and q = 2^T - 1 for an m-sequence fixture; degree 1 is skipped.
VerificationReport verify_msequence(const LfsrSpec& spec);

// Lower bounds for pattern sequences, carried over by M <= ceil(log2 mu) + 1:
// k = 1 (Thue-Morse): ceil(log2 mu) >= M - 1, M > N/5 for 6 <= N, and
//   ceil(Phi_2) >= N/5 for N >= 4;
// k >= 2: ceil(log2 mu) >= M - 1, M > N/6 and ceil(Phi_2) >= N/6 for
//   N >= 2^(k+3) - 7.
VerificationReport verify_pattern_lower_bound(unsigned k, std::size_t n_max);

// Cross-measure facts on one word: M(S,N) <= L(S,N) at every N, and
// E(S,N) <= min{L+1, N+2-L} at each N in `expansion_points`.
VerificationReport verify_cross_measures(
    const Word& w, const std::string& instance,
    const std::vector<std::size_t>& expansion_points);

struct TableRow {
  BigInt q;
  std::uint64_t period = 0;
  std::size_t ceil_log2 = 0;
  std::vector<std::size_t> m_values;  // sorted; one value for table 1
  bool floor_remark = false;          // M = floor(log2 q) < ceil(log2 q)

  friend bool operator==(const TableRow&, const TableRow&) = default;
};

struct TableComparison {
  TableRow expected;
  TableRow computed;
  bool match = false;
};

struct TableReport {
  int which = 1;
  std::vector<TableComparison> rows;
  bool all_match() const;
};

// Reference rows: table 1 (l-sequences), table 2 (FCSR moduli where 2 is
// not primitive).
const std::vector<TableRow>& reference_table(int which);
TableRow compute_table_row(int which, const BigInt& q);
TableReport reproduce_table(int which);
TableReport reproduce_table(int which, const std::vector<TableRow>& expected);
std::vector<VerificationReport> to_reports(const TableReport& table);

struct ScanOptions {
  std::size_t n_max = 0;
  double c = 8.0;
  double grid_ratio = 1.3;
  std::size_t dense_until = 64;
  // Target is min(N/2, cap_log2) when set, N/2 otherwise.
  std::optional<double> cap_log2;
};

struct ScanRow {
  std::size_t n = 0;
  BigInt mu;
  double log2_mu = 0.0;
  double half_n = 0.0;
  double target = 0.0;
  double deviation = 0.0;  // log2 mu - target
  double allowance = 0.0;  // c * log2 N
  bool within = true;
};

struct ScanReport {
  std::string instance;
  std::vector<ScanRow> rows;
  bool within_everywhere() const;
  VerificationReport summary() const;
};

// Every N in [2, dense_until], then N growing by grid_ratio, then n_max.
// N = 1 is left out: c * log2(1) = 0 admits no deviation at all.
std::vector<std::size_t> scan_grid(std::size_t n_max, double grid_ratio,
                                   std::size_t dense_until = 64);

ScanReport conjecture_scan(const Word& w, const std::string& instance,
                           const ScanOptions& options);

// Output. CSV starts with a '#' line naming the columns.
void write_reports_csv(const std::vector<VerificationReport>& reports,
                       std::ostream& out);
void write_reports_json(const std::vector<VerificationReport>& reports,
                        std::ostream& out);
void write_table_csv(const TableReport& table, std::ostream& out);
void write_table_json(const TableReport& table, std::ostream& out);
void write_scan_csv(const ScanReport& scan, std::ostream& out);
void write_scan_json(const ScanReport& scan, std::ostream& out);

// Fixed 6-decimal rendering used by every report.
std::string format_real(double v);

}  // namespace seqlab
