#include <cmath>

#include "seqlab/adic.hpp"
#include "seqlab/error.hpp"
#include "seqlab/relations.hpp"

namespace seqlab {

std::vector<std::size_t> scan_grid(std::size_t n_max, double grid_ratio,
                                   std::size_t dense_until) {
  if (!(grid_ratio > 1.0)) {
    throw Error(ErrorCode::InvalidParameter, "grid ratio must exceed 1");
  }
  std::vector<std::size_t> grid;
  std::size_t n = 2;
  for (; n <= n_max && n <= dense_until; ++n) grid.push_back(n);
  if (grid.empty() || grid.back() >= n_max) return grid;
  double next = static_cast<double>(grid.back());
  while (true) {
    next = std::ceil(next * grid_ratio);
    if (next >= static_cast<double>(n_max)) break;
    grid.push_back(static_cast<std::size_t>(next));
  }
  grid.push_back(n_max);
  return grid;
}

bool ScanReport::within_everywhere() const {
  for (const auto& r : rows) {
    if (!r.within) return false;
  }
  return true;
}

VerificationReport ScanReport::summary() const {
  VerificationReport r{"conjecture", instance, Grade::Report};
  const ScanRow* worst = nullptr;
  double worst_ratio = -1.0;
  std::size_t outside = 0;
  for (const auto& row : rows) {
    if (!row.within) ++outside;
    const double ratio = std::abs(row.deviation) / row.allowance;
    if (ratio > worst_ratio) {
      worst_ratio = ratio;
      worst = &row;
    }
  }
  r.add("points", rows.size());
  r.add("outside", outside);
  if (worst) {
    r.add("worst_N", worst->n);
    r.add("worst_mu", worst->mu);
    r.add("worst_deviation", format_real(worst->deviation));
    r.add("worst_allowance", format_real(worst->allowance));
  }
  if (outside) r.status = Status::Fail;
  return r;
}

ScanReport conjecture_scan(const Word& w, const std::string& instance,
                           const ScanOptions& options) {
  const std::size_t n_max = options.n_max ? options.n_max : w.size();
  if (n_max > w.size()) {
    throw Error(ErrorCode::InvalidParameter, "scan range exceeds the word");
  }
  if (!(options.c > 0.0)) {
    throw Error(ErrorCode::InvalidParameter, "scan constant c must be positive");
  }
  ScanReport out{instance, {}};
  for (std::size_t n : scan_grid(n_max, options.grid_ratio, options.dense_until)) {
    ScanRow row;
    row.n = n;
    row.mu = adic_min(w, n).mu;
    row.log2_mu = log2_of(row.mu);
    row.half_n = static_cast<double>(n) / 2.0;
    row.target = options.cap_log2 ? std::min(row.half_n, *options.cap_log2)
                                  : row.half_n;
    row.deviation = row.log2_mu - row.target;
    row.allowance = options.c * std::log2(static_cast<double>(n));
    row.within = std::abs(row.deviation) <= row.allowance;
    out.rows.push_back(std::move(row));
  }
  return out;
}

}  // namespace seqlab
