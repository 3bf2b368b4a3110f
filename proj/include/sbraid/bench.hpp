#pragma once

// Empirical running time of decide_equal on seeded random pairs. Equal pairs
// come from relation rewriting, unequal ones from perturbation, so every
// verdict is also checked against a known answer.

#include <cstdint>
#include <string>
#include <vector>

namespace sbraid {

struct BenchParams {
  int strands = 5;
  int trials = 4;
  int max_len = 400;
  int max_sing = 8;
  std::uint64_t seed = 1;
};

struct BenchCell {
  std::string axis;  // "length" or "singular"
  int length = 0;
  int singular = 0;
  int trials = 0;
  double mean_ms = 0;
  double median_ms = 0;
  std::uint64_t nf_calls = 0;
  std::uint64_t eta_expansions = 0;
  int equal_pairs = 0;
  int wrong = 0;  // verdicts that disagree with the construction
};

struct BenchReport {
  BenchParams params;
  std::vector<BenchCell> cells;
  double slope_length = 0;
  double slope_singular = 0;
  double total_seconds = 0;

  int wrong() const;
  /// Timing fields (mean_ms, median_ms, slopes, total_seconds) are dropped
  /// when include_timing is false; the rest is a function of the params.
  std::string to_json(bool include_timing = true) const;
  std::string to_text() const;
};

/// Least-squares slope of log y against log x.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

BenchReport bench(const BenchParams& params);

}  // namespace sbraid
