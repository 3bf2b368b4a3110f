#include "sbraid/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "sbraid/braid.hpp"
#include "sbraid/presentation.hpp"
#include "sbraid/word_problem.hpp"

namespace sbraid {

namespace {

constexpr int kRewriteMoves = 8;

BenchCell run_cell(const BenchParams& p, const std::string& axis, int length,
                   int singular, std::uint64_t cell_seed) {
  BenchCell cell;
  cell.axis = axis;
  cell.length = length;
  cell.singular = singular;
  cell.trials = p.trials;

  RelationRewriter rw(p.strands, cell_seed);
  std::vector<double> times;
  times.reserve(static_cast<std::size_t>(p.trials));
  for (int t = 0; t < p.trials; ++t) {
    const bool want_equal = t % 2 == 0;
    const SingularWord w1 = rw.random_word_with_plants(length, singular);
    const SingularWord w2 =
        want_equal ? rw.rewrite(w1, kRewriteMoves)
                   : rw.rewrite(rw.insert_pure_square(w1), kRewriteMoves);
    if (want_equal) ++cell.equal_pairs;

    op_counters() = {};
    const auto start = std::chrono::steady_clock::now();
    const Verdict v = decide_equal(w1, w2);
    const auto stop = std::chrono::steady_clock::now();
    times.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
    cell.nf_calls += op_counters().normal_forms;
    cell.eta_expansions += op_counters().eta_expansions;
    if (v.equal != want_equal) ++cell.wrong;
  }
  if (!times.empty()) {
    cell.mean_ms = std::accumulate(times.begin(), times.end(), 0.0) /
                   static_cast<double>(times.size());
    std::sort(times.begin(), times.end());
    const std::size_t m = times.size() / 2;
    cell.median_ms = times.size() % 2 ? times[m] : (times[m - 1] + times[m]) / 2;
  }
  return cell;
}

double slope_of(const std::vector<BenchCell>& cells, const std::string& axis) {
  std::vector<double> x, y;
  for (const auto& c : cells) {
    if (c.axis != axis) continue;
    x.push_back(axis == "length" ? c.length : c.singular);
    y.push_back(std::max(c.mean_ms, 1e-6));
  }
  return loglog_slope(x, y);
}

}  // namespace

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = std::min(x.size(), y.size());
  if (n < 2) return 0;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double dn = static_cast<double>(n);
  const double denom = dn * sxx - sx * sx;
  if (denom == 0) return 0;
  return (dn * sxy - sx * sy) / denom;
}

int BenchReport::wrong() const {
  int total = 0;
  for (const auto& c : cells) total += c.wrong;
  return total;
}

std::string BenchReport::to_json(bool include_timing) const {
  nlohmann::ordered_json j;
  j["strands"] = params.strands;
  j["trials"] = params.trials;
  j["max_len"] = params.max_len;
  j["max_sing"] = params.max_sing;
  j["seed"] = params.seed;
  j["cells"] = nlohmann::ordered_json::array();
  for (const auto& c : cells) {
    nlohmann::ordered_json cj;
    cj["axis"] = c.axis;
    cj["length"] = c.length;
    cj["singular"] = c.singular;
    cj["trials"] = c.trials;
    if (include_timing) {
      cj["mean_ms"] = c.mean_ms;
      cj["median_ms"] = c.median_ms;
    }
    cj["nf_calls"] = c.nf_calls;
    cj["eta_expansions"] = c.eta_expansions;
    cj["equal_pairs"] = c.equal_pairs;
    cj["wrong"] = c.wrong;
    j["cells"].push_back(cj);
  }
  if (include_timing) {
    j["slope_length"] = slope_length;
    j["slope_singular"] = slope_singular;
    j["total_seconds"] = total_seconds;
  }
  return j.dump(2);
}

std::string BenchReport::to_text() const {
  std::ostringstream os;
  os << "axis      |w|  |w|_s  trials    mean_ms  median_ms    nf_calls  eta_exp  wrong\n";
  for (const auto& c : cells) {
    char line[160];
    std::snprintf(line, sizeof line, "%-8s %4d  %5d  %6d  %9.3f  %9.3f  %10llu  %7llu  %5d\n",
                  c.axis.c_str(), c.length, c.singular, c.trials, c.mean_ms,
                  c.median_ms, static_cast<unsigned long long>(c.nf_calls),
                  static_cast<unsigned long long>(c.eta_expansions), c.wrong);
    os << line;
  }
  os << "slope in |w|: " << slope_length << "\n"
     << "slope in |w|_s: " << slope_singular << "\n"
     << "total seconds: " << total_seconds << "\n";
  return os.str();
}

BenchReport bench(const BenchParams& params) {
  BenchReport report;
  report.params = params;
  if (params.trials <= 0) return report;

  const auto start = std::chrono::steady_clock::now();
  std::uint64_t cell_index = 0;
  auto cell_seed = [&] {
    return params.seed * 0x9E3779B97F4A7C15ULL + (++cell_index);
  };

  std::vector<int> lengths;
  for (int d : {8, 4, 2, 1}) {
    const int len = std::max(params.max_len / d, 2);
    if (lengths.empty() || lengths.back() != len) lengths.push_back(len);
  }
  for (int len : lengths) {
    report.cells.push_back(run_cell(params, "length", len, 2, cell_seed()));
  }
  for (int s = 1; s <= std::max(params.max_sing, 1); s *= 2) {
    report.cells.push_back(run_cell(params, "singular", 100, s, cell_seed()));
  }

  report.slope_length = slope_of(report.cells, "length");
  report.slope_singular = slope_of(report.cells, "singular");
  report.total_seconds = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start)
                             .count();
  return report;
}

}  // namespace sbraid
