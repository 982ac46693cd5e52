// Batch sweeps that cross-check the closed formulas against the brute-force
// routes over finite grids. Used by the `tsystem-verify` and `sweep-verify`
// CLI verbs.
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qchar/qstrings.hpp"

namespace qchar::verify {

struct SweepReport {
  std::string name;
  long checks = 0;
  long failures = 0;
  std::vector<std::string> messages;  // first few failures only
  double seconds = 0.0;

  bool ok() const { return failures == 0; }
  void check(bool cond, const std::function<std::string()>& describe);
};

struct SweepConfig {
  int tsystem_nmax = 5;
  int tsystem_kmin = -4;
  int tsystem_kmax = 4;
  int binom_amax = 8;
  int standard_window = 4;
  int standard_degree = 8;
  int row_window = 4;
  int row_degree = 6;
  int strings_n = 5;
  int strings_sum = 8;
  int ic_n = 4;
  int ic_wmax = 3;
  int cap = 10;
};

/// Every Drinfeld datum whose zeros lie in {0..window-1} with a zero at 0 and
/// total multiplicity <= max_degree, plus the empty one.
std::vector<DrinfeldData> drinfeld_grid(int window, int max_degree);

/// Every d in N^n with sum(d) <= max_sum.
std::vector<std::vector<int>> dimension_grid(int n, int max_sum);

SweepReport tsystem_sweep(int nmax, int kmin, int kmax);
SweepReport binomial_sweep(int amax);
SweepReport standard_character_sweep(int window, int max_degree);
SweepReport string_sweep(int nmax, int max_sum, int cap);
SweepReport decomposition_sweep(int window, int max_degree, int cap);
SweepReport ic_stalk_sweep(int nmax, int wmax);

std::vector<SweepReport> run_all(const SweepConfig& config);

}  // namespace qchar::verify
