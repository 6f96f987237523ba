#pragma once

#include <map>
#include <string>
#include <vector>

#include "peps/statistic.hpp"

namespace peps {

struct StatMeta {
  bool claimed_pattern_finite = false;
  int finite_support_bound = -1;  // largest pattern size with a nonzero coefficient
  bool claimed_pattern_positive = false;
  bool positivity_conjectural = false;  // findings reported, never asserted
  int max_supported_size = 8;           // evaluator verified total through this size
};

struct RegisteredStatistic {
  StatisticEvaluator evaluator;
  StatMeta meta;
};

class StatRegistry {
 public:
  void add(StatisticEvaluator evaluator, StatMeta meta);
  bool contains(const std::string& name) const;
  const RegisteredStatistic& lookup(const std::string& name) const;  // throws std::out_of_range
  std::vector<std::string> names() const;
  const std::map<std::string, RegisteredStatistic>& all() const { return stats_; }

 private:
  std::map<std::string, RegisteredStatistic> stats_;
};

/// Registry of the statistics this library knows by name: des, maj, length,
/// fixed_points, variance, mu_1..mu_4, bmu_1..bmu_4, rw, is_count, schubert,
/// hw_0, hw_1.
const StatRegistry& builtin_statistics();

/// Increasing (possibly empty) subsequences of w, counted by DP.
ExactInt increasing_subsequence_count(const Permutation& w);

}  // namespace peps
