#pragma once

#include <functional>
#include <string>
#include <utility>

#include "peps/exact.hpp"
#include "peps/permutation.hpp"

namespace peps {

/// A named total function from permutations to exact ring values. Evaluators
/// must be deterministic and defined at the empty permutation.
struct StatisticEvaluator {
  std::string name;
  std::function<ExactRational(const Permutation&)> eval;
};

inline StatisticEvaluator int_statistic(std::string name,
                                        std::function<ExactInt(const Permutation&)> f) {
  return {std::move(name),
          [f = std::move(f)](const Permutation& w) { return ExactRational(f(w)); }};
}

}  // namespace peps
