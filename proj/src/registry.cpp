#include "peps/registry.hpp"

#include <stdexcept>

#include "peps/hecke.hpp"
#include "peps/moments.hpp"
#include "peps/reduced_words.hpp"
#include "peps/schubert.hpp"

namespace peps {

void StatRegistry::add(StatisticEvaluator evaluator, StatMeta meta) {
  std::string name = evaluator.name;
  if (stats_.contains(name)) throw std::invalid_argument("duplicate statistic name " + name);
  stats_.emplace(std::move(name), RegisteredStatistic{std::move(evaluator), meta});
}

bool StatRegistry::contains(const std::string& name) const { return stats_.contains(name); }

const RegisteredStatistic& StatRegistry::lookup(const std::string& name) const {
  auto it = stats_.find(name);
  if (it == stats_.end()) throw std::out_of_range("unknown statistic '" + name + "'");
  return it->second;
}

std::vector<std::string> StatRegistry::names() const {
  std::vector<std::string> out;
  out.reserve(stats_.size());
  for (const auto& [name, stat] : stats_) out.push_back(name);
  return out;
}

ExactInt increasing_subsequence_count(const Permutation& w) {
  const int n = w.size();
  // ending[i] counts increasing subsequences whose last index is i
  std::vector<ExactInt> ending(static_cast<size_t>(n), 1);
  ExactInt total = 1;  // the empty subsequence
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j < i; ++j) {
      if (w(j) < w(i)) ending[static_cast<size_t>(i) - 1] += ending[static_cast<size_t>(j) - 1];
    }
    total += ending[static_cast<size_t>(i) - 1];
  }
  return total;
}

const StatRegistry& builtin_statistics() {
  static const StatRegistry registry = [] {
    StatRegistry reg;

    reg.add(int_statistic("des",
                          [](const Permutation& w) {
                            return ExactInt(static_cast<long long>(descents(w).size()));
                          }),
            StatMeta{});
    reg.add(int_statistic("maj", [](const Permutation& w) { return ExactInt(major_index(w)); }),
            StatMeta{});
    reg.add(int_statistic("length", [](const Permutation& w) { return ExactInt(length(w)); }),
            StatMeta{});
    reg.add(int_statistic("fixed_points",
                          [](const Permutation& w) {
                            long long fixed = 0;
                            for (int i = 1; i <= w.size(); ++i) {
                              if (w(i) == i) ++fixed;
                            }
                            return ExactInt(fixed);
                          }),
            StatMeta{});

    StatMeta variance_meta;
    variance_meta.claimed_pattern_finite = true;
    variance_meta.finite_support_bound = 3;
    reg.add(int_statistic("variance",
                          [](const Permutation& w) { return moment({2, false}, w); }),
            variance_meta);

    for (int m = 1; m <= 4; ++m) {
      StatMeta meta;
      meta.claimed_pattern_finite = true;
      meta.finite_support_bound = m + 1;
      reg.add(int_statistic("mu_" + std::to_string(m),
                            [m](const Permutation& w) { return moment({m, false}, w); }),
              meta);
      reg.add(int_statistic("bmu_" + std::to_string(m),
                            [m](const Permutation& w) { return moment({m, true}, w); }),
              meta);
    }

    StatMeta rw_meta;
    rw_meta.claimed_pattern_positive = true;
    reg.add(int_statistic("rw", [](const Permutation& w) { return rw_count(w); }), rw_meta);

    StatMeta is_meta;
    is_meta.claimed_pattern_positive = true;
    reg.add(int_statistic("is_count",
                          [](const Permutation& w) { return increasing_subsequence_count(w); }),
            is_meta);

    StatMeta schubert_meta;
    schubert_meta.claimed_pattern_positive = true;
    schubert_meta.positivity_conjectural = true;
    schubert_meta.max_supported_size = 5;
    reg.add(int_statistic("schubert", [](const Permutation& w) { return schubert_spec(w); }),
            schubert_meta);

    for (int k = 0; k <= 1; ++k) {
      StatMeta meta;
      meta.claimed_pattern_positive = true;
      meta.positivity_conjectural = (k > 0);  // hw_0 = rw is proven
      meta.max_supported_size = 5;  // the word-length guard bites on S_6
      reg.add(int_statistic("hw_" + std::to_string(k),
                            [k](const Permutation& w) { return hecke_count(w, k); }),
              meta);
    }
    return reg;
  }();
  return registry;
}

}  // namespace peps
