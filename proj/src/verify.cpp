#include "peps/verify.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "peps/expansion.hpp"
#include "peps/moments.hpp"
#include "peps/registry.hpp"

namespace peps {

namespace {

std::string set_str(const IndexSet& I) {
  std::string out = "{";
  for (size_t k = 0; k < I.positions().size(); ++k) {
    if (k > 0) out.push_back(',');
    out += std::to_string(I.positions()[k]);
  }
  out.push_back('}');
  return out;
}

}  // namespace

std::vector<IeReport> verify_ie(int max_n) {
  std::vector<IeReport> out;
  for (int n = 0; n <= max_n; ++n) {
    for (const Permutation& w : all_permutations(n)) {
      out.push_back(verify_ie_structure(w));
    }
  }
  return out;
}

VerifyReport verify_lifts(int max_n) {
  VerifyReport report;
  report.name = "lifts";
  for (int n = 0; n <= max_n; ++n) {
    for (const Permutation& w : all_permutations(n)) {
      const std::vector<ReducedWord> words = enumerate_rw(w);
      for (unsigned long long mask = 0; mask < (1ull << n); ++mask) {
        IndexSet I = IndexSet::from_mask(mask);
        Permutation p = restrict_to(w, I);

        // Exhaustive fibers of the restriction map, independent of the greedy lift.
        std::map<ReducedWord, ReducedWord> fiber_min;
        for (const ReducedWord& y : words) {
          ReducedWord r = restrict_word(y, w, I);
          auto it = fiber_min.find(r);
          if (it == fiber_min.end()) {
            fiber_min.emplace(std::move(r), y);
          } else if (y < it->second) {
            it->second = y;
          }
        }

        for (const ReducedWord& x : enumerate_rw(p)) {
          ++report.checks;
          auto it = fiber_min.find(x);
          if (it == fiber_min.end()) {
            report.violations.push_back("restriction not surjective: w=" + w.str() +
                                        " I=" + set_str(I) + " x=" + x.str());
            continue;
          }
          ReducedWord lifted = minimal_lift(x, w, I);
          if (lifted != it->second) {
            report.violations.push_back("greedy lift not the fiber minimum: w=" + w.str() +
                                        " I=" + set_str(I) + " x=" + x.str() + " greedy=" +
                                        lifted.str() + " fiber=" + it->second.str());
          }
          if (restrict_word(lifted, w, I) != x) {
            report.violations.push_back("restrict(lift) != id: w=" + w.str() +
                                        " I=" + set_str(I) + " x=" + x.str());
          }
        }
      }
    }
  }
  return report;
}

namespace {

// count ordered to keep parity with the product of two pattern counts
std::map<Permutation, long long> vargas_support(const Permutation& p, const Permutation& q) {
  std::map<Permutation, long long> support;
  for (int size = std::max(p.size(), q.size()); size <= p.size() + q.size(); ++size) {
    for (const Permutation& r : all_permutations(size)) {
      ExactInt d = product_coeff(p, q, r);
      if (d != 0) support.emplace(r, d.convert_to<long long>());
    }
  }
  return support;
}

using CalibKey = std::tuple<Permutation, int, int>;  // (pattern, mark, calibration)

std::map<CalibKey, long long> calibrated_table(const Permutation& w) {
  std::map<CalibKey, long long> table;
  const int n = w.size();
  std::vector<int> values;
  std::vector<int> positions;
  for (unsigned long long mask = 0; mask < (1ull << n); ++mask) {
    values.clear();
    positions.clear();
    for (int i = 1; i <= n; ++i) {
      if (mask & (1ull << (i - 1))) {
        values.push_back(w(i));
        positions.push_back(i);
      }
    }
    if (values.empty()) continue;
    Permutation p = standardize(values);
    for (int h = 1; h <= p.size(); ++h) {
      ++table[{p, h, positions[static_cast<size_t>(h) - 1]}];
    }
  }
  return table;
}

long long lookup(const std::map<Permutation, long long>& table, const Permutation& p) {
  auto it = table.find(p);
  return it == table.end() ? 0 : it->second;
}

long long lookup(const std::map<CalibKey, long long>& table, const CalibKey& key) {
  auto it = table.find(key);
  return it == table.end() ? 0 : it->second;
}

}  // namespace

VerifyReport verify_vargas(int max_w) {
  VerifyReport report;
  report.name = "vargas";

  std::vector<Permutation> small = patterns_through_size(3);
  std::map<std::pair<Permutation, Permutation>, std::map<Permutation, long long>> plain;
  for (const Permutation& p : small) {
    for (const Permutation& q : small) {
      plain[{p, q}] = vargas_support(p, q);
    }
  }

  std::vector<MarkedPermutation> marked;
  for (int k = 1; k <= 2; ++k) {
    for (const Permutation& p : all_permutations(k)) {
      for (int h = 1; h <= k; ++h) marked.emplace_back(p, h);
    }
  }
  std::map<std::pair<MarkedPermutation, MarkedPermutation>,
           std::map<std::pair<Permutation, int>, long long>>
      marked_support;
  for (const MarkedPermutation& a : marked) {
    for (const MarkedPermutation& b : marked) {
      auto& support = marked_support[{a, b}];
      for (int size = std::max(a.pattern.size(), b.pattern.size());
           size < a.pattern.size() + b.pattern.size(); ++size) {
        for (const Permutation& r : all_permutations(size)) {
          for (int h = 1; h <= size; ++h) {
            ExactInt d = marked_product_coeff(a, b, MarkedPermutation(r, h));
            if (d != 0) support.emplace(std::make_pair(r, h), d.convert_to<long long>());
          }
        }
      }
    }
  }

  for (int n = 0; n <= max_w; ++n) {
    for (const Permutation& w : all_permutations(n)) {
      const auto counts = pattern_count_table(w);
      for (const auto& [pq, support] : plain) {
        ++report.checks;
        long long lhs = lookup(counts, pq.first) * lookup(counts, pq.second);
        long long rhs = 0;
        for (const auto& [r, d] : support) rhs += d * lookup(counts, r);
        if (lhs != rhs) {
          report.violations.push_back("product identity fails: p=" + pq.first.str() +
                                      " q=" + pq.second.str() + " w=" + w.str());
        }
      }

      const auto calib = calibrated_table(w);
      for (const auto& [ab, support] : marked_support) {
        for (int i = 1; i <= max_w; ++i) {
          ++report.checks;
          long long lhs = lookup(calib, {ab.first.pattern, ab.first.mark, i}) *
                          lookup(calib, {ab.second.pattern, ab.second.mark, i});
          long long rhs = 0;
          for (const auto& [rh, d] : support) {
            rhs += d * lookup(calib, {rh.first, rh.second, i});
          }
          if (lhs != rhs) {
            report.violations.push_back(
                "marked product identity fails: p=" + ab.first.pattern.str() + " mark " +
                std::to_string(ab.first.mark) + ", q=" + ab.second.pattern.str() + " mark " +
                std::to_string(ab.second.mark) + ", i=" + std::to_string(i) + ", w=" + w.str());
          }
        }
      }
    }
  }
  return report;
}

VerifyReport verify_moment_consistency(int max_m, int max_w) {
  VerifyReport report;
  report.name = "moment_consistency";
  for (int m = 1; m <= max_m; ++m) {
    for (bool binomial : {false, true}) {
      MomentSpec spec{m, binomial};
      PatternExpansion expansion = moment_expansion(spec);
      for (int n = 0; n <= max_w; ++n) {
        for (const Permutation& w : all_permutations(n)) {
          ++report.checks;
          auto eval = expansion.evaluate(w);
          if (eval.truncated || eval.value != ExactRational(moment(spec, w))) {
            report.violations.push_back("expansion disagrees with direct evaluation: m=" +
                                        std::to_string(m) + (binomial ? " binomial" : " plain") +
                                        " w=" + w.str());
          }
        }
      }
    }
  }
  return report;
}

VerifyReport verify_binom_expected(int max_m_param, int max_n) {
  VerifyReport report;
  report.name = "binom_expected";
  for (int m = 1; m <= max_m_param; ++m) {
    StatisticEvaluator stat =
        int_statistic("bmu_tmp", [m](const Permutation& w) { return moment({2 * m, true}, w); });
    for (int n = 0; n <= max_n; ++n) {
      ++report.checks;
      if (expected_binom_moment(m, n) != expected_value_exhaustive(stat, n)) {
        report.violations.push_back("expected value formula fails: m=" + std::to_string(m) +
                                    " n=" + std::to_string(n));
      }
    }
  }
  return report;
}

VerifyReport verify_kappa_properties(int max_m, int max_w) {
  VerifyReport report;
  report.name = "kappa";
  for (int m = 1; m <= max_m; ++m) {
    for (int a = 0; a <= m; ++a) {
      for (int b = 0; b <= m; ++b) {
        ++report.checks;
        ExactInt sign = (m % 2 == 0) ? 1 : -1;
        if (kappa(m, a, b) != sign * kappa(m, b, a)) {
          report.violations.push_back("kappa antisymmetry fails at (" + std::to_string(m) + "," +
                                      std::to_string(a) + "," + std::to_string(b) + ")");
        }
        if (a + b == m) {
          ExactInt expected = (b % 2 == 0) ? factorial(m) : -factorial(m);
          if (kappa(m, a, b) != expected) {
            report.violations.push_back("kappa diagonal value fails at (" + std::to_string(m) +
                                        "," + std::to_string(a) + "," + std::to_string(b) + ")");
          }
        }
      }
      if (kappa(m, a, 0) != factorial(a) * stirling2(m, a)) {
        report.violations.push_back("kappa boundary fails at (" + std::to_string(m) + "," +
                                    std::to_string(a) + ",0)");
      }
    }
    if (kappa_bar(m, 0, 0) != 0) {
      report.violations.push_back("kappa_bar(m,0,0) != 0 at m=" + std::to_string(m));
    }
  }

  // The binomial reduction that defines kappa_bar, checked numerically.
  static const Permutation two_one = Permutation::from_one_line({2, 1});
  for (int m = 1; m <= std::min(max_m, 4); ++m) {
    const int shift = (m + 1) / 2 - 1;
    for (int n = 0; n <= std::min(max_w, 6); ++n) {
      for (const Permutation& w : all_permutations(n)) {
        for (int i = 1; i <= 6; ++i) {
          ++report.checks;
          ExactInt lhs = binomial(delta(i, w) + shift, m);
          ExactInt rhs = 0;
          for (int a = 0; a <= m; ++a) {
            for (int b = 0; a + b <= m; ++b) {
              ExactInt x = calibrated_count(MarkedPermutation(two_one, 1), i, w);
              ExactInt y = calibrated_count(MarkedPermutation(two_one, 2), i, w);
              rhs += kappa_bar(m, a, b) * binomial(x, a) * binomial(y, b);
            }
          }
          if (lhs != rhs) {
            report.violations.push_back("binomial reduction fails: m=" + std::to_string(m) +
                                        " w=" + w.str() + " i=" + std::to_string(i));
          }
        }
      }
    }
  }
  return report;
}

namespace {

// r = q # 1 # p for some split sizes (|q|, 1, |p|)?
bool is_skew_triple(const Permutation& r) {
  const int n = r.size();
  for (int b = 0; b < n; ++b) {
    const int a = n - 1 - b;
    bool ok = r(b + 1) == a + 1;
    for (int i = 1; i <= b && ok; ++i) ok = r(i) > a + 1;
    for (int i = b + 2; i <= n && ok; ++i) ok = r(i) <= a;
    if (ok) return true;
  }
  return false;
}

}  // namespace

VerifyReport verify_moment_finiteness(int max_m) {
  VerifyReport report;
  report.name = "moment_finiteness";
  for (int m = 1; m <= max_m; ++m) {
    for (bool binomial : {false, true}) {
      MomentSpec spec{m, binomial};
      PatternExpansion closed = moment_expansion(spec);
      for (const auto& [p, c] : closed.terms()) {
        ++report.checks;
        if (p.size() > m + 1) {
          report.violations.push_back("support exceeds bound: m=" + std::to_string(m) +
                                      (binomial ? " binomial" : " plain") + " pattern " + p.str());
        }
        if (!is_skew_triple(p)) {
          report.violations.push_back("support pattern not of skew-triple form: " + p.str());
        }
      }
      StatisticEvaluator stat = int_statistic(
          "moment_tmp", [spec](const Permutation& w) { return moment(spec, w); });
      PatternExpansion generic = expand(stat, m + 3);
      for (const auto& [p, c] : generic.terms()) {
        ++report.checks;
        if (p.size() > m + 1) {
          report.violations.push_back("nonzero coefficient beyond the support bound: m=" +
                                      std::to_string(m) + (binomial ? " binomial" : " plain") +
                                      " pattern " + p.str());
        } else if (c != closed.coeff(p)) {
          report.violations.push_back("closed-form coefficient disagrees with generic expansion: " +
                                      p.str());
        }
      }
      // and nothing of the closed form is missing from the generic expansion
      for (const auto& [p, c] : closed.terms()) {
        if (generic.coeff(p) != c) {
          report.violations.push_back("generic expansion missing coefficient at " + p.str());
        }
      }
    }
  }
  return report;
}

VerifyReport verify_positivity(int bound) {
  VerifyReport report;
  report.name = "positivity";
  const StatRegistry& registry = builtin_statistics();
  for (const auto& [name, stat] : registry.all()) {
    if (!stat.meta.claimed_pattern_positive) continue;
    const int stat_bound = std::min(bound, stat.meta.max_supported_size);
    PatternExpansion expansion = expand(stat.evaluator, stat_bound);
    for (const Permutation& p : patterns_through_size(stat_bound)) {
      ++report.checks;
      ExactRational c = expansion.coeff(p);
      if (c < 0) {
        std::string message = name + " has a negative coefficient " + to_decimal(c) + " at " +
                              p.str();
        if (stat.meta.positivity_conjectural) {
          report.notes.push_back(message + " (conjectural claim)");
        } else {
          report.violations.push_back(message);
        }
      }
    }
    // monotonicity under restriction
    const int mono_bound = std::min(stat_bound, 5);
    for (int n = 0; n <= mono_bound; ++n) {
      for (const Permutation& w : all_permutations(n)) {
        ExactRational at_w = stat.evaluator.eval(w);
        for (unsigned long long mask = 0; mask < (1ull << n); ++mask) {
          ++report.checks;
          ExactRational at_p = stat.evaluator.eval(restrict_to(w, IndexSet::from_mask(mask)));
          if (at_p > at_w) {
            std::string message = name + " not monotonic at w=" + w.str();
            if (stat.meta.positivity_conjectural) {
              report.notes.push_back(message + " (conjectural claim)");
            } else {
              report.violations.push_back(message);
            }
          }
        }
      }
    }
  }
  return report;
}

}  // namespace peps
