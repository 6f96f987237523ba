#include "peps/moments.hpp"

#include <cassert>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "peps/guards.hpp"

namespace peps {

ExactInt delta(int i, const Permutation& w) {
  if (i < 1) throw IndexOutOfRange("delta position must be >= 1");
  ExactInt value = (i <= w.size()) ? ExactInt(w(i) - i) : ExactInt(0);
#ifndef NDEBUG
  if (w.size() <= 5) {
    static const Permutation two_one = Permutation::from_one_line({2, 1});
    assert(value == calibrated_count(MarkedPermutation(two_one, 1), i, w) -
                        calibrated_count(MarkedPermutation(two_one, 2), i, w));
  }
#endif
  return value;
}

ExactInt stirling2(int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("stirling2 arguments must be >= 0");
  static std::vector<std::vector<ExactInt>> table = {{ExactInt(1)}};  // table[n][k], k <= n
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(table.size()) <= n) {
    const size_t row = table.size();
    const std::vector<ExactInt>& prev = table[row - 1];  // indices 0..row-1
    std::vector<ExactInt> next(row + 1, ExactInt(0));
    for (size_t j = 1; j <= row; ++j) {
      next[j] = prev[j - 1] + (j < row ? ExactInt(j) * prev[j] : ExactInt(0));
    }
    table.push_back(std::move(next));
  }
  if (k > n) return 0;
  return table[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

ExactInt kappa(int m, int a, int b) {
  if (m < 1) throw std::invalid_argument("kappa order must be >= 1");
  if (a < 0 || b < 0) throw std::invalid_argument("kappa sizes must be >= 0");
  ExactInt total = 0;
  for (int k = b; k <= m - a; ++k) {
    ExactInt term = binomial(m, k) * factorial(a) * stirling2(m - k, a) * factorial(b) *
                    stirling2(k, b);
    total += (k % 2 == 0) ? term : -term;
  }
  return total;
}

ExactInt kappa_bar(int m, int a, int b) {
  if (m < 1) throw std::invalid_argument("kappa_bar order must be >= 1");
  if (a < 0 || b < 0) throw std::invalid_argument("kappa_bar sizes must be >= 0");
  const int shift = (m + 1) / 2 - 1;  // ceil(m/2) - 1
  ExactInt total = 0;
  for (int k = b; k <= m - a; ++k) {
    ExactInt term = binomial(shift, m - a - k) * binomial(k - 1, k - b);
    total += (k % 2 == 0) ? term : -term;
  }
  return total;
}

ExactInt moment(const MomentSpec& spec, const Permutation& w) {
  if (spec.order < 1) throw std::invalid_argument("moment order must be >= 1");
  ExactInt total = 0;
  if (spec.binomial) {
    const int shift = (spec.order + 1) / 2 - 1;
    for (int i = 1; i <= w.size(); ++i) {
      total += binomial(delta(i, w) + shift, spec.order);
    }
  } else {
    for (int i = 1; i <= w.size(); ++i) {
      total += int_pow(delta(i, w), spec.order);
    }
  }
  return total;
}

PatternExpansion moment_expansion(const MomentSpec& spec) {
  if (spec.order < 1) throw std::invalid_argument("moment order must be >= 1");
  guards::require_enum_n(spec.order + 1, "moment_expansion");
  const int m = spec.order;
  PatternExpansion out(PatternExpansion::kComplete);
  for (int a = 0; a <= m; ++a) {
    for (int b = 0; a + b <= m; ++b) {
      ExactInt c = spec.binomial ? kappa_bar(m, a, b) : kappa(m, a, b);
      if (c == 0) continue;
      for (const Permutation& p : all_permutations(a)) {
        for (const Permutation& q : all_permutations(b)) {
          out.add_coeff(skew_sum(skew_sum(q, Permutation::identity(1)), p), ExactRational(c));
        }
      }
    }
  }
  return out;
}

ExactRational expected_binom_moment(int m, int n) {
  if (m < 1) throw std::invalid_argument("expected_binom_moment order parameter must be >= 1");
  if (n < 0) throw std::invalid_argument("expected_binom_moment size must be >= 0");
  return ExactRational(binomial(n + m, 2 * m + 1)) / ExactRational(m + 1);
}

}  // namespace peps
