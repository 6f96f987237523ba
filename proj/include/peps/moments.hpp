#pragma once

#include "peps/exact.hpp"
#include "peps/expansion.hpp"
#include "peps/permutation.hpp"

namespace peps {

/// Order and flavor of a moment statistic: plain sums powers of the
/// displacement w(i) - i, binomial sums shifted binomials of it.
struct MomentSpec {
  int order = 1;         // m >= 1
  bool binomial = false;
};

/// Displacement w(i) - i, with w(i) = i beyond the size of w.
ExactInt delta(int i, const Permutation& w);

/// Set partitions of [1,n] into k nonempty blocks.
ExactInt stirling2(int n, int k);

/// Coefficient of [q # 1 # p] in the plain moment expansion, where a = |p|,
/// b = |q|: the alternating sum over k of C(m,k) a! S(m-k,a) b! S(k,b).
ExactInt kappa(int m, int a, int b);

/// Binomial-moment analogue: alternating sum of
/// C(ceil(m/2)-1, m-a-k) * C(k-1, k-b).
ExactInt kappa_bar(int m, int a, int b);

/// Direct evaluation of the moment statistic on w.
ExactInt moment(const MomentSpec& spec, const Permutation& w);

/// Closed-form pattern expansion supported on skew sums q # 1 # p with
/// |p| + |q| <= m. Complete at every size.
PatternExpansion moment_expansion(const MomentSpec& spec);

/// Expected value of the binomial moment of order 2m on S_n:
/// C(n+m, 2m+1) / (m+1).
ExactRational expected_binom_moment(int m, int n);

}  // namespace peps
