#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "peps/exact.hpp"
#include "peps/permutation.hpp"
#include "peps/statistic.hpp"

namespace peps {

/// A finitely supported map from patterns to exact coefficients, graded by
/// size. `max_size` is the size through which the stored coefficients are
/// complete; `kComplete` marks expansions that are exact at every size
/// (closed-form pattern-finite statistics). Zero coefficients are never stored.
class PatternExpansion {
 public:
  static constexpr int kComplete = -1;

  PatternExpansion() = default;
  explicit PatternExpansion(int max_size);

  int max_size() const { return max_size_; }
  bool is_complete() const { return max_size_ == kComplete; }

  const std::map<Permutation, ExactRational>& terms() const { return terms_; }
  ExactRational coeff(const Permutation& p) const;
  void set_coeff(const Permutation& p, ExactRational c);
  void add_coeff(const Permutation& p, const ExactRational& c);

  struct Evaluation {
    ExactRational value;
    bool truncated = false;  // set when |w| > max_size: tail coefficients unknown
  };
  Evaluation evaluate(const Permutation& w) const;

  bool operator==(const PatternExpansion&) const = default;

 private:
  std::map<Permutation, ExactRational> terms_;  // graded-lex order via Permutation
  int max_size_ = 0;
};

/// Coefficient of [w] in the expansion of `stat`, via the signed sum of stat
/// over all restrictions of w. Throws EvaluatorUndefined if stat fails on a
/// subpattern.
ExactRational coefficient(const StatisticEvaluator& stat, const Permutation& w);

/// Same coefficient through the second route: the signed sum of [p](w)stat(p)
/// over all patterns p. Kept as a cross-check of `coefficient`.
ExactRational coefficient_via_counts(const StatisticEvaluator& stat, const Permutation& w);

/// All coefficients on patterns of size <= max_size.
PatternExpansion expand(const StatisticEvaluator& stat, int max_size);

/// The change-of-basis matrix between statistics and pattern-count functions:
/// entry (row w, column p) equals [p](w), rows and columns in graded-lex
/// order. Lower-triangular with unit diagonal; the inverse is integral.
struct BasisMatrix {
  std::vector<Permutation> patterns;
  std::vector<std::vector<ExactInt>> counts;
  std::optional<std::vector<std::vector<ExactInt>>> inverse;
};
BasisMatrix basis_matrix(int max_size, bool with_inverse = false);

/// Number of ways to write [1,|r|] = I u J with r|_I = p and r|_J = q
/// (ordered pairs, subsets need not be disjoint). Zero when |p|+|q| < |r|.
ExactInt product_coeff(const Permutation& p, const Permutation& q, const Permutation& r);

/// Marked analogue: covers A u B = [1,|r|] where A indexes an h3-calibrated
/// occurrence of (p,h1) in r and B one of (q,h2). Zero when |p|+|q| <= |r|.
ExactInt marked_product_coeff(const MarkedPermutation& mp1, const MarkedPermutation& mp2,
                              const MarkedPermutation& mr);

/// Exact-coefficient polynomials in s variables, stored as normalized
/// monomial lists. Just enough arithmetic to state averaged statistics.
class Polynomial {
 public:
  struct Monomial {
    ExactRational coeff;
    std::vector<int> exponents;  // one entry per variable
  };

  explicit Polynomial(int nvars) : nvars_(nvars) {}
  static Polynomial variable(int index, int nvars);  // 0-based index
  static Polynomial constant(const ExactRational& c, int nvars);

  int nvars() const { return nvars_; }
  const std::vector<Monomial>& monomials() const { return terms_; }

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial pow(int e) const;

 private:
  void add_term(const ExactRational& c, const std::vector<int>& exponents);
  int nvars_;
  std::vector<Monomial> terms_;  // sorted by exponent vector, no zero coefficients
};

/// The finite expansion of sum_{i>=1} f([p_1,h_1,i], ..., [p_s,h_s,i]),
/// computed monomial by monomial with marked products and then summed over
/// marks. f must have no constant term (the averaged sum diverges otherwise).
PatternExpansion expand_averaged_polynomial(const Polynomial& f,
                                            const std::vector<MarkedPermutation>& marks);

/// Average of stat over all of S_n (guarded enumeration).
ExactRational expected_value_exhaustive(const StatisticEvaluator& stat, int n);

/// Closed form: sum over terms of coeff(p) * C(n,|p|) / |p|!.
ExactRational expected_value(const PatternExpansion& expansion, int n);

}  // namespace peps
