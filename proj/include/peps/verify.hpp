#pragma once

#include <string>
#include <vector>

#include "peps/reduced_words.hpp"

namespace peps {

struct VerifyReport {
  std::string name;
  long long checks = 0;
  std::vector<std::string> violations;  // hard failures
  std::vector<std::string> notes;       // findings on conjectural claims, never failures
  bool ok() const { return violations.empty(); }
};

/// Intersection and composition laws of minimal lifts for every w of size
/// 0..max_n. One report per permutation.
std::vector<IeReport> verify_ie(int max_n);

/// Minimal lifts against exhaustive fibers for every w of size 0..max_n:
/// surjectivity of restriction, lexicographic minimality of the greedy lift,
/// and restrict(lift) = identity.
VerifyReport verify_lifts(int max_n);

/// Product identities: [p][q] = sum of d [r] for |p|,|q| <= 3 on all
/// |w| <= max_w, and the marked analogue for sizes <= 2 at calibrations
/// i <= max_w.
VerifyReport verify_vargas(int max_w);

/// Closed-form moment expansions against direct evaluation, m <= max_m,
/// both flavors, on all |w| <= max_w.
VerifyReport verify_moment_consistency(int max_m, int max_w);

/// Even binomial-moment expected values: closed form against the exhaustive
/// average over S_n for order parameters 1..max_m_param, n <= max_n.
VerifyReport verify_binom_expected(int max_m_param, int max_n);

/// Arithmetic properties of the kappa tables and the binomial reduction
/// identity they are defined by.
VerifyReport verify_kappa_properties(int max_m, int max_w);

/// Vanishing coefficients beyond the support bound, and the skew-sum shape of
/// every support pattern, for moments of order <= max_m.
VerifyReport verify_moment_finiteness(int max_m);

/// Registry statistics flagged pattern-positive: nonnegative coefficients
/// through `bound` and monotonicity under restriction. Conjectural claims
/// (schubert, hw_k for k >= 1) report findings as notes instead of failing.
VerifyReport verify_positivity(int bound);

}  // namespace peps
