#pragma once

#include "peps/exact.hpp"
#include "peps/permutation.hpp"

namespace peps {

/// Principal specialization of the Schubert polynomial, computed with the
/// compatible-sequence model: pairs (a, b) where a is a reduced word in
/// product order w = s_{a_1} ... s_{a_l}, b is weakly increasing with
/// b_j <= a_j, and b_j < b_{j+1} whenever a_j < a_{j+1}.
ExactInt schubert_spec(const Permutation& w);

/// Same statistic from the opposite direction: the Schubert polynomial built
/// by divided differences from the staircase monomial, evaluated at all ones.
/// Independent of schubert_spec so the two can guard each other.
ExactInt schubert_spec_divided_difference(const Permutation& w);

}  // namespace peps
