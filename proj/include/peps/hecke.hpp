#pragma once

#include "peps/exact.hpp"
#include "peps/permutation.hpp"

namespace peps {

/// s_i applied to v under the Demazure product: s_i v if that increases
/// length, otherwise v unchanged.
Permutation demazure_step(const Permutation& v, int i);

/// Number of words over s_1..s_{n-1} of length l(w) + k whose Demazure
/// product, applied letter by letter from the identity, equals w. At k = 0
/// every step must raise the length, so this reduces to rw_count.
ExactInt hecke_count(const Permutation& w, int k);

}  // namespace peps
