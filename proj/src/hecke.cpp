#include "peps/hecke.hpp"

#include <map>
#include <stdexcept>

#include "peps/guards.hpp"

namespace peps {

Permutation demazure_step(const Permutation& v, int i) {
  if (v.position_of(i) < v.position_of(i + 1)) return v.times_transposition_left(i);
  return v;
}

ExactInt hecke_count(const Permutation& w, int k) {
  if (k < 0) throw std::invalid_argument("hecke_count excess must be >= 0");
  const int n = w.size();
  guards::require_enum_n(n, "hecke_count");
  const int steps = length(w) + k;
  guards::require_rw_letters(steps, "hecke_count");

  std::map<Permutation, ExactInt> current{{Permutation::identity(n), ExactInt(1)}};
  for (int step = 0; step < steps; ++step) {
    std::map<Permutation, ExactInt> next;
    for (const auto& [v, ways] : current) {
      for (int i = 1; i < n; ++i) {
        next[demazure_step(v, i)] += ways;
      }
    }
    current = std::move(next);
  }
  auto it = current.find(w);
  return it == current.end() ? ExactInt(0) : it->second;
}

}  // namespace peps
