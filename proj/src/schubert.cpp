#include "peps/schubert.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <vector>

#include "peps/guards.hpp"
#include "peps/reduced_words.hpp"

namespace peps {

namespace {

// Number of compatible sequences for a reduced word given in product order.
ExactInt compatible_sequences(const std::vector<int>& a) {
  if (a.empty()) return 1;
  const int maxv = *std::max_element(a.begin(), a.end());
  std::vector<ExactInt> dp(static_cast<size_t>(maxv) + 1, 0);
  for (int v = 1; v <= a[0]; ++v) dp[static_cast<size_t>(v)] = 1;
  for (size_t j = 1; j < a.size(); ++j) {
    const bool strict = a[j - 1] < a[j];
    std::vector<ExactInt> next(static_cast<size_t>(maxv) + 1, 0);
    // admissible previous values are v <= u, or v < u at an ascent of a
    ExactInt prefix = 0;
    int taken = 0;
    for (int u = 1; u <= a[j]; ++u) {
      const int limit = strict ? u - 1 : u;
      while (taken < limit) {
        ++taken;
        prefix += dp[static_cast<size_t>(taken)];
      }
      next[static_cast<size_t>(u)] = prefix;
    }
    dp = std::move(next);
  }
  ExactInt total = 0;
  for (const ExactInt& v : dp) total += v;
  return total;
}

using Exponents = std::vector<int>;
using SchubPolynomial = std::map<Exponents, ExactInt>;

// Divided difference of a monomial in the slots i, i+1 (1-based).
void divided_difference_term(SchubPolynomial& out, const Exponents& e, int i, const ExactInt& c) {
  const size_t lo = static_cast<size_t>(i) - 1;
  const size_t hi = static_cast<size_t>(i);
  const int a = e[lo];
  const int b = e[hi];
  if (a == b) return;
  Exponents scratch = e;
  if (a > b) {
    for (int k = 0; k < a - b; ++k) {
      scratch[lo] = b + k;
      scratch[hi] = a - 1 - k;
      out[scratch] += c;
    }
  } else {
    for (int k = 0; k < b - a; ++k) {
      scratch[lo] = a + k;
      scratch[hi] = b - 1 - k;
      out[scratch] -= c;
    }
  }
}

SchubPolynomial divided_difference(const SchubPolynomial& f, int i) {
  SchubPolynomial out;
  for (const auto& [e, c] : f) divided_difference_term(out, e, i, c);
  std::erase_if(out, [](const auto& entry) { return entry.second == 0; });
  return out;
}

const SchubPolynomial& schubert_polynomial(const Permutation& w) {
  static std::map<Permutation, SchubPolynomial> memo;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);

  auto found = memo.find(w);
  if (found != memo.end()) return found->second;

  // Walk up to the longest element, then differentiate back down.
  std::vector<std::pair<Permutation, int>> path;  // (perm, ascent used)
  Permutation v = w;
  while (!memo.contains(v)) {
    int ascent = 0;
    for (int i = 1; i < v.size(); ++i) {
      if (v(i) < v(i + 1)) {
        ascent = i;
        break;
      }
    }
    if (ascent == 0) {  // longest element: staircase monomial
      Exponents e(static_cast<size_t>(v.size()), 0);
      for (int i = 1; i <= v.size(); ++i) e[static_cast<size_t>(i) - 1] = v.size() - i;
      memo.emplace(v, SchubPolynomial{{std::move(e), ExactInt(1)}});
      break;
    }
    path.emplace_back(v, ascent);
    v = v.times_transposition_right(ascent);
  }
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    const SchubPolynomial& longer = memo.at(it->first.times_transposition_right(it->second));
    memo.emplace(it->first, divided_difference(longer, it->second));
  }
  return memo.at(w);
}

}  // namespace

ExactInt schubert_spec(const Permutation& w) {
  guards::require_rw_letters(length(w), "schubert_spec");
  static std::map<Permutation, ExactInt> memo;
  static std::mutex mu;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(w);
    if (it != memo.end()) return it->second;
  }
  ExactInt total = 0;
  for (const ReducedWord& x : enumerate_rw(w)) {
    std::vector<int> product_order(x.letters.rbegin(), x.letters.rend());
    total += compatible_sequences(product_order);
  }
  std::lock_guard<std::mutex> lock(mu);
  return memo.emplace(w, std::move(total)).first->second;
}

ExactInt schubert_spec_divided_difference(const Permutation& w) {
  guards::require_enum_n(w.size(), "schubert_spec_divided_difference");
  ExactInt total = 0;
  for (const auto& [e, c] : schubert_polynomial(w)) total += c;
  return total;
}

}  // namespace peps
