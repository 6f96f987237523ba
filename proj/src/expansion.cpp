#include "peps/expansion.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "peps/guards.hpp"

namespace peps {

PatternExpansion::PatternExpansion(int max_size) : max_size_(max_size) {
  if (max_size < 0 && max_size != kComplete) {
    throw std::invalid_argument("negative max_size");
  }
}

ExactRational PatternExpansion::coeff(const Permutation& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? ExactRational(0) : it->second;
}

void PatternExpansion::set_coeff(const Permutation& p, ExactRational c) {
  if (!is_complete() && p.size() > max_size_) {
    throw IndexOutOfRange("pattern larger than the expansion's max_size");
  }
  if (c == 0) {
    terms_.erase(p);
  } else {
    terms_[p] = std::move(c);
  }
}

void PatternExpansion::add_coeff(const Permutation& p, const ExactRational& c) {
  set_coeff(p, coeff(p) + c);
}

PatternExpansion::Evaluation PatternExpansion::evaluate(const Permutation& w) const {
  Evaluation out;
  out.value = 0;
  out.truncated = !is_complete() && w.size() > max_size_;
  for (const auto& [p, c] : terms_) {
    if (p.size() > w.size()) break;  // graded order: nothing larger can occur
    out.value += c * ExactRational(pattern_count(p, w));
  }
  return out;
}

namespace {

using StatMemo = std::map<Permutation, ExactRational>;

const ExactRational& memo_eval(const StatisticEvaluator& stat, const Permutation& p,
                               StatMemo& memo) {
  auto it = memo.find(p);
  if (it != memo.end()) return it->second;
  ExactRational value;
  try {
    value = stat.eval(p);
  } catch (const std::exception& e) {
    throw EvaluatorUndefined("statistic '" + stat.name + "' failed at " + p.str() + ": " +
                             e.what());
  }
  return memo.emplace(p, std::move(value)).first->second;
}

ExactRational coefficient_impl(const StatisticEvaluator& stat, const Permutation& w,
                               StatMemo& memo) {
  const int n = w.size();
  guards::require_enum_n(n, "coefficient");
  ExactRational acc = 0;
  std::vector<int> values;
  for (unsigned long long mask = 0; mask < (1ull << n); ++mask) {
    values.clear();
    for (int i = 1; i <= n; ++i) {
      if (mask & (1ull << (i - 1))) values.push_back(w(i));
    }
    const ExactRational& term = memo_eval(stat, standardize(values), memo);
    if ((n - std::popcount(mask)) % 2 == 0) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  return acc;
}

}  // namespace

ExactRational coefficient(const StatisticEvaluator& stat, const Permutation& w) {
  StatMemo memo;
  return coefficient_impl(stat, w, memo);
}

ExactRational coefficient_via_counts(const StatisticEvaluator& stat, const Permutation& w) {
  const int n = w.size();
  guards::require_enum_n(n, "coefficient_via_counts");
  StatMemo memo;
  ExactRational acc = 0;
  for (const auto& [p, count] : pattern_count_table(w)) {
    ExactRational term = ExactRational(count) * memo_eval(stat, p, memo);
    if ((n - p.size()) % 2 == 0) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  return acc;
}

PatternExpansion expand(const StatisticEvaluator& stat, int max_size) {
  if (max_size < 0) throw std::invalid_argument("expand: negative max_size");
  guards::require_enum_n(max_size, "expand");
  PatternExpansion out(max_size);
  StatMemo memo;
  for (const Permutation& p : patterns_through_size(max_size)) {
    ExactRational c = coefficient_impl(stat, p, memo);
    if (c != 0) out.set_coeff(p, std::move(c));
  }
  return out;
}

BasisMatrix basis_matrix(int max_size, bool with_inverse) {
  guards::require_enum_n(max_size, "basis_matrix");
  BasisMatrix out;
  out.patterns = patterns_through_size(max_size);
  const size_t N = out.patterns.size();
  out.counts.assign(N, std::vector<ExactInt>(N));
  for (size_t row = 0; row < N; ++row) {
    for (size_t col = 0; col < N; ++col) {
      if (out.patterns[col].size() > out.patterns[row].size()) break;  // upper part is zero
      out.counts[row][col] = count_occurrences(out.patterns[col], out.patterns[row]);
    }
  }
  if (with_inverse) {
    // Forward substitution; the unit diagonal keeps every entry integral.
    std::vector<std::vector<ExactInt>> inv(N, std::vector<ExactInt>(N));
    for (size_t col = 0; col < N; ++col) {
      inv[col][col] = 1;
      for (size_t row = col + 1; row < N; ++row) {
        ExactInt acc = 0;
        for (size_t k = col; k < row; ++k) {
          if (out.counts[row][k] != 0 && inv[k][col] != 0) {
            acc += out.counts[row][k] * inv[k][col];
          }
        }
        inv[row][col] = -acc;
      }
    }
    out.inverse = std::move(inv);
  }
  return out;
}

namespace {

std::vector<unsigned long long> occurrence_masks(const Permutation& p, const Permutation& r) {
  std::vector<unsigned long long> masks;
  for (const IndexSet& I : occurrences(p, r)) {
    unsigned long long mask = 0;
    for (int i : I) mask |= 1ull << (i - 1);
    masks.push_back(mask);
  }
  return masks;
}

std::vector<unsigned long long> calibrated_masks(const MarkedPermutation& mp, int at,
                                                 const Permutation& r) {
  std::vector<unsigned long long> masks;
  for (const IndexSet& I : occurrences(mp.pattern, r)) {
    if (I[mp.mark - 1] != at) continue;
    unsigned long long mask = 0;
    for (int i : I) mask |= 1ull << (i - 1);
    masks.push_back(mask);
  }
  return masks;
}

long long count_covering_pairs(const std::vector<unsigned long long>& left,
                               const std::vector<unsigned long long>& right,
                               unsigned long long full) {
  long long count = 0;
  for (unsigned long long a : left) {
    for (unsigned long long b : right) {
      if ((a | b) == full) ++count;
    }
  }
  return count;
}

}  // namespace

ExactInt product_coeff(const Permutation& p, const Permutation& q, const Permutation& r) {
  if (p.size() + q.size() < r.size()) return 0;
  const unsigned long long full = (r.size() == 0) ? 0 : (1ull << r.size()) - 1;
  return count_covering_pairs(occurrence_masks(p, r), occurrence_masks(q, r), full);
}

ExactInt marked_product_coeff(const MarkedPermutation& mp1, const MarkedPermutation& mp2,
                              const MarkedPermutation& mr) {
  if (mp1.pattern.size() + mp2.pattern.size() <= mr.pattern.size()) return 0;
  const Permutation& r = mr.pattern;
  const unsigned long long full = (1ull << r.size()) - 1;
  return count_covering_pairs(calibrated_masks(mp1, mr.mark, r),
                              calibrated_masks(mp2, mr.mark, r), full);
}

Polynomial Polynomial::variable(int index, int nvars) {
  if (index < 0 || index >= nvars) throw std::invalid_argument("variable index out of range");
  Polynomial out(nvars);
  std::vector<int> exponents(static_cast<size_t>(nvars), 0);
  exponents[static_cast<size_t>(index)] = 1;
  out.terms_.push_back({ExactRational(1), std::move(exponents)});
  return out;
}

Polynomial Polynomial::constant(const ExactRational& c, int nvars) {
  Polynomial out(nvars);
  if (c != 0) out.terms_.push_back({c, std::vector<int>(static_cast<size_t>(nvars), 0)});
  return out;
}

void Polynomial::add_term(const ExactRational& c, const std::vector<int>& exponents) {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), exponents,
      [](const Monomial& m, const std::vector<int>& e) { return m.exponents < e; });
  if (it != terms_.end() && it->exponents == exponents) {
    it->coeff += c;
    if (it->coeff == 0) terms_.erase(it);
  } else if (c != 0) {
    terms_.insert(it, {c, exponents});
  }
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  if (nvars_ != other.nvars_) throw std::invalid_argument("mixed variable counts");
  Polynomial out = *this;
  for (const Monomial& m : other.terms_) out.add_term(m.coeff, m.exponents);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  if (nvars_ != other.nvars_) throw std::invalid_argument("mixed variable counts");
  Polynomial out = *this;
  for (const Monomial& m : other.terms_) out.add_term(-m.coeff, m.exponents);
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  if (nvars_ != other.nvars_) throw std::invalid_argument("mixed variable counts");
  Polynomial out(nvars_);
  std::vector<int> exponents(static_cast<size_t>(nvars_));
  for (const Monomial& a : terms_) {
    for (const Monomial& b : other.terms_) {
      for (int v = 0; v < nvars_; ++v) {
        exponents[static_cast<size_t>(v)] =
            a.exponents[static_cast<size_t>(v)] + b.exponents[static_cast<size_t>(v)];
      }
      out.add_term(a.coeff * b.coeff, exponents);
    }
  }
  return out;
}

Polynomial Polynomial::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative polynomial power");
  Polynomial out = constant(ExactRational(1), nvars_);
  for (int i = 0; i < e; ++i) out = out * (*this);
  return out;
}

namespace {

// Finitely supported combination of marked pattern-count functions at a
// common calibration index.
using MarkedElement = std::map<MarkedPermutation, ExactRational>;

MarkedElement multiply_marked(const MarkedElement& lhs, const MarkedElement& rhs) {
  MarkedElement out;
  for (const auto& [mp1, c1] : lhs) {
    for (const auto& [mp2, c2] : rhs) {
      const ExactRational weight = c1 * c2;
      const int lo = std::max(mp1.pattern.size(), mp2.pattern.size());
      const int hi = mp1.pattern.size() + mp2.pattern.size() - 1;
      for (int size = lo; size <= hi; ++size) {
        for (const Permutation& r : all_permutations(size)) {
          for (int h = 1; h <= size; ++h) {
            MarkedPermutation mr(r, h);
            ExactInt d = marked_product_coeff(mp1, mp2, mr);
            if (d != 0) out[mr] += weight * ExactRational(d);
          }
        }
      }
    }
  }
  std::erase_if(out, [](const auto& entry) { return entry.second == 0; });
  return out;
}

}  // namespace

PatternExpansion expand_averaged_polynomial(const Polynomial& f,
                                            const std::vector<MarkedPermutation>& marks) {
  if (static_cast<size_t>(f.nvars()) != marks.size()) {
    throw std::invalid_argument("polynomial arity does not match the number of marks");
  }
  MarkedElement total;
  for (const Polynomial::Monomial& monomial : f.monomials()) {
    int degree = 0;
    for (int e : monomial.exponents) degree += e;
    if (degree == 0) {
      throw std::invalid_argument("constant term has no finite averaged expansion");
    }
    MarkedElement element;
    bool first = true;
    for (size_t v = 0; v < marks.size(); ++v) {
      for (int rep = 0; rep < monomial.exponents[v]; ++rep) {
        MarkedElement factor{{marks[v], ExactRational(1)}};
        element = first ? std::move(factor) : multiply_marked(element, factor);
        first = false;
      }
    }
    for (const auto& [mp, c] : element) total[mp] += monomial.coeff * c;
  }
  PatternExpansion out(PatternExpansion::kComplete);
  for (const auto& [mp, c] : total) out.add_coeff(mp.pattern, c);
  return out;
}

ExactRational expected_value_exhaustive(const StatisticEvaluator& stat, int n) {
  guards::require_enum_n(n, "expected_value_exhaustive");
  StatMemo memo;
  ExactRational total = 0;
  for (const Permutation& w : all_permutations(n)) total += memo_eval(stat, w, memo);
  return total / ExactRational(factorial(n));
}

ExactRational expected_value(const PatternExpansion& expansion, int n) {
  ExactRational total = 0;
  for (const auto& [p, c] : expansion.terms()) {
    const int k = p.size();
    if (k > n) break;
    total += c * ExactRational(binomial(n, k)) / ExactRational(factorial(k));
  }
  return total;
}

}  // namespace peps
