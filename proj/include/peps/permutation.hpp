#pragma once

#include <compare>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "peps/errors.hpp"
#include "peps/exact.hpp"

namespace peps {

/// A permutation of [1,n] in one-line notation. Positions and values are
/// 1-based; the empty permutation has size 0 and prints as "e".
///
/// Ordering is graded lexicographic: first by size, then by one-line word.
/// This is the order used for every pattern-indexed table in the library.
class Permutation {
 public:
  Permutation() = default;  // the empty permutation

  static Permutation from_one_line(std::span<const int> values);
  static Permutation from_one_line(std::initializer_list<int> values);
  static Permutation identity(int n);
  static Permutation longest_element(int n);  // n, n-1, ..., 1

  /// Parses "3421" (contiguous digits, sizes up to 9), "10,3,2,..."
  /// (comma-separated), or "e" for the empty permutation.
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(word_.size()); }
  bool is_empty() const { return word_.empty(); }
  bool is_identity() const;

  /// Value at 1-based position i, for i in [1, size()].
  int operator()(int i) const { return word_[static_cast<size_t>(i) - 1]; }

  /// 1-based position of a value in [1, size()].
  int position_of(int value) const;

  const std::vector<int>& word() const { return word_; }

  Permutation inverse() const;

  /// w * s_i: swaps the entries at positions i and i+1 (1 <= i < size()).
  Permutation times_transposition_right(int i) const;
  /// s_i * w: swaps the values i and i+1.
  Permutation times_transposition_left(int i) const;

  std::string str() const;

  bool operator==(const Permutation&) const = default;
  std::strong_ordering operator<=>(const Permutation& other) const;

 private:
  explicit Permutation(std::vector<int> word) : word_(std::move(word)) {}
  std::vector<int> word_;
};

/// A strictly increasing set of 1-based positions.
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(std::vector<int> positions);  // validates strict increase, >= 1
  static IndexSet full(int n);
  static IndexSet from_mask(unsigned long long mask);  // bit i-1 selects position i

  int size() const { return static_cast<int>(positions_.size()); }
  bool is_empty() const { return positions_.empty(); }
  int operator[](int k) const { return positions_[static_cast<size_t>(k)]; }  // 0-based access
  bool contains(int position) const;
  int max() const { return positions_.empty() ? 0 : positions_.back(); }
  const std::vector<int>& positions() const { return positions_; }

  auto begin() const { return positions_.begin(); }
  auto end() const { return positions_.end(); }

  bool operator==(const IndexSet&) const = default;
  auto operator<=>(const IndexSet&) const = default;

 private:
  std::vector<int> positions_;
};

/// Positions of K rewritten relative to I; requires K to be a subset of I.
IndexSet relabel_into(const IndexSet& K, const IndexSet& I);

/// A pattern with one distinguished position 1 <= mark <= |pattern|.
struct MarkedPermutation {
  Permutation pattern;
  int mark = 1;

  MarkedPermutation(Permutation p, int h);
  bool operator==(const MarkedPermutation&) const = default;
  auto operator<=>(const MarkedPermutation&) const = default;
};

/// The permutation with the same relative order as `values` (all distinct).
Permutation standardize(std::span<const int> values);

/// w restricted to the positions in I, standardized.
Permutation restrict_to(const Permutation& w, const IndexSet& I);

/// All index sets on which p occurs in w, in strictly increasing lexicographic
/// order and duplicate-free. occurrences(empty, w) is the single empty set.
std::vector<IndexSet> occurrences(const Permutation& p, const Permutation& w);

/// All-subsets oracle for occurrences; guarded to |w| <= 8. Kept independent
/// of the backtracking path so the two can cross-check each other.
std::vector<IndexSet> occurrences_naive(const Permutation& p, const Permutation& w);

long long count_occurrences(const Permutation& p, const Permutation& w);
ExactInt pattern_count(const Permutation& p, const Permutation& w);

/// Occurrences of mp.pattern whose mark-th index equals i.
ExactInt calibrated_count(const MarkedPermutation& mp, int i, const Permutation& w);

/// p above-and-before q: (p # q)(i) = |q| + p(i) for i <= |p|, q(i - |p|) after.
Permutation skew_sum(const Permutation& p, const Permutation& q);

/// Counts of every pattern occurring in w, keyed by pattern (2^|w| subsets).
std::map<Permutation, long long> pattern_count_table(const Permutation& w);

std::vector<int> lehmer_code(const Permutation& w);  // c_i = #{j > i : w(i) > w(j)}
int length(const Permutation& w);                    // inversion count = sum of the code
std::vector<int> descents(const Permutation& w);     // positions i with w(i) > w(i+1)
int major_index(const Permutation& w);

struct ClassicalStats {
  int length = 0;
  std::vector<int> code;
  std::vector<int> descents;
  int major_index = 0;
};
ClassicalStats classical_stats(const Permutation& w);

/// All of S_n in lexicographic order.
std::vector<Permutation> all_permutations(int n);
/// S_0, S_1, ..., S_n concatenated in graded lexicographic order.
std::vector<Permutation> patterns_through_size(int n);

}  // namespace peps
