#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "peps/exact.hpp"
#include "peps/permutation.hpp"

namespace peps {

/// A reduced word for w, stored in application order: letters (i_1, ..., i_l)
/// with w = s_{i_l} * ... * s_{i_1}, each s_i swapping the values i and i+1.
/// A letter k "creates the inversion (a,b)" when the partial product u built
/// from the earlier letters has u(a) = k and u(b) = k+1 with a < b.
struct ReducedWord {
  std::vector<int> letters;

  ReducedWord() = default;
  explicit ReducedWord(std::vector<int> ls) : letters(std::move(ls)) {}

  /// Parses dot-separated letters in application order, e.g. "1.3.2.1.3";
  /// "e" is the empty word.
  static ReducedWord parse(std::string_view text);
  std::string str() const;

  int size() const { return static_cast<int>(letters.size()); }
  bool is_empty() const { return letters.empty(); }

  bool operator==(const ReducedWord&) const = default;
  auto operator<=>(const ReducedWord&) const = default;
};

bool is_reduced_word_for(const ReducedWord& x, const Permutation& w);

/// Every reduced word of w in lexicographic order (guarded by word length).
std::vector<ReducedWord> enumerate_rw(const Permutation& w);

/// Number of reduced words, via memoized recursion on descents. Reaches
/// farther than enumeration.
ExactInt rw_count(const Permutation& w);

/// Lexicographically least reduced word of w.
ReducedWord lex_minimal_word(const Permutation& w);

/// Restriction map: replays x and keeps only the inversions created between
/// positions of I, each recorded as the adjacent-transposition index of the
/// crossing inside the restricted configuration. Lands in RW(restrict(w, I)).
ReducedWord restrict_word(const ReducedWord& x, const Permutation& w, const IndexSet& I);

/// Minimal lift: the lexicographically least reduced word of w restricting to
/// x, built greedily by always taking the smallest extension whose restriction
/// stays an initial segment of x. Requires x to be reduced for restrict(w, I).
ReducedWord minimal_lift(const ReducedWord& x, const Permutation& w, const IndexSet& I);

/// Positions i such that x is not the minimal lift of its restriction to
/// [1,n] minus {i}.
IndexSet essential_index_set(const ReducedWord& x, const Permutation& w);

/// Reduced words whose essential index set is all of [1,n]. The empty
/// permutation's empty word is essential (there are no deletions to lift from).
std::vector<ReducedWord> essential_words(const Permutation& w);
ExactInt essential_count(const Permutation& w);

/// RW(w) grouped by essential index set. Block at I has exactly
/// essential_count(restrict(w, I)) words.
std::map<IndexSet, std::vector<ReducedWord>> partition_by_essential_set(const Permutation& w);

/// Report for the intersection and composition laws of the lift maps on one w.
struct IeReport {
  std::string perm;
  long long pairs_checked = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks, inside RW(w): image(lift from I cap J) = image(lift from I) cap
/// image(lift from J) for all pairs I, J, and that lifts compose along all
/// chains K inside I.
IeReport verify_ie_structure(const Permutation& w);

/// Reduced-word count of the longest element of S_n:
/// C(n,2)! / (1^(n-1) 3^(n-2) ... (2n-3)^1).
ExactInt stanley_w0_count(int n);

}  // namespace peps
