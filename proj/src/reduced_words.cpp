#include "peps/reduced_words.hpp"

#include <algorithm>
#include <charconv>
#include <mutex>
#include <numeric>

#include "peps/guards.hpp"

namespace peps {

namespace {

// One-line word of a partial product together with value positions, so that
// left multiplication by s_i is O(1) and position lookups are O(1).
struct PartialProduct {
  std::vector<int> word;  // word[pos-1] = value
  std::vector<int> pos;   // pos[value] = position, 1-based, entry 0 unused

  explicit PartialProduct(int n) : word(static_cast<size_t>(n)), pos(static_cast<size_t>(n) + 1) {
    std::iota(word.begin(), word.end(), 1);
    std::iota(pos.begin(), pos.end(), 0);
  }

  int value_at(int position) const { return word[static_cast<size_t>(position) - 1]; }
  int position_of(int value) const { return pos[static_cast<size_t>(value)]; }

  // s_i * u: swaps the values i and i+1.
  void apply_left(int i) {
    int a = pos[static_cast<size_t>(i)];
    int b = pos[static_cast<size_t>(i) + 1];
    std::swap(word[static_cast<size_t>(a) - 1], word[static_cast<size_t>(b) - 1]);
    std::swap(pos[static_cast<size_t>(i)], pos[static_cast<size_t>(i) + 1]);
  }
};

// Index of the crossing inside the restricted configuration: the rank of the
// value i among the values that u takes on I.
int restricted_letter(const PartialProduct& u, const IndexSet& I, int i) {
  int rank = 0;
  for (int c : I) {
    if (u.value_at(c) <= i) ++rank;
  }
  return rank;
}

void check_letter_range(int letter, int n) {
  if (letter < 1 || letter >= n) {
    throw InvalidWord("letter " + std::to_string(letter) + " outside [1," + std::to_string(n - 1) +
                      "]");
  }
}

std::string I_to_string(const IndexSet& I) {
  std::string out = "{";
  for (size_t k = 0; k < I.positions().size(); ++k) {
    if (k > 0) out.push_back(',');
    out += std::to_string(I.positions()[k]);
  }
  out.push_back('}');
  return out;
}

}  // namespace

ReducedWord ReducedWord::parse(std::string_view text) {
  if (text == "e") return ReducedWord();
  std::vector<int> letters;
  size_t start = 0;
  while (start <= text.size()) {
    size_t dot = text.find('.', start);
    std::string_view piece =
        text.substr(start, dot == std::string_view::npos ? std::string_view::npos : dot - start);
    int value = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (ec != std::errc() || ptr != piece.data() + piece.size() || value < 1) {
      throw InvalidWord("cannot parse word letter '" + std::string(piece) + "'");
    }
    letters.push_back(value);
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return ReducedWord(std::move(letters));
}

std::string ReducedWord::str() const {
  if (letters.empty()) return "e";
  std::string out;
  for (size_t i = 0; i < letters.size(); ++i) {
    if (i > 0) out.push_back('.');
    out += std::to_string(letters[i]);
  }
  return out;
}

bool is_reduced_word_for(const ReducedWord& x, const Permutation& w) {
  const int n = w.size();
  PartialProduct u(n);
  for (int letter : x.letters) {
    if (letter < 1 || letter >= n) return false;
    if (u.position_of(letter) > u.position_of(letter + 1)) return false;  // would undo
    u.apply_left(letter);
  }
  return u.word == w.word();
}

namespace {

void enumerate_rw_rec(std::vector<int>& residual, std::vector<int>& prefix,
                      std::vector<ReducedWord>& out) {
  bool any = false;
  const int n = static_cast<int>(residual.size());
  for (int i = 1; i < n; ++i) {
    if (residual[static_cast<size_t>(i) - 1] > residual[static_cast<size_t>(i)]) {
      any = true;
      std::swap(residual[static_cast<size_t>(i) - 1], residual[static_cast<size_t>(i)]);
      prefix.push_back(i);
      enumerate_rw_rec(residual, prefix, out);
      prefix.pop_back();
      std::swap(residual[static_cast<size_t>(i) - 1], residual[static_cast<size_t>(i)]);
    }
  }
  if (!any) out.push_back(ReducedWord(prefix));
}

}  // namespace

std::vector<ReducedWord> enumerate_rw(const Permutation& w) {
  guards::require_rw_letters(length(w), "enumerate_rw");
  std::vector<int> residual = w.word();
  std::vector<int> prefix;
  std::vector<ReducedWord> out;
  enumerate_rw_rec(residual, prefix, out);
  return out;
}

ExactInt rw_count(const Permutation& w) {
  guards::require_enum_n(w.size(), "rw_count");
  static std::map<Permutation, ExactInt> memo;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);

  // Iterative DFS over the memo recursion count(v) = sum over descents i of
  // count(v s_i), with count(identity) = 1.
  std::vector<Permutation> stack{w};
  while (!stack.empty()) {
    Permutation v = stack.back();
    if (memo.contains(v)) {
      stack.pop_back();
      continue;
    }
    if (v.is_identity()) {
      memo.emplace(std::move(v), 1);
      stack.pop_back();
      continue;
    }
    bool ready = true;
    ExactInt total = 0;
    for (int i : descents(v)) {
      Permutation child = v.times_transposition_right(i);
      auto it = memo.find(child);
      if (it == memo.end()) {
        ready = false;
        stack.push_back(std::move(child));
      } else if (ready) {
        total += it->second;
      }
    }
    if (ready) {
      memo.emplace(std::move(v), std::move(total));
      stack.pop_back();
    }
  }
  return memo.at(w);
}

ReducedWord lex_minimal_word(const Permutation& w) {
  std::vector<int> residual = w.word();
  std::vector<int> letters;
  const int n = w.size();
  bool progress = true;
  while (progress) {
    progress = false;
    for (int i = 1; i < n; ++i) {
      if (residual[static_cast<size_t>(i) - 1] > residual[static_cast<size_t>(i)]) {
        std::swap(residual[static_cast<size_t>(i) - 1], residual[static_cast<size_t>(i)]);
        letters.push_back(i);
        progress = true;
        break;
      }
    }
  }
  return ReducedWord(std::move(letters));
}

ReducedWord restrict_word(const ReducedWord& x, const Permutation& w, const IndexSet& I) {
  const int n = w.size();
  if (I.max() > n) throw IndexOutOfRange("restrict_word: index set exceeds |w|");
  PartialProduct u(n);
  std::vector<int> out;
  for (int letter : x.letters) {
    check_letter_range(letter, n);
    int a = u.position_of(letter);
    int b = u.position_of(letter + 1);
    if (a > b) throw InvalidWord("word undoes an inversion; not reduced");
    if (I.contains(a) && I.contains(b)) out.push_back(restricted_letter(u, I, letter));
    u.apply_left(letter);
  }
  if (u.word != w.word()) throw InvalidWord("word does not multiply to the stated permutation");
  return ReducedWord(std::move(out));
}

ReducedWord minimal_lift(const ReducedWord& x, const Permutation& w, const IndexSet& I) {
  const int n = w.size();
  if (I.max() > n) throw IndexOutOfRange("minimal_lift: index set exceeds |w|");
  if (!is_reduced_word_for(x, restrict_to(w, I))) {
    throw InvalidWord("minimal_lift: word is not reduced for the restricted pattern");
  }
  if (I.size() == n) return x;

  PartialProduct u(n);
  std::vector<int> residual = w.word();  // w times the inverse of the partial product
  std::vector<int> letters;
  const int total = length(w);
  int matched = 0;
  letters.reserve(static_cast<size_t>(total));
  for (int step = 0; step < total; ++step) {
    int chosen = 0;
    int chosen_restricted = 0;  // 0 when the letter crosses outside of I
    for (int i = 1; i < n; ++i) {
      if (residual[static_cast<size_t>(i) - 1] <= residual[static_cast<size_t>(i)]) continue;
      int a = u.position_of(i);
      int b = u.position_of(i + 1);
      if (I.contains(a) && I.contains(b)) {
        int j = restricted_letter(u, I, i);
        if (matched < x.size() && x.letters[static_cast<size_t>(matched)] == j) {
          chosen = i;
          chosen_restricted = j;
          break;
        }
      } else {
        chosen = i;
        break;
      }
    }
    if (chosen == 0) {
      throw LiftFailure("greedy lift stalled at step " + std::to_string(step) + " for " + w.str());
    }
    if (chosen_restricted != 0) ++matched;
    letters.push_back(chosen);
    u.apply_left(chosen);
    std::swap(residual[static_cast<size_t>(chosen) - 1], residual[static_cast<size_t>(chosen)]);
  }
  if (matched != x.size()) {
    throw LiftFailure("lift finished without exhausting the pattern word");
  }
  return ReducedWord(std::move(letters));
}

IndexSet essential_index_set(const ReducedWord& x, const Permutation& w) {
  if (!is_reduced_word_for(x, w)) {
    throw InvalidWord("essential_index_set: not a reduced word for " + w.str());
  }
  const int n = w.size();
  std::vector<int> essential;
  for (int i = 1; i <= n; ++i) {
    std::vector<int> positions;
    positions.reserve(static_cast<size_t>(n) - 1);
    for (int j = 1; j <= n; ++j) {
      if (j != i) positions.push_back(j);
    }
    IndexSet deletion(std::move(positions));
    if (minimal_lift(restrict_word(x, w, deletion), w, deletion) != x) {
      essential.push_back(i);
    }
  }
  return IndexSet(std::move(essential));
}

std::vector<ReducedWord> essential_words(const Permutation& w) {
  const IndexSet full = IndexSet::full(w.size());
  std::vector<ReducedWord> out;
  for (const ReducedWord& x : enumerate_rw(w)) {
    if (essential_index_set(x, w) == full) out.push_back(x);
  }
  return out;
}

ExactInt essential_count(const Permutation& w) {
  return ExactInt(static_cast<long long>(essential_words(w).size()));
}

std::map<IndexSet, std::vector<ReducedWord>> partition_by_essential_set(const Permutation& w) {
  std::map<IndexSet, std::vector<ReducedWord>> out;
  for (const ReducedWord& x : enumerate_rw(w)) {
    out[essential_index_set(x, w)].push_back(x);
  }
  return out;
}

IeReport verify_ie_structure(const Permutation& w) {
  IeReport report;
  report.perm = w.str();
  const int n = w.size();
  const std::vector<ReducedWord> words = enumerate_rw(w);
  std::map<ReducedWord, int> id;
  for (size_t k = 0; k < words.size(); ++k) id.emplace(words[k], static_cast<int>(k));

  const size_t nmasks = 1ull << n;
  std::vector<std::vector<char>> image(nmasks, std::vector<char>(words.size(), 0));
  for (size_t mask = 0; mask < nmasks; ++mask) {
    IndexSet I = IndexSet::from_mask(mask);
    for (const ReducedWord& x : enumerate_rw(restrict_to(w, I))) {
      ReducedWord lifted = minimal_lift(x, w, I);
      auto it = id.find(lifted);
      if (it == id.end()) {
        report.violations.push_back("lift from " + I_to_string(I) + " left RW(" + w.str() + ")");
        continue;
      }
      image[mask][static_cast<size_t>(it->second)] = 1;
    }
  }

  for (size_t mi = 0; mi < nmasks; ++mi) {
    for (size_t mj = 0; mj < nmasks; ++mj) {
      ++report.pairs_checked;
      const std::vector<char>& meet = image[mi & mj];
      for (size_t k = 0; k < words.size(); ++k) {
        char both = image[mi][k] & image[mj][k];
        if (both != meet[k]) {
          report.violations.push_back(
              "intersection law fails at I=" + I_to_string(IndexSet::from_mask(mi)) +
              " J=" + I_to_string(IndexSet::from_mask(mj)) + " word " + words[k].str());
        }
      }
    }
  }

  // Composition law along every chain K inside I.
  for (size_t mi = 0; mi < nmasks; ++mi) {
    IndexSet I = IndexSet::from_mask(mi);
    Permutation pI = restrict_to(w, I);
    for (size_t mk = mi;; mk = (mk - 1) & mi) {
      IndexSet K = IndexSet::from_mask(mk);
      IndexSet K_in_I = relabel_into(K, I);
      for (const ReducedWord& x : enumerate_rw(restrict_to(w, K))) {
        ++report.pairs_checked;
        ReducedWord via = minimal_lift(minimal_lift(x, pI, K_in_I), w, I);
        ReducedWord direct = minimal_lift(x, w, K);
        if (via != direct) {
          report.violations.push_back("composition fails for K=" + I_to_string(K) +
                                      " I=" + I_to_string(I) + " word " + x.str());
        }
      }
      if (mk == 0) break;
    }
  }
  return report;
}

ExactInt stanley_w0_count(int n) {
  if (n < 1) throw std::invalid_argument("stanley_w0_count needs n >= 1");
  ExactInt numerator = factorial(n * (n - 1) / 2);
  ExactInt denominator = 1;
  for (int j = 1; j <= n - 1; ++j) {
    denominator *= int_pow(2 * j - 1, n - j);
  }
  return numerator / denominator;
}

}  // namespace peps
