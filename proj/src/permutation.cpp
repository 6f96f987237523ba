#include "peps/permutation.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>

namespace peps {

namespace {

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  size_t start = 0;
  while (start <= text.size()) {
    size_t comma = text.find(',', start);
    std::string_view piece = text.substr(start, comma == std::string_view::npos
                                                    ? std::string_view::npos
                                                    : comma - start);
    int value = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (ec != std::errc() || ptr != piece.data() + piece.size()) {
      throw NotAPermutation("cannot parse permutation entry '" + std::string(piece) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

Permutation Permutation::from_one_line(std::span<const int> values) {
  const int n = static_cast<int>(values.size());
  std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
  for (int v : values) {
    if (v < 1 || v > n) {
      throw NotAPermutation("entry " + std::to_string(v) + " outside [1," + std::to_string(n) + "]");
    }
    if (seen[static_cast<size_t>(v)]) {
      throw NotAPermutation("duplicate entry " + std::to_string(v));
    }
    seen[static_cast<size_t>(v)] = 1;
  }
  return Permutation(std::vector<int>(values.begin(), values.end()));
}

Permutation Permutation::from_one_line(std::initializer_list<int> values) {
  return from_one_line(std::span<const int>(values.begin(), values.size()));
}

Permutation Permutation::identity(int n) {
  std::vector<int> word(static_cast<size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  return Permutation(std::move(word));
}

Permutation Permutation::longest_element(int n) {
  std::vector<int> word(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) word[static_cast<size_t>(i)] = n - i;
  return Permutation(std::move(word));
}

Permutation Permutation::parse(std::string_view text) {
  if (text == "e") return Permutation();
  if (text.empty()) throw NotAPermutation("empty permutation text (use \"e\")");
  if (text.find(',') != std::string_view::npos) {
    auto values = parse_int_list(text);
    return from_one_line(values);
  }
  std::vector<int> values;
  values.reserve(text.size());
  for (char c : text) {
    if (c < '1' || c > '9') {
      throw NotAPermutation("unexpected character '" + std::string(1, c) +
                            "' in permutation text");
    }
    values.push_back(c - '0');
  }
  return from_one_line(values);
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i) {
    if (word_[static_cast<size_t>(i)] != i + 1) return false;
  }
  return true;
}

int Permutation::position_of(int value) const {
  for (int i = 1; i <= size(); ++i) {
    if ((*this)(i) == value) return i;
  }
  throw IndexOutOfRange("value " + std::to_string(value) + " not present");
}

Permutation Permutation::inverse() const {
  std::vector<int> word(word_.size());
  for (int i = 1; i <= size(); ++i) word[static_cast<size_t>((*this)(i)) - 1] = i;
  return Permutation(std::move(word));
}

Permutation Permutation::times_transposition_right(int i) const {
  if (i < 1 || i >= size()) throw IndexOutOfRange("transposition index out of range");
  std::vector<int> word = word_;
  std::swap(word[static_cast<size_t>(i) - 1], word[static_cast<size_t>(i)]);
  return Permutation(std::move(word));
}

Permutation Permutation::times_transposition_left(int i) const {
  if (i < 1 || i >= size()) throw IndexOutOfRange("transposition index out of range");
  std::vector<int> word = word_;
  for (int& v : word) {
    if (v == i) {
      v = i + 1;
    } else if (v == i + 1) {
      v = i;
    }
  }
  return Permutation(std::move(word));
}

std::string Permutation::str() const {
  if (word_.empty()) return "e";
  std::string out;
  if (size() <= 9) {
    for (int v : word_) out.push_back(static_cast<char>('0' + v));
    return out;
  }
  for (size_t i = 0; i < word_.size(); ++i) {
    if (i > 0) out.push_back(',');
    out += std::to_string(word_[i]);
  }
  return out;
}

std::strong_ordering Permutation::operator<=>(const Permutation& other) const {
  if (auto c = size() <=> other.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(word_.begin(), word_.end(),
                                                other.word_.begin(), other.word_.end());
}

IndexSet::IndexSet(std::vector<int> positions) : positions_(std::move(positions)) {
  for (size_t k = 0; k < positions_.size(); ++k) {
    if (positions_[k] < 1 || (k > 0 && positions_[k] <= positions_[k - 1])) {
      throw IndexOutOfRange("index set must be strictly increasing and >= 1");
    }
  }
}

IndexSet IndexSet::full(int n) {
  std::vector<int> positions(static_cast<size_t>(n));
  std::iota(positions.begin(), positions.end(), 1);
  return IndexSet(std::move(positions));
}

IndexSet IndexSet::from_mask(unsigned long long mask) {
  std::vector<int> positions;
  for (int i = 1; mask != 0; ++i, mask >>= 1) {
    if (mask & 1ull) positions.push_back(i);
  }
  return IndexSet(std::move(positions));
}

bool IndexSet::contains(int position) const {
  return std::binary_search(positions_.begin(), positions_.end(), position);
}

IndexSet relabel_into(const IndexSet& K, const IndexSet& I) {
  std::vector<int> out;
  out.reserve(static_cast<size_t>(K.size()));
  for (int k : K) {
    auto it = std::lower_bound(I.begin(), I.end(), k);
    if (it == I.end() || *it != k) {
      throw IndexOutOfRange("relabel_into: K is not a subset of I");
    }
    out.push_back(static_cast<int>(it - I.begin()) + 1);
  }
  return IndexSet(std::move(out));
}

MarkedPermutation::MarkedPermutation(Permutation p, int h) : pattern(std::move(p)), mark(h) {
  if (pattern.is_empty()) throw NotAPermutation("marked permutation needs a nonempty pattern");
  if (mark < 1 || mark > pattern.size()) {
    throw IndexOutOfRange("mark " + std::to_string(mark) + " outside [1," +
                          std::to_string(pattern.size()) + "]");
  }
}

Permutation standardize(std::span<const int> values) {
  const int h = static_cast<int>(values.size());
  std::vector<int> word(static_cast<size_t>(h));
  for (int i = 0; i < h; ++i) {
    int rank = 1;
    for (int j = 0; j < h; ++j) {
      if (values[static_cast<size_t>(j)] < values[static_cast<size_t>(i)]) ++rank;
    }
    word[static_cast<size_t>(i)] = rank;
  }
  return Permutation::from_one_line(word);
}

Permutation restrict_to(const Permutation& w, const IndexSet& I) {
  if (I.max() > w.size()) {
    throw IndexOutOfRange("index set reaches position " + std::to_string(I.max()) +
                          " in a permutation of size " + std::to_string(w.size()));
  }
  std::vector<int> values;
  values.reserve(static_cast<size_t>(I.size()));
  for (int i : I) values.push_back(w(i));
  return standardize(values);
}

namespace {

// Backtracking over positions with pruning by partial order-isomorphism.
template <typename Visit>
void occurrence_dfs(const Permutation& p, const Permutation& w, std::vector<int>& chosen,
                    int next_pos, Visit&& visit) {
  const int k = p.size();
  const int depth = static_cast<int>(chosen.size());
  if (depth == k) {
    visit(chosen);
    return;
  }
  const int n = w.size();
  for (int pos = next_pos; pos <= n - (k - depth) + 1; ++pos) {
    bool ok = true;
    for (int t = 0; t < depth && ok; ++t) {
      ok = (w(pos) > w(chosen[static_cast<size_t>(t)])) == (p(depth + 1) > p(t + 1));
    }
    if (!ok) continue;
    chosen.push_back(pos);
    occurrence_dfs(p, w, chosen, pos + 1, visit);
    chosen.pop_back();
  }
}

}  // namespace

std::vector<IndexSet> occurrences(const Permutation& p, const Permutation& w) {
  std::vector<IndexSet> out;
  std::vector<int> chosen;
  occurrence_dfs(p, w, chosen, 1,
                 [&](const std::vector<int>& positions) { out.push_back(IndexSet(positions)); });
  return out;
}

std::vector<IndexSet> occurrences_naive(const Permutation& p, const Permutation& w) {
  if (w.size() > 8) throw SizeGuardExceeded("occurrences_naive is guarded to |w| <= 8");
  std::vector<IndexSet> out;
  const int n = w.size();
  for (unsigned long long mask = 0; mask < (1ull << n); ++mask) {
    if (std::popcount(mask) != p.size()) continue;
    IndexSet I = IndexSet::from_mask(mask);
    if (restrict_to(w, I) == p) out.push_back(std::move(I));
  }
  std::sort(out.begin(), out.end());
  return out;
}

long long count_occurrences(const Permutation& p, const Permutation& w) {
  long long count = 0;
  std::vector<int> chosen;
  occurrence_dfs(p, w, chosen, 1, [&](const std::vector<int>&) { ++count; });
  return count;
}

ExactInt pattern_count(const Permutation& p, const Permutation& w) {
  return ExactInt(count_occurrences(p, w));
}

ExactInt calibrated_count(const MarkedPermutation& mp, int i, const Permutation& w) {
  if (i < 1) throw IndexOutOfRange("calibration position must be >= 1");
  if (i > w.size()) return 0;
  long long count = 0;
  std::vector<int> chosen;
  occurrence_dfs(mp.pattern, w, chosen, 1, [&](const std::vector<int>& positions) {
    if (positions[static_cast<size_t>(mp.mark) - 1] == i) ++count;
  });
  return ExactInt(count);
}

Permutation skew_sum(const Permutation& p, const Permutation& q) {
  const int a = p.size();
  const int b = q.size();
  std::vector<int> word;
  word.reserve(static_cast<size_t>(a + b));
  for (int i = 1; i <= a; ++i) word.push_back(b + p(i));
  for (int i = 1; i <= b; ++i) word.push_back(q(i));
  return Permutation::from_one_line(word);
}

std::map<Permutation, long long> pattern_count_table(const Permutation& w) {
  std::map<Permutation, long long> table;
  const int n = w.size();
  std::vector<int> values;
  for (unsigned long long mask = 0; mask < (1ull << n); ++mask) {
    values.clear();
    for (int i = 1; i <= n; ++i) {
      if (mask & (1ull << (i - 1))) values.push_back(w(i));
    }
    ++table[standardize(values)];
  }
  return table;
}

std::vector<int> lehmer_code(const Permutation& w) {
  const int n = w.size();
  std::vector<int> code(static_cast<size_t>(n), 0);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (w(i) > w(j)) ++code[static_cast<size_t>(i) - 1];
    }
  }
  return code;
}

int length(const Permutation& w) {
  int total = 0;
  for (int c : lehmer_code(w)) total += c;
  return total;
}

std::vector<int> descents(const Permutation& w) {
  std::vector<int> out;
  for (int i = 1; i < w.size(); ++i) {
    if (w(i) > w(i + 1)) out.push_back(i);
  }
  return out;
}

int major_index(const Permutation& w) {
  int total = 0;
  for (int d : descents(w)) total += d;
  return total;
}

ClassicalStats classical_stats(const Permutation& w) {
  ClassicalStats out;
  out.code = lehmer_code(w);
  for (int c : out.code) out.length += c;
  out.descents = descents(w);
  for (int d : out.descents) out.major_index += d;
  return out;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> word(static_cast<size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_one_line(word));
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

std::vector<Permutation> patterns_through_size(int n) {
  std::vector<Permutation> out;
  for (int k = 0; k <= n; ++k) {
    auto perms = all_permutations(k);
    out.insert(out.end(), perms.begin(), perms.end());
  }
  return out;
}

}  // namespace peps
