#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "peps/expansion.hpp"
#include "peps/reduced_words.hpp"

using namespace peps;

namespace {
Permutation P(const char* text) { return Permutation::parse(text); }
ReducedWord W(const char* text) { return ReducedWord::parse(text); }
}

TEST_CASE("word text format") {
  CHECK(W("e").is_empty());
  CHECK(W("1.3.2.1.3").letters == std::vector<int>{1, 3, 2, 1, 3});
  CHECK(ReducedWord({2, 1}).str() == "2.1");
  CHECK(ReducedWord().str() == "e");
  CHECK_THROWS_AS(W("1..2"), InvalidWord);
  CHECK_THROWS_AS(W("0.1"), InvalidWord);
}

TEST_CASE("enumeration") {
  auto words = enumerate_rw(P("3421"));
  std::vector<ReducedWord> expected{W("2.1.3.2.1"), W("2.3.1.2.1"), W("2.3.2.1.2"),
                                    W("3.2.1.3.2"), W("3.2.3.1.2")};
  CHECK(words == expected);
  CHECK(std::is_sorted(words.begin(), words.end()));

  CHECK(enumerate_rw(Permutation()).size() == 1);
  CHECK(enumerate_rw(Permutation::identity(4)).size() == 1);
  CHECK(enumerate_rw(P("321")).size() == 2);

  for (const ReducedWord& x : words) CHECK(is_reduced_word_for(x, P("3421")));
  CHECK_FALSE(is_reduced_word_for(W("1.1"), P("3421")));
}

TEST_CASE("counting") {
  CHECK(rw_count(P("3421")) == 5);
  CHECK(rw_count(Permutation()) == 1);
  CHECK(rw_count(P("1")) == 1);
  CHECK(rw_count(Permutation::identity(5)) == 1);
  CHECK(rw_count(P("321")) == 2);
  for (int n = 0; n <= 5; ++n) {
    for (const Permutation& w : all_permutations(n)) {
      CHECK(rw_count(w) == static_cast<long long>(enumerate_rw(w).size()));
    }
  }
}

TEST_CASE("size guard on enumeration") {
  CHECK_THROWS_AS(enumerate_rw(Permutation::longest_element(6)), SizeGuardExceeded);
}

TEST_CASE("restriction of words") {
  // s2 s1 s2 s3 s2 for 3421, applied right to left, restricts to s1 s2 on {1,2,4}
  ReducedWord x = W("2.3.2.1.2");
  CHECK(restrict_word(x, P("3421"), IndexSet({1, 2, 4})) == W("2.1"));
  CHECK(restrict_word(x, P("3421"), IndexSet::full(4)) == x);
  CHECK(restrict_word(x, P("3421"), IndexSet()) == ReducedWord());
  CHECK_THROWS_AS(restrict_word(W("1.2"), P("3421"), IndexSet({1, 2})), InvalidWord);
  CHECK_THROWS_AS(restrict_word(x, P("3421"), IndexSet({5})), IndexOutOfRange);

  // restrictions of reduced words are reduced for the restricted permutation
  for (const Permutation& w : all_permutations(4)) {
    for (const ReducedWord& y : enumerate_rw(w)) {
      for (unsigned long long mask = 0; mask < 16; ++mask) {
        IndexSet I = IndexSet::from_mask(mask);
        CHECK(is_reduced_word_for(restrict_word(y, w, I), restrict_to(w, I)));
      }
    }
  }
}

TEST_CASE("minimal lift reproduces the worked wiring diagram") {
  // s2 s1 s2 in RW(321) lifts to s3 s1 s2 s3 s1 in RW(4231) along {1,3,4}
  ReducedWord lifted = minimal_lift(W("2.1.2"), P("4231"), IndexSet({1, 3, 4}));
  CHECK(lifted == W("1.3.2.1.3"));
  CHECK(restrict_word(lifted, P("4231"), IndexSet({1, 3, 4})) == W("2.1.2"));
}

TEST_CASE("minimal lift edge cases") {
  CHECK(minimal_lift(ReducedWord(), P("321"), IndexSet()) == W("1.2.1"));
  CHECK(lex_minimal_word(P("321")) == W("1.2.1"));
  ReducedWord x = W("2.3.2.1.2");
  CHECK(minimal_lift(x, P("3421"), IndexSet::full(4)) == x);
  CHECK_THROWS_AS(minimal_lift(W("1"), P("3421"), IndexSet({1, 2, 4})), InvalidWord);
}

TEST_CASE("essential index sets match the five wiring diagrams") {
  Permutation w = P("3421");
  CHECK(essential_index_set(W("2.1.3.2.1"), w) == IndexSet());
  CHECK(essential_index_set(W("3.2.1.3.2"), w) == IndexSet({2, 3, 4}));
  CHECK(essential_index_set(W("2.3.2.1.2"), w) == IndexSet({1, 3, 4}));
  CHECK(essential_index_set(W("2.3.1.2.1"), w) == IndexSet::full(4));
  CHECK(essential_index_set(W("3.2.3.1.2"), w) == IndexSet::full(4));

  // every word lifts back from its essential index set
  for (const Permutation& v : all_permutations(4)) {
    for (const ReducedWord& x : enumerate_rw(v)) {
      IndexSet E = essential_index_set(x, v);
      CHECK(minimal_lift(restrict_word(x, v, E), v, E) == x);
      CHECK(essential_index_set(restrict_word(x, v, E), restrict_to(v, E)) ==
            IndexSet::full(E.size()));
    }
  }
}

TEST_CASE("essential words") {
  auto words = essential_words(P("321"));
  REQUIRE(words.size() == 1);
  CHECK(words[0] == W("2.1.2"));
  CHECK(essential_count(P("4321")) == 11);
  CHECK(essential_count(Permutation()) == 1);
  for (int n = 1; n <= 4; ++n) CHECK(essential_count(Permutation::identity(n)) == 0);
  CHECK(essential_count(P("231")) == 0);
}

TEST_CASE("partition by essential set") {
  auto blocks = partition_by_essential_set(P("3421"));
  REQUIRE(blocks.size() == 4);
  CHECK(blocks.at(IndexSet()).size() == 1);
  CHECK(blocks.at(IndexSet({2, 3, 4})).size() == 1);
  CHECK(blocks.at(IndexSet({1, 3, 4})).size() == 1);
  CHECK(blocks.at(IndexSet::full(4)).size() == 2);

  auto id_blocks = partition_by_essential_set(Permutation::identity(4));
  REQUIRE(id_blocks.size() == 1);
  CHECK(id_blocks.begin()->first == IndexSet());

  // blocks cover RW(w), are indexed consistently, and have the predicted sizes
  for (int n = 0; n <= 4; ++n) {
    for (const Permutation& w : all_permutations(n)) {
      auto partition = partition_by_essential_set(w);
      size_t total = 0;
      for (const auto& [I, words] : partition) {
        total += words.size();
        CHECK(ExactInt(static_cast<long long>(words.size())) ==
              essential_count(restrict_to(w, I)));
      }
      CHECK(ExactInt(static_cast<long long>(total)) == rw_count(w));
    }
  }
}

TEST_CASE("partition sizes cover the count through size five") {
  for (const Permutation& w : all_permutations(5)) {
    auto partition = partition_by_essential_set(w);
    size_t total = 0;
    for (const auto& [I, words] : partition) total += words.size();
    CHECK(ExactInt(static_cast<long long>(total)) == rw_count(w));
  }
}

TEST_CASE("inclusion-exclusion structure on small groups") {
  CHECK(verify_ie_structure(Permutation()).ok());
  for (int n = 1; n <= 4; ++n) {
    for (const Permutation& w : all_permutations(n)) {
      IeReport report = verify_ie_structure(w);
      CHECK(report.ok());
      CHECK(report.pairs_checked > 0);
    }
  }
  CHECK(verify_ie_structure(P("4231")).ok());
}

TEST_CASE("essential counts are the expansion coefficients") {
  StatisticEvaluator rw_stat = int_statistic("rw", [](const Permutation& w) { return rw_count(w); });
  for (int n = 0; n <= 5; ++n) {
    for (const Permutation& p : all_permutations(n)) {
      CHECK(ExactRational(essential_count(p)) == coefficient(rw_stat, p));
    }
  }
}

TEST_CASE("the truncated expansion already evaluates the count on 3421") {
  StatisticEvaluator rw_stat = int_statistic("rw", [](const Permutation& w) { return rw_count(w); });
  auto eval = expand(rw_stat, 4).evaluate(Permutation::parse("3421"));
  CHECK_FALSE(eval.truncated);
  CHECK(eval.value == 5);
}

TEST_CASE("stanley formula") {
  CHECK(stanley_w0_count(1) == 1);
  CHECK(stanley_w0_count(2) == 1);
  CHECK(stanley_w0_count(3) == 2);
  CHECK(stanley_w0_count(4) == 16);
  CHECK(stanley_w0_count(5) == 768);
  CHECK(stanley_w0_count(6) == 292864);
  CHECK(stanley_w0_count(7) == 1100742656);
  // the counting recursion reaches past the enumeration guard
  for (int n = 1; n <= 7; ++n) {
    CHECK(stanley_w0_count(n) == rw_count(Permutation::longest_element(n)));
  }
}
