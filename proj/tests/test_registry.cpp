#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <thread>

#include "peps/expansion.hpp"
#include "peps/hecke.hpp"
#include "peps/moments.hpp"
#include "peps/reduced_words.hpp"
#include "peps/registry.hpp"
#include "peps/schubert.hpp"
#include "peps/verify.hpp"

using namespace peps;

namespace {
Permutation P(const char* text) { return Permutation::parse(text); }
}

TEST_CASE("builtin lookups") {
  const StatRegistry& reg = builtin_statistics();
  CHECK(reg.lookup("variance").evaluator.eval(P("321")) == 8);
  CHECK(reg.lookup("rw").evaluator.eval(P("3421")) == 5);
  CHECK(reg.lookup("is_count").evaluator.eval(P("132")) == 6);
  CHECK(reg.lookup("des").evaluator.eval(P("4231")) == 2);
  CHECK(reg.lookup("maj").evaluator.eval(P("3421")) == 5);
  CHECK(reg.lookup("length").evaluator.eval(P("3421")) == 5);
  CHECK(reg.lookup("fixed_points").evaluator.eval(P("1324")) == 2);
  CHECK(reg.lookup("mu_4").evaluator.eval(P("231")) == 18);
  CHECK_THROWS_AS(reg.lookup("nope"), std::out_of_range);
  CHECK(reg.contains("schubert"));
  CHECK(reg.contains("hw_0"));
  CHECK(reg.contains("bmu_2"));
}

TEST_CASE("every builtin is defined at the empty permutation") {
  for (const auto& [name, stat] : builtin_statistics().all()) {
    CHECK_NOTHROW(stat.evaluator.eval(Permutation()));
  }
}

TEST_CASE("variance equals the second moment") {
  const auto& variance = builtin_statistics().lookup("variance").evaluator;
  const auto& mu2 = builtin_statistics().lookup("mu_2").evaluator;
  for (int n = 0; n <= 5; ++n) {
    for (const Permutation& w : all_permutations(n)) {
      CHECK(variance.eval(w) == mu2.eval(w));
    }
  }
}

TEST_CASE("increasing subsequence counts") {
  CHECK(increasing_subsequence_count(Permutation()) == 1);
  CHECK(increasing_subsequence_count(P("1")) == 2);
  CHECK(increasing_subsequence_count(P("132")) == 6);
  CHECK(increasing_subsequence_count(P("12345")) == 32);
  // expansion: supported exactly on identity patterns with coefficient 1
  PatternExpansion e = expand(builtin_statistics().lookup("is_count").evaluator, 4);
  for (const Permutation& p : patterns_through_size(4)) {
    CHECK(e.coeff(p) == (p.is_identity() ? 1 : 0));
  }
}

TEST_CASE("schubert specialization") {
  CHECK(schubert_spec(P("132")) == 2);
  CHECK(schubert_spec(Permutation::identity(4)) == 1);
  CHECK(schubert_spec(Permutation()) == 1);
  CHECK(schubert_spec(P("321")) == 1);
  CHECK(schubert_spec_divided_difference(P("132")) == 2);
  for (int n = 0; n <= 4; ++n) {
    for (const Permutation& w : all_permutations(n)) {
      CHECK(schubert_spec(w) == schubert_spec_divided_difference(w));
    }
  }
  // the first nontrivial expansion coefficients
  const auto& schubert = builtin_statistics().lookup("schubert").evaluator;
  CHECK(coefficient(schubert, P("132")) == 1);
  CHECK(coefficient(schubert, P("1432")) == 1);
  CHECK(coefficient(schubert, Permutation()) == 1);
}

namespace {

// exhaustive word enumeration, independent of the counting DP
long long hecke_count_bruteforce(const Permutation& w, int k) {
  const int n = w.size();
  const int steps = length(w) + k;
  long long count = 0;
  std::vector<int> word(static_cast<size_t>(steps), 1);
  auto product = [&]() {
    Permutation v = Permutation::identity(n);
    for (int letter : word) v = demazure_step(v, letter);
    return v;
  };
  if (steps == 0) return w.is_identity() ? 1 : 0;
  if (n < 2) return 0;
  while (true) {
    if (product() == w) ++count;
    int pos = steps - 1;
    while (pos >= 0 && word[static_cast<size_t>(pos)] == n - 1) {
      word[static_cast<size_t>(pos)] = 1;
      --pos;
    }
    if (pos < 0) break;
    ++word[static_cast<size_t>(pos)];
  }
  return count;
}

}  // namespace

TEST_CASE("hecke word counts") {
  CHECK(hecke_count(P("21"), 1) == 1);
  CHECK(hecke_count(Permutation::identity(3), 0) == 1);
  CHECK(hecke_count(Permutation(), 0) == 1);
  for (int n = 0; n <= 4; ++n) {
    for (const Permutation& w : all_permutations(n)) {
      CHECK(hecke_count(w, 0) == rw_count(w));
      for (int k = 0; k <= 2; ++k) {
        CHECK(hecke_count(w, k) == hecke_count_bruteforce(w, k));
      }
    }
  }
}

TEST_CASE("the two coefficient formulas agree on every builtin") {
  for (const auto& [name, stat] : builtin_statistics().all()) {
    const int bound = std::min(6, stat.meta.max_supported_size);
    for (int n = 0; n <= bound; ++n) {
      for (const Permutation& w : all_permutations(n)) {
        CHECK(coefficient(stat.evaluator, w) == coefficient_via_counts(stat.evaluator, w));
      }
    }
  }
}

TEST_CASE("the matrix equation holds for every builtin through size 5") {
  BasisMatrix m = basis_matrix(5);
  const size_t N = m.patterns.size();
  for (const auto& [name, stat] : builtin_statistics().all()) {
    if (stat.meta.max_supported_size < 5) continue;
    PatternExpansion e = expand(stat.evaluator, 5);
    for (size_t row = 0; row < N; ++row) {
      ExactRational acc = 0;
      for (size_t col = 0; col <= row; ++col) {
        if (m.counts[row][col] != 0) {
          acc += ExactRational(m.counts[row][col]) * e.coeff(m.patterns[col]);
        }
      }
      CHECK(acc == ExactRational(stat.evaluator.eval(m.patterns[row])));
    }
  }
}

TEST_CASE("flagged pattern-finite statistics vanish beyond their support") {
  for (const auto& [name, stat] : builtin_statistics().all()) {
    if (!stat.meta.claimed_pattern_finite) continue;
    const int bound = stat.meta.finite_support_bound;
    const int probe = std::min(bound + 2, 7);
    PatternExpansion e = expand(stat.evaluator, probe);
    for (const auto& [p, c] : e.terms()) {
      CHECK(p.size() <= bound);
    }
  }
}

TEST_CASE("positivity verification holds at small sizes") {
  VerifyReport report = verify_positivity(4);
  CHECK(report.ok());
  CHECK(report.notes.empty());  // the conjectural claims hold at this scale too
}

TEST_CASE("shared memo tables are safe under concurrent evaluation") {
  constexpr int kThreads = 8;
  std::vector<int> ok(kThreads, 0);
  std::vector<std::thread> workers;
  for (int t = 0; t < kThreads; ++t) {
    workers.emplace_back([t, &ok] {
      bool good = true;
      for (int round = 0; round < 3; ++round) {
        good = good && rw_count(Permutation::longest_element(5 + (t + round) % 2)) ==
                           stanley_w0_count(5 + (t + round) % 2);
        good = good && schubert_spec(Permutation::parse("12543")) ==
                           schubert_spec_divided_difference(Permutation::parse("12543"));
        good = good && stirling2(7 + t % 2, 3) == (t % 2 ? 966 : 301);
        good = good && hecke_count(Permutation::parse("321"), 1) ==
                           hecke_count(Permutation::parse("321"), 1);
      }
      ok[static_cast<size_t>(t)] = good ? 1 : 0;
    });
  }
  for (std::thread& worker : workers) worker.join();
  for (int t = 0; t < kThreads; ++t) CHECK(ok[static_cast<size_t>(t)] == 1);
}
