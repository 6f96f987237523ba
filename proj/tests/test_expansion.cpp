#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "peps/expansion.hpp"
#include "peps/serialize.hpp"

using namespace peps;

namespace {

StatisticEvaluator des_stat() {
  return int_statistic("des", [](const Permutation& w) {
    return ExactInt(static_cast<long long>(descents(w).size()));
  });
}

StatisticEvaluator variance_stat() {
  return int_statistic("variance", [](const Permutation& w) {
    ExactInt total = 0;
    for (int i = 1; i <= w.size(); ++i) total += ExactInt(w(i) - i) * (w(i) - i);
    return total;
  });
}

Permutation P(const char* text) { return Permutation::parse(text); }

}  // namespace

TEST_CASE("descent coefficients") {
  StatisticEvaluator des = des_stat();
  CHECK(coefficient(des, P("21")) == 1);
  CHECK(coefficient(des, P("231")) == -1);
  CHECK(coefficient(des, P("312")) == -1);
  CHECK(coefficient(des, P("321")) == -1);
  CHECK(coefficient(des, P("123")) == 0);
  CHECK(coefficient(des, Permutation()) == 0);
  CHECK(coefficient(variance_stat(), P("2143")) == 0);

  StatisticEvaluator one = int_statistic("one", [](const Permutation&) { return ExactInt(1); });
  CHECK(coefficient(one, Permutation()) == 1);  // single-term sum: stat at the empty permutation
}

TEST_CASE("the two coefficient routes agree") {
  StatisticEvaluator des = des_stat();
  StatisticEvaluator variance = variance_stat();
  for (int n = 0; n <= 5; ++n) {
    for (const Permutation& w : all_permutations(n)) {
      CHECK(coefficient(des, w) == coefficient_via_counts(des, w));
      CHECK(coefficient(variance, w) == coefficient_via_counts(variance, w));
    }
  }
}

TEST_CASE("expand") {
  PatternExpansion des3 = expand(des_stat(), 3);
  REQUIRE(des3.terms().size() == 4);
  CHECK(des3.coeff(P("21")) == 1);
  CHECK(des3.coeff(P("231")) == -1);
  CHECK(des3.coeff(P("312")) == -1);
  CHECK(des3.coeff(P("321")) == -1);
  CHECK(des3.max_size() == 3);

  StatisticEvaluator zero = int_statistic("zero", [](const Permutation&) { return ExactInt(0); });
  CHECK(expand(zero, 4).terms().empty());
}

TEST_CASE("evaluate") {
  PatternExpansion empty(5);
  CHECK(empty.evaluate(P("4231")).value == 0);
  CHECK_FALSE(empty.evaluate(P("4231")).truncated);

  PatternExpansion des3 = expand(des_stat(), 3);
  auto truncated = des3.evaluate(P("4231"));
  CHECK(truncated.truncated);
  CHECK(truncated.value == 1);  // 5 - 1 - 1 - 2 from the size-3 prefix

  PatternExpansion des4 = expand(des_stat(), 4);
  auto exact = des4.evaluate(P("4231"));
  CHECK_FALSE(exact.truncated);
  CHECK(exact.value == 2);

  // evaluating an expansion at |w| <= max_size reproduces the statistic
  for (int n = 0; n <= 4; ++n) {
    for (const Permutation& w : all_permutations(n)) {
      CHECK(des4.evaluate(w).value == ExactRational(des_stat().eval(w)));
    }
  }
}

TEST_CASE("expansion round trip through the basis") {
  PatternExpansion e(4);
  e.set_coeff(P("1"), ExactRational(1) / 2);
  e.set_coeff(P("21"), ExactRational(-3) / 2);
  e.set_coeff(P("2143"), ExactRational(7));
  StatisticEvaluator as_stat{"eval_e",
                             [&e](const Permutation& w) { return e.evaluate(w).value; }};
  CHECK(expand(as_stat, 4) == e);

  // a denser expansion with deterministic pseudo-random rational coefficients
  PatternExpansion dense(3);
  long long seed = 9;
  for (const Permutation& p : patterns_through_size(3)) {
    seed = (seed * 73 + 11) % 97;
    dense.set_coeff(p, ExactRational(seed - 48) / (1 + seed % 5));
  }
  StatisticEvaluator dense_stat{"eval_dense",
                                [&dense](const Permutation& w) { return dense.evaluate(w).value; }};
  CHECK(expand(dense_stat, 3) == dense);
}

TEST_CASE("evaluator failures surface as EvaluatorUndefined") {
  StatisticEvaluator bad{"bad", [](const Permutation& w) -> ExactRational {
                           if (w.is_empty()) throw std::runtime_error("undefined at e");
                           return 0;
                         }};
  CHECK_THROWS_AS(coefficient(bad, P("21")), EvaluatorUndefined);
}

TEST_CASE("basis matrix reproduces the size-3 block") {
  BasisMatrix m = basis_matrix(3, true);
  REQUIRE(m.patterns.size() == 10);
  const long long expected[10][10] = {
      {1, 0, 0, 0, 0, 0, 0, 0, 0, 0},  // e
      {1, 1, 0, 0, 0, 0, 0, 0, 0, 0},  // 1
      {1, 2, 1, 0, 0, 0, 0, 0, 0, 0},  // 12
      {1, 2, 0, 1, 0, 0, 0, 0, 0, 0},  // 21
      {1, 3, 3, 0, 1, 0, 0, 0, 0, 0},  // 123
      {1, 3, 2, 1, 0, 1, 0, 0, 0, 0},  // 132
      {1, 3, 2, 1, 0, 0, 1, 0, 0, 0},  // 213
      {1, 3, 1, 2, 0, 0, 0, 1, 0, 0},  // 231
      {1, 3, 1, 2, 0, 0, 0, 0, 1, 0},  // 312
      {1, 3, 0, 3, 0, 0, 0, 0, 0, 1},  // 321
  };
  for (size_t r = 0; r < 10; ++r) {
    for (size_t c = 0; c < 10; ++c) {
      CHECK(m.counts[r][c] == expected[r][c]);
    }
  }
  CHECK(m.counts[9][3] == 3);  // row 321, column [21]

  REQUIRE(m.inverse.has_value());
  const auto& inv = *m.inverse;
  for (size_t r = 0; r < 10; ++r) {
    for (size_t c = 0; c < 10; ++c) {
      ExactInt acc = 0;
      for (size_t k = 0; k < 10; ++k) acc += m.counts[r][k] * inv[k][c];
      CHECK(acc == (r == c ? 1 : 0));
    }
  }
}

TEST_CASE("matrix equation Mc = s for sample statistics, and exact inverse") {
  BasisMatrix m = basis_matrix(5, true);
  const size_t N = m.patterns.size();
  REQUIRE(N == 154);

  const auto& inv = *m.inverse;
  for (size_t r = 0; r < N; ++r) {
    for (size_t c = 0; c <= r; ++c) {
      ExactInt acc = 0;
      for (size_t k = c; k <= r; ++k) acc += m.counts[r][k] * inv[k][c];
      CHECK(acc == (r == c ? 1 : 0));
    }
  }

  for (const StatisticEvaluator& stat : {des_stat(), variance_stat()}) {
    std::vector<ExactRational> coeffs(N);
    for (size_t i = 0; i < N; ++i) coeffs[i] = coefficient(stat, m.patterns[i]);
    for (size_t r = 0; r < N; ++r) {
      ExactRational acc = 0;
      for (size_t c = 0; c <= r; ++c) {
        if (m.counts[r][c] != 0) acc += ExactRational(m.counts[r][c]) * coeffs[c];
      }
      CHECK(acc == ExactRational(stat.eval(m.patterns[r])));
    }
  }
}

TEST_CASE("product coefficients") {
  CHECK(product_coeff(P("1"), P("1"), P("12")) == 2);
  CHECK(product_coeff(P("1"), P("1"), P("1")) == 1);
  CHECK(product_coeff(P("21"), Permutation(), P("21")) == 1);
  CHECK(product_coeff(P("12"), Permutation(), P("21")) == 0);
  CHECK(product_coeff(P("1"), P("1"), P("123")) == 0);  // |p|+|q| < |r|
}

TEST_CASE("marked product coefficients") {
  MarkedPermutation one(P("1"), 1);
  CHECK(marked_product_coeff(one, one, one) == 1);
  // support condition: zero whenever |p| + |q| <= |r|
  for (const Permutation& r : all_permutations(2)) {
    for (int h = 1; h <= 2; ++h) {
      CHECK(marked_product_coeff(one, one, MarkedPermutation(r, h)) == 0);
    }
  }
  MarkedPermutation m21_1(P("21"), 1);
  CHECK(marked_product_coeff(m21_1, m21_1, MarkedPermutation(P("21"), 1)) == 1);
  CHECK(marked_product_coeff(m21_1, m21_1, MarkedPermutation(P("312"), 1)) == 2);
  CHECK(marked_product_coeff(m21_1, m21_1, MarkedPermutation(P("321"), 1)) == 2);
}

TEST_CASE("averaged polynomials expand marked statistics") {
  Polynomial x = Polynomial::variable(0, 2);
  Polynomial y = Polynomial::variable(1, 2);
  std::vector<MarkedPermutation> marks{MarkedPermutation(P("21"), 1),
                                       MarkedPermutation(P("21"), 2)};

  PatternExpansion linear =
      expand_averaged_polynomial(Polynomial::variable(0, 1), {MarkedPermutation(P("21"), 1)});
  REQUIRE(linear.terms().size() == 1);
  CHECK(linear.coeff(P("21")) == 1);

  PatternExpansion variance = expand_averaged_polynomial((x - y) * (x - y), marks);
  REQUIRE(variance.terms().size() == 4);
  CHECK(variance.coeff(P("21")) == 2);
  CHECK(variance.coeff(P("231")) == 2);
  CHECK(variance.coeff(P("312")) == 2);
  CHECK(variance.coeff(P("321")) == 2);
  CHECK(variance.is_complete());

  Polynomial constant = Polynomial::constant(ExactRational(1), 2);
  CHECK_THROWS_AS(expand_averaged_polynomial((x - y) + constant, marks), std::invalid_argument);

  // the third moment, through the averaging machinery instead of the closed form
  PatternExpansion cubed = expand_averaged_polynomial((x - y).pow(3), marks);
  REQUIRE(cubed.terms().size() == 8);
  CHECK(cubed.coeff(P("312")) == 6);
  CHECK(cubed.coeff(P("231")) == -6);
  for (const char* p : {"4213", "4123", "4132"}) CHECK(cubed.coeff(P(p)) == 6);
  for (const char* p : {"2431", "2341", "3241"}) CHECK(cubed.coeff(P(p)) == -6);
}

TEST_CASE("expected values") {
  StatisticEvaluator des = des_stat();
  for (int n = 2; n <= 7; ++n) {
    CHECK(expected_value_exhaustive(des, n) == ExactRational(n - 1) / 2);
  }
  StatisticEvaluator anything = variance_stat();
  CHECK(expected_value_exhaustive(anything, 0) == ExactRational(anything.eval(Permutation())));

  // E[[p] on S_n] = C(n,k)/k!, cross-checked exhaustively
  Permutation p132 = P("132");
  StatisticEvaluator count132 =
      int_statistic("[132]", [&](const Permutation& w) { return pattern_count(p132, w); });
  for (int n = 0; n <= 6; ++n) {
    ExactRational closed = ExactRational(binomial(n, 3)) / ExactRational(factorial(3));
    CHECK(expected_value_exhaustive(count132, n) == closed);
  }

  // pattern-finite statistic: the closed form matches the exhaustive average
  PatternExpansion v = expand(variance_stat(), 3);
  for (int n = 0; n <= 6; ++n) {
    CHECK(expected_value(v, n) == expected_value_exhaustive(variance_stat(), n));
  }
}

TEST_CASE("serialization is exact and deterministic") {
  PatternExpansion des3 = expand(des_stat(), 3);
  CHECK(expansion_to_csv(des3) == "21,1\n231,-1\n312,-1\n321,-1\n");
  std::string json = expansion_to_json(des3);
  CHECK(json == expansion_to_json(des3));
  CHECK(json.find("\"max_size\": 3") != std::string::npos);
  CHECK(json.find("\"pattern\": \"21\"") != std::string::npos);
  CHECK(json.find("\"coeff\": \"-1\"") != std::string::npos);

  PatternExpansion rational(2);
  rational.set_coeff(P("1"), ExactRational(1) / 2);
  CHECK(expansion_to_csv(rational) == "1,1/2\n");
}

TEST_CASE("size guards") {
  StatisticEvaluator des = des_stat();
  CHECK_THROWS_AS(expand(des, 12), SizeGuardExceeded);
  CHECK_THROWS_AS(basis_matrix(11), SizeGuardExceeded);
  CHECK_THROWS_AS(expected_value_exhaustive(des, 10), SizeGuardExceeded);
}
