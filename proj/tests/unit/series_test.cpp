#include <gtest/gtest.h>

#include "oracles.hpp"
#include "helpers.hpp"
#include "umbral/error.hpp"
#include "umbral/series.hpp"

namespace umbral {
namespace {

using test::q;
using test::ser;

TruncatedSeries euler_g3() { return ser({"1", "1/2", "1/4", "1/12"}); }

void expect_error(const std::function<void()>& fn, std::string_view message) {
  try {
    fn();
    FAIL() << "expected error: " << message;
  } catch (const Error& e) {
    EXPECT_EQ(std::string_view(e.what()), message);
  }
}

TEST(SeriesTest, LinearCombine) {
  using Term = std::pair<Rational, TruncatedSeries>;
  std::vector<Term> sum = {{1, ser({"1", "1"})}, {1, ser({"1", "0"})}};
  EXPECT_EQ(linear_combine(sum), ser({"2", "1"}));

  const auto f = ser({"3", "-1/2", "7"});
  std::vector<Term> cancel = {{-1, f}, {1, f}};
  EXPECT_TRUE(linear_combine(cancel).is_zero());

  // (e^t + 1)/2 from the hand expansion of e^t.
  std::vector<Term> avg = {{q("1/2"), exp_series(1, 3)}, {q("1/2"), TruncatedSeries::one(3)}};
  EXPECT_EQ(linear_combine(avg), euler_g3());

  expect_error([] { linear_combine({}); }, "empty combination");
}

TEST(SeriesTest, LinearCombineTruncatesToMinimum) {
  using Term = std::pair<Rational, TruncatedSeries>;
  std::vector<Term> terms = {{1, exp_series(1, 5)}, {2, exp_series(1, 2)}};
  EXPECT_EQ(linear_combine(terms).truncation(), 2U);
}

TEST(SeriesTest, Order) {
  EXPECT_EQ(order(TruncatedSeries::t(4)), SeriesOrder::finite(1));
  EXPECT_EQ(order(euler_g3()), SeriesOrder::finite(0));
  EXPECT_TRUE(order(TruncatedSeries::zero(5)).is_infinite());
  EXPECT_LT(SeriesOrder::finite(100), SeriesOrder::infinite());
  EXPECT_THROW((void)SeriesOrder::infinite().value(), Error);
}

TEST(SeriesTest, Mul) {
  EXPECT_EQ(mul(TruncatedSeries::t(4), TruncatedSeries::t(4)), TruncatedSeries::monomial(2, 4));
  EXPECT_EQ(mul(euler_g3(), ser({"1", "-1/2", "0", "1/24"})), TruncatedSeries::one(3));
  const auto em1 = ser({"0", "1", "1/2", "1/6"});
  EXPECT_EQ(mul(em1, em1), ser({"0", "0", "1", "1"}));
  EXPECT_EQ(mul(exp_series(1, 6), exp_series(1, 2)).truncation(), 2U);
}

TEST(SeriesTest, Invert) {
  EXPECT_EQ(invert(TruncatedSeries::one(3)), TruncatedSeries::one(3));

  // 2/(e^t+1) = sum E_k t^k / k! with E_k from the Euler number recurrence.
  const auto euler = oracle::euler_numbers(3);
  std::vector<Rational> expected(4);
  for (std::size_t k = 0; k <= 3; ++k) expected[k] = euler[k] / oracle::fact(k);
  EXPECT_EQ(invert(euler_g3()), TruncatedSeries(expected));
  EXPECT_EQ(invert(euler_g3()), ser({"1", "-1/2", "0", "1/24"}));

  expect_error([] { invert(TruncatedSeries::t(3)); }, "not invertible");
  expect_error([] { invert(TruncatedSeries::zero(3)); }, "not invertible");
}

TEST(SeriesTest, Div) {
  const auto em1 = exp_series(1, 4) - TruncatedSeries::one(4);
  EXPECT_EQ(div(em1, TruncatedSeries::t(4)), ser({"1", "1/2", "1/6", "1/24"}));
  EXPECT_EQ(div(TruncatedSeries::monomial(2, 4), TruncatedSeries::t(4)), TruncatedSeries::t(3));
  expect_error([] { div(TruncatedSeries::one(3), TruncatedSeries::t(3)); }, "division leaves a pole");
  expect_error([] { div(TruncatedSeries::one(3), TruncatedSeries::zero(3)); }, "division by zero series");
}

TEST(SeriesTest, Compose) {
  oracle::Gen gen(7);
  const auto f = gen.series(6);
  EXPECT_EQ(compose(f, TruncatedSeries::t(6)), f);
  EXPECT_EQ(compose(exp_series(1, 2), TruncatedSeries::monomial(1, 2, 2)), ser({"1", "2", "2"}));
  EXPECT_EQ(compose(TruncatedSeries::monomial(2, 3), ser({"0", "1", "1", "0"})), ser({"0", "0", "1", "2"}));
  expect_error([] { compose(exp_series(1, 3), exp_series(1, 3)); }, "composition with unit constant term");
}

TEST(SeriesTest, ComposeMatchesNaiveSubstitution) {
  oracle::Gen gen(11);
  for (int i = 0; i < 25; ++i) {
    const auto f = gen.series(8);
    const auto g = gen.series(8, 1);
    EXPECT_EQ(oracle::to_coeffs(compose(f, g)), oracle::naive_compose(oracle::to_coeffs(f), oracle::to_coeffs(g)));
  }
}

TEST(SeriesTest, CompInverse) {
  EXPECT_EQ(comp_inverse(TruncatedSeries::t(5)), TruncatedSeries::t(5));
  // log(1+t) = t - t^2/2 + t^3/3.
  EXPECT_EQ(comp_inverse(exp_series(1, 3) - TruncatedSeries::one(3)), ser({"0", "1", "-1/2", "1/3"}));
  EXPECT_EQ(comp_inverse(TruncatedSeries::monomial(1, 3, 2)), ser({"0", "1/2", "0", "0"}));
  expect_error([] { comp_inverse(exp_series(1, 3)); }, "no compositional inverse");
  expect_error([] { comp_inverse(TruncatedSeries::monomial(2, 3)); }, "no compositional inverse");
}

TEST(SeriesTest, Derivative) {
  const auto d = derivative(TruncatedSeries::monomial(2, 3));
  EXPECT_EQ(d, TruncatedSeries::monomial(1, 2, 2));
  EXPECT_EQ(derivative(exp_series(1, 4)), exp_series(1, 3));
  EXPECT_EQ(derivative(euler_g3()), ser({"1/2", "1/2", "1/4"}));
  EXPECT_EQ(derivative(TruncatedSeries::constant(5, 0)), TruncatedSeries::zero(0));
}

TEST(SeriesTest, ExpSeries) {
  EXPECT_EQ(exp_series(0, 4), TruncatedSeries::one(4));
  EXPECT_EQ(exp_series(1, 3), ser({"1", "1", "1/2", "1/6"}));
  EXPECT_EQ(exp_series(q("1/2"), 2), ser({"1", "1/2", "1/8"}));
}

TEST(SeriesTest, TruncatedRefusesToGrow) {
  EXPECT_THROW((void)exp_series(1, 2).truncated(3), Error);
  EXPECT_THROW(TruncatedSeries(std::vector<Rational>{}), Error);
}

// Properties over a seeded random corpus.

TEST(SeriesPropertyTest, OrderLaws) {
  oracle::Gen gen(2024);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = gen.index(4, 12);
    const auto f = gen.series(n, gen.index(0, 3));
    const auto g = gen.series(n, gen.index(0, 3));
    const std::size_t of = order(f).value();
    const std::size_t og = order(g).value();
    if (of + og <= n) {
      EXPECT_EQ(order(mul(f, g)), SeriesOrder::finite(of + og));
    }
    EXPECT_GE(order(f + g), std::min(order(f), order(g)));
  }
}

TEST(SeriesPropertyTest, InverseRoundTrip) {
  oracle::Gen gen(99);
  for (std::size_t n = 0; n <= 20; ++n) {
    const auto f = gen.series(n);
    EXPECT_EQ(mul(f, invert(f)), TruncatedSeries::one(n));
    EXPECT_EQ(oracle::to_coeffs(invert(f)), oracle::naive_inverse(oracle::to_coeffs(f)));
  }
}

TEST(SeriesPropertyTest, CompositionalInverseBothSides) {
  oracle::Gen gen(5);
  for (int i = 0; i < 20; ++i) {
    const std::size_t n = gen.index(1, 10);
    const auto f = gen.series(n, 1);
    const auto fbar = comp_inverse(f);
    EXPECT_EQ(compose(f, fbar), TruncatedSeries::t(n));
    EXPECT_EQ(compose(fbar, f), TruncatedSeries::t(n));
  }
}

TEST(SeriesPropertyTest, MulCommutativeAssociative) {
  oracle::Gen gen(31);
  for (int i = 0; i < 30; ++i) {
    const std::size_t n = gen.index(0, 10);
    const auto a = gen.series(n);
    const auto b = gen.series(n, gen.index(0, 2));
    const auto c = gen.series(n);
    EXPECT_EQ(mul(a, b), mul(b, a));
    EXPECT_EQ(mul(mul(a, b), c), mul(a, mul(b, c)));
    EXPECT_EQ(oracle::to_coeffs(mul(a, b)), oracle::naive_mul(oracle::to_coeffs(a), oracle::to_coeffs(b)));
  }
}

TEST(SeriesPropertyTest, ExponentialsAdd) {
  oracle::Gen gen(17);
  for (int i = 0; i < 30; ++i) {
    const auto a = gen.rational();
    const auto b = gen.rational();
    const std::size_t n = gen.index(0, 12);
    EXPECT_EQ(mul(exp_series(a, n), exp_series(b, n)), exp_series(a + b, n));
  }
}

TEST(SeriesPropertyTest, PowerMatchesRepeatedProduct) {
  oracle::Gen gen(3);
  for (unsigned k = 0; k < 7; ++k) {
    const auto f = gen.series(8);
    EXPECT_EQ(oracle::to_coeffs(power(f, k)), oracle::naive_pow(oracle::to_coeffs(f), k));
  }
}

}  // namespace
}  // namespace umbral
