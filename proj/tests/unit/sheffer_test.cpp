#include <gtest/gtest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "umbral/error.hpp"
#include "umbral/pairing.hpp"
#include "umbral/sheffer.hpp"

namespace umbral {
namespace {

using test::poly;
using test::q;

TruncatedSeries euler_g(std::size_t n) { return TruncatedSeries(oracle::euler_g(n)); }
TruncatedSeries bernoulli_g(std::size_t n) { return TruncatedSeries(oracle::bernoulli_g(n)); }

Polynomial falling_factorial(std::size_t n) {
  Polynomial out = Polynomial::constant(1);
  for (std::size_t j = 0; j < n; ++j) out = out * poly({std::to_string(-static_cast<long>(j)), "1"});
  return out;
}

TEST(AppellTest, Examples) {
  EXPECT_EQ(appell_sequence(euler_g(2), 2),
            (std::vector<Polynomial>{Polynomial::constant(1), poly({"-1/2", "1"}), poly({"0", "-1", "1"})}));
  const auto monomials = appell_sequence(TruncatedSeries::one(4), 4);
  for (std::size_t k = 0; k <= 4; ++k) EXPECT_EQ(monomials[k], Polynomial::monomial(k));
  const auto g2 = mul(euler_g(1), euler_g(1));
  EXPECT_EQ(appell_sequence(g2, 1), (std::vector<Polynomial>{Polynomial::constant(1), poly({"-1", "1"})}));
  EXPECT_THROW(appell_sequence(TruncatedSeries::t(3), 2), Error);
  EXPECT_THROW(appell_sequence(euler_g(1), 2), Error);
}

TEST(ShefferTest, Examples) {
  EXPECT_EQ(sheffer_sequence(euler_g(6), TruncatedSeries::t(6), 6), appell_sequence(euler_g(6), 6));
  const auto monomials = sheffer_sequence(TruncatedSeries::one(3), TruncatedSeries::t(3), 3);
  for (std::size_t k = 0; k <= 3; ++k) EXPECT_EQ(monomials[k], Polynomial::monomial(k));
  const auto assoc = sheffer_sequence(TruncatedSeries::one(2), exp_series(1, 2) - TruncatedSeries::one(2), 2);
  EXPECT_EQ(assoc, (std::vector<Polynomial>{Polynomial::constant(1), Polynomial::x(), poly({"0", "-1", "1"})}));
}

TEST(ShefferTest, AssociatedSequenceOfExpMinusOneIsFallingFactorial) {
  const std::size_t n = 8;
  const auto seq = sheffer_sequence(TruncatedSeries::one(n), exp_series(1, n) - TruncatedSeries::one(n), n);
  for (std::size_t k = 0; k <= n; ++k) EXPECT_EQ(seq[k], falling_factorial(k));
}

TEST(ShefferTest, RejectsWrongOrders) {
  EXPECT_THROW(sheffer_sequence(TruncatedSeries::t(3), TruncatedSeries::t(3), 2), Error);
  EXPECT_THROW(sheffer_sequence(euler_g(3), euler_g(3), 2), Error);
  EXPECT_THROW(ShefferSystem(euler_g(3), TruncatedSeries::monomial(2, 3), 3), Error);
}

TEST(ShefferSystemTest, Biorthogonality) {
  const auto euler = ShefferSystem::appell(euler_g(5), 5, "euler");
  EXPECT_TRUE(check_biorthogonality(euler, 5).equal());

  const auto euler3 = ShefferSystem::appell(power(euler_g(4), 3), 4, "euler^3");
  EXPECT_TRUE(check_biorthogonality(euler3, 4).equal());

  auto basis = euler.basis();
  basis[2] += Polynomial::constant(1);
  const ShefferSystem broken(euler.g(), euler.f(), basis, "broken");
  const auto report = check_biorthogonality(broken, 5);
  EXPECT_FALSE(report.equal());
  ASSERT_TRUE(report.witness);
  // (n, k) = (2, 0) in the row-major table of width 6.
  EXPECT_EQ(*report.witness, 2U * 6U + 0U);
}

TEST(ShefferSystemTest, SuppliedBasisDegreesAreValidated) {
  std::vector<Polynomial> basis = {Polynomial::constant(1), Polynomial::monomial(2)};
  EXPECT_THROW(ShefferSystem(euler_g(2), TruncatedSeries::t(2), basis, "bad"), Error);
}

TEST(ShefferSystemTest, ExpandInSheffer) {
  const auto euler = ShefferSystem::appell(euler_g(6), 6, "euler");
  const auto r = expand_in_sheffer(Polynomial::monomial(2), euler);
  EXPECT_EQ(r.coefficients, test::qs({"1/2", "1", "1"}));
  EXPECT_EQ(r.basis, "euler");
  EXPECT_EQ(expand_in_sheffer(euler[3], euler).coefficients, test::qs({"0", "0", "0", "1"}));
  EXPECT_TRUE(expand_in_sheffer(Polynomial(), euler).coefficients.empty());
  EXPECT_THROW(expand_in_sheffer(Polynomial::monomial(7), euler), Error);
}

TEST(ShefferSystemTest, ExpandFunctional) {
  const std::size_t n = 6;
  const auto euler = ShefferSystem::appell(euler_g(n), n, "euler");
  const auto lambda = expand_functional_in_sheffer(euler.dual(2), euler, n);
  EXPECT_EQ(lambda, test::qs({"0", "0", "1", "0", "0", "0", "0"}));

  const auto e = exp_series(1, n);
  EXPECT_EQ(recombine_functional(expand_functional_in_sheffer(e, euler, n), euler), e);

  const auto zeros = expand_functional_in_sheffer(TruncatedSeries::zero(n), euler, n);
  EXPECT_EQ(zeros, std::vector<Rational>(n + 1));
}

TEST(ShefferSystemTest, Lowering) {
  const auto euler = ShefferSystem::appell(euler_g(3), 3, "euler");
  EXPECT_TRUE(lowering_check(euler, 3).equal());
  EXPECT_TRUE(lowering_check(euler, 0).equal());
  const auto euler2 = ShefferSystem::appell(power(euler_g(2), 2), 2, "euler^2");
  EXPECT_TRUE(lowering_check(euler2, 2).equal());

  const auto assoc = ShefferSystem(TruncatedSeries::one(5), exp_series(1, 5) - TruncatedSeries::one(5), 5);
  for (std::size_t n = 0; n <= 5; ++n) EXPECT_TRUE(lowering_check(assoc, n).equal());
}

TEST(ShefferPropertyTest, AppellAndShefferPathsAgree) {
  const std::size_t n = 15;
  for (const auto& g : {euler_g(n), power(euler_g(n), 2), bernoulli_g(n)}) {
    EXPECT_EQ(appell_sequence(g, n), sheffer_sequence(g, TruncatedSeries::t(n), n));
  }
}

TEST(ShefferPropertyTest, RandomSystemsAreBiorthogonal) {
  oracle::Gen gen(55);
  for (int i = 0; i < 10; ++i) {
    const std::size_t n = gen.index(1, 7);
    const ShefferSystem sys(gen.series(n), gen.series(n, 1), n);
    EXPECT_TRUE(check_biorthogonality(sys, n).equal());
    for (std::size_t k = 0; k <= n; ++k) EXPECT_TRUE(lowering_check(sys, k).equal());
  }
}

TEST(ShefferPropertyTest, AppellIdentity) {
  oracle::Gen gen(66);
  for (const auto& g : {euler_g(10), power(euler_g(10), 3), bernoulli_g(10), gen.series(10)}) {
    const auto seq = appell_sequence(g, 10);
    for (std::size_t n = 0; n <= 10; ++n) {
      const Rational y = gen.rational();
      Polynomial rhs;
      for (std::size_t k = 0; k <= n; ++k) rhs += (oracle::choose(n, k) * pow(y, k)) * seq[n - k];
      EXPECT_EQ(shift(seq[n], y), rhs);
    }
  }
}

TEST(ShefferPropertyTest, ExpansionRoundTrip) {
  oracle::Gen gen(67);
  const auto sys = ShefferSystem(gen.series(9), gen.series(9, 1), 9);
  for (int i = 0; i < 20; ++i) {
    const auto p = gen.polynomial(gen.index(0, 9));
    EXPECT_EQ(recombine(expand_in_sheffer(p, sys).coefficients, sys), p);
  }
}

TEST(ShefferPropertyTest, DerivativeRecurrence) {
  for (const auto& g : {euler_g(15), power(euler_g(15), 2), bernoulli_g(15)}) {
    const auto seq = appell_sequence(g, 15);
    for (std::size_t k = 0; k < 15; ++k) EXPECT_EQ(appell_recurrence_step(g, seq[k]), seq[k + 1]) << "k=" << k;
  }
  // Applying g'/g to x E_k instead reproduces something else already at k = 1.
  const auto g = euler_g(4);
  const auto seq = appell_sequence(g, 4);
  const auto log_derivative = div(derivative(g), g.truncated(3));
  const auto wrong = Polynomial::x() * seq[1] - apply(log_derivative, Polynomial::x() * seq[1]);
  EXPECT_NE(wrong, seq[2]);
}

}  // namespace
}  // namespace umbral
