#include <gtest/gtest.h>

#include <set>

#include "helpers.hpp"
#include "oracles.hpp"
#include "umbral/error.hpp"
#include "umbral/families.hpp"
#include "umbral/identities.hpp"
#include "umbral/sheffer.hpp"

namespace umbral {
namespace {

using test::poly;
using test::q;
using test::qs;

std::vector<Rational> scalar(const Rational& v) { return {v}; }

TEST(NumberRecurrenceTest, MatchOracles) {
  const auto e = euler_numbers_by_recurrence(30);
  const auto b = bernoulli_numbers_by_recurrence(30);
  EXPECT_EQ(e, oracle::euler_numbers(30));
  EXPECT_EQ(b, oracle::bernoulli_numbers(30));
  EXPECT_EQ(e[1], q("-1/2"));
  EXPECT_EQ(e[3], q("1/4"));
}

TEST(ExpansionTest, EulerBasisFromEndpointDerivatives) {
  EXPECT_EQ(theorem4_expand(Polynomial::monomial(2)).coefficients, qs({"1/2", "1", "1"}));
  EXPECT_EQ(theorem4_expand(euler_polynomial(3)).coefficients, qs({"0", "0", "0", "1"}));
  EXPECT_EQ(theorem4_expand(Polynomial::constant(1)).coefficients, qs({"1"}));
  EXPECT_EQ(theorem4_expand(Polynomial::monomial(2)).basis, "euler");
}

TEST(ExpansionTest, OrderREulerBasis) {
  EXPECT_EQ(theorem8_expand(Polynomial::x(), 2).coefficients, qs({"1", "1"}));
  EXPECT_EQ(theorem8_expand(euler_polynomial_r(3, 2), 2).coefficients, qs({"0", "0", "0", "1"}));
  for (unsigned r = 1; r <= 4; ++r) EXPECT_EQ(theorem8_expand(Polynomial::constant(1), r).coefficients, qs({"1"}));
  EXPECT_EQ(theorem8_expand(Polynomial::x(), 2).basis, "euler^2");
  EXPECT_EQ(recombine(theorem8_expand(Polynomial::x(), 2)), Polynomial::x());
}

TEST(ExpansionPropertyTest, EulerBasisAgreesWithPairingAndSheffer) {
  oracle::Gen gen(404);
  const auto euler = ShefferSystem::appell(euler_generator(12), 12, "euler");
  for (int i = 0; i < 200; ++i) {
    const auto p = gen.polynomial(gen.index(0, 12));
    const auto closed = theorem4_expand(p);
    EXPECT_EQ(closed.coefficients, euler_pairing_expand(p, 1).coefficients);
    EXPECT_EQ(closed.coefficients, expand_in_sheffer(p, euler).coefficients);
    EXPECT_EQ(recombine(closed), p);
    EXPECT_EQ(theorem8_expand(p, 1).coefficients, closed.coefficients);
  }
}

TEST(ExpansionPropertyTest, OrderREulerBasisAgreesWithPairing) {
  oracle::Gen gen(808);
  for (unsigned r = 1; r <= 3; ++r) {
    for (int i = 0; i < 40; ++i) {
      const auto p = gen.polynomial(gen.index(0, 10));
      const auto closed = theorem8_expand(p, r);
      EXPECT_EQ(closed.coefficients, euler_pairing_expand(p, r).coefficients);
      EXPECT_EQ(recombine(closed), p);
    }
  }
}

TEST(IdentityTest, BernoulliInEulerBasis) {
  for (unsigned n : {0U, 1U, 2U}) EXPECT_TRUE(corollary5_check(n).equal());
  const auto r = corollary5_check(2);
  EXPECT_EQ(r.lhs.entries, qs({"1/6", "-1", "1"}));
}

TEST(IdentityTest, OrderREulerAsScaledProducts) {
  const auto r = theorem6_check(1, 2);
  EXPECT_TRUE(r.equal());
  EXPECT_EQ(r.rhs.entries, qs({"-1", "1"}));
  for (unsigned n = 0; n <= 5; ++n) EXPECT_TRUE(theorem6_check(n, 1).equal());
  for (unsigned r2 = 1; r2 <= 4; ++r2) EXPECT_TRUE(theorem6_check(0, r2).equal());
}

TEST(IdentityTest, OrderREulerFromLowerOrderNumbers) {
  EXPECT_TRUE(corollary7_check(1, 2).equal());
  EXPECT_EQ(corollary7_check(1, 2).rhs.entries, qs({"-1", "1"}));
  const auto r1 = corollary7_check(4, 1);
  EXPECT_TRUE(r1.equal());
  EXPECT_FALSE(r1.notes.empty());
  EXPECT_TRUE(corollary7_check(0, 3).equal());
}

TEST(IdentityTest, ClosingExpansions) {
  EXPECT_TRUE(eq61_check(1, 1).equal());
  EXPECT_TRUE(eq61_check(0, 3).equal());
  EXPECT_TRUE(eq61_check(3, 2).equal());
  EXPECT_TRUE(eq63_check(4, 0, 2).equal());
  EXPECT_TRUE(eq63_check(1, 1, 1).equal());
  EXPECT_TRUE(eq63_check(2, 2, 2).equal());
}

TEST(IdentityTest, IntegralIdentities) {
  const auto poly_level = lemma2_check(1, 1);
  EXPECT_TRUE(poly_level.equal());
  EXPECT_EQ(poly_level.lhs.entries, qs({"0", "1"}));
  const auto zero = lemma2_check(3, 0);
  EXPECT_TRUE(zero.equal());
  EXPECT_TRUE(zero.lhs.entries.empty());
  const auto at = lemma2_check_at(2, 0, 1);
  EXPECT_TRUE(at.equal());
  EXPECT_EQ(at.lhs.entries, scalar(q("-1/6")));

  EXPECT_EQ(prop3_check(1, 1).lhs.entries, scalar(0));
  EXPECT_EQ(prop3_check(0, q("3/7")).rhs.entries, scalar(q("3/7")));
  const auto p = prop3_check(2, 2);
  EXPECT_TRUE(p.equal());
  EXPECT_EQ(p.lhs.entries, scalar(q("2/3")));
}

TEST(IdentityTest, IntegralIdentitiesAgainstDirectIntegration) {
  for (unsigned n = 0; n <= 15; ++n) {
    const auto e = euler_polynomial(n);
    for (const auto& y : {Rational(1), Rational(2), q("1/2"), q("-1/3")}) {
      const auto prop = prop3_check(n, y);
      EXPECT_TRUE(prop.equal());
      EXPECT_EQ(prop.lhs.entries, scalar(oracle::integrate(e, 0, y)));
      const Rational x0 = q("2/5");
      const auto lem = lemma2_check_at(n, x0, y);
      EXPECT_TRUE(lem.equal());
      EXPECT_EQ(lem.rhs.entries, scalar(oracle::integrate(e, x0, x0 + y)));
      EXPECT_TRUE(lemma2_check(n, y).equal());
    }
  }
}

TEST(IdentityTest, Scaling) {
  EXPECT_TRUE(scaling_check(5, 1).equal());
  const auto two = scaling_check(1, 2);
  EXPECT_TRUE(two.equal());
  EXPECT_EQ(two.rhs.entries, qs({"-1/2", "2"}));
  const auto neg = scaling_check(2, -1);
  EXPECT_TRUE(neg.equal());
  EXPECT_EQ(neg.lhs.entries, qs({"0", "1", "1"}));
  EXPECT_THROW(scaling_check(2, 0), Error);
}

TEST(IdentityTest, DerivativeRecurrenceRegeneratesEuler) {
  const auto r = eq29_recurrence_check(15);
  EXPECT_TRUE(r.equal());
  const auto seq = euler_polynomials(15);
  ASSERT_EQ(r.rhs.entries.size(), 15U * 16U);
  for (std::size_t k = 1; k <= 15; ++k) {
    for (std::size_t j = 0; j <= 15; ++j) EXPECT_EQ(r.lhs.entries[(k - 1) * 16 + j], seq[k].coeff(j));
  }
}

TEST(IdentityTest, EulerNumberPairing) {
  EXPECT_EQ(remark27_check(0).lhs.entries, scalar(1));
  EXPECT_EQ(remark27_check(2).lhs.entries, scalar(0));
  EXPECT_EQ(remark27_check(3).rhs.entries, scalar(q("1/4")));
  for (unsigned n = 0; n <= 20; ++n) EXPECT_TRUE(remark27_check(n).equal());
}

TEST(IdentityTest, SmallGridEqual) {
  for (unsigned n = 0; n <= 6; ++n) {
    EXPECT_TRUE(eq2_check(n).equal());
    EXPECT_TRUE(eq3_check(n).equal());
    EXPECT_TRUE(eq40_check(n).equal());
    for (unsigned r = 1; r <= 3; ++r) {
      EXPECT_TRUE(eq54_check(n, r).equal());
      EXPECT_TRUE(lowering_euler_check(n, r).equal());
      EXPECT_TRUE(appell_identity_check(n, r, q("-1/3")).equal());
      EXPECT_TRUE(theorem8_check(probe_polynomial(n), r).equal());
    }
    EXPECT_TRUE(theorem4_check(probe_polynomial(n)).equal());
  }
  EXPECT_TRUE(biorthogonality_check(6, 2).equal());
}

TEST(RegistryTest, SortedAndComplete) {
  const std::set<std::string_view> expected = {"thm4", "cor5", "thm6", "cor7", "thm8", "eq61", "eq63",
                                               "lemma2", "prop3", "scaling", "eq29", "eq27", "eq54", "biorth",
                                               "lowering", "appell-identity", "eq2", "eq3", "eq40"};
  std::set<std::string_view> seen;
  std::string_view previous;
  for (const auto& entry : identity_registry()) {
    EXPECT_LT(previous, entry.id);
    previous = entry.id;
    seen.insert(entry.id);
  }
  EXPECT_EQ(seen, expected);
  EXPECT_EQ(find_identity("eq3").id, "eq3");
  EXPECT_THROW(find_identity("eq99"), Error);
}

// A single perturbation of the right side must flip every check to UNEQUAL
// with the perturbed entry as witness.
TEST(RegistryTest, EveryCheckCanFail) {
  GridSpec spec;
  spec.n_max = 4;
  spec.r_max = 2;
  spec.s_max = 2;
  for (const auto& entry : identity_registry()) {
    const auto grid = entry.grid(spec);
    ASSERT_FALSE(grid.empty()) << entry.id;
    const auto& params = grid.back();
    const auto clean = entry.run(params, {});
    ASSERT_TRUE(clean.equal()) << entry.id << " " << format_params(params);
    const std::size_t size = std::max(clean.lhs.entries.size(), clean.rhs.entries.size());
    for (std::size_t index : {std::size_t{0}, size / 2, size}) {
      CheckOptions options;
      options.fault = Fault{index, q("1/3")};
      const auto broken = entry.run(params, options);
      EXPECT_FALSE(broken.equal()) << entry.id;
      ASSERT_TRUE(broken.witness) << entry.id;
      EXPECT_EQ(*broken.witness, index) << entry.id;
    }
  }
}

TEST(ReportTest, MakeReport) {
  const auto equal = make_report("x", {{"n", 2}}, ReportValue::polynomial(poly({"1", "2"})),
                                 ReportValue::table(qs({"1", "2", "0"})));
  EXPECT_TRUE(equal.equal());
  EXPECT_FALSE(equal.witness);
  const auto unequal = make_report("x", {}, ReportValue::scalar(1), ReportValue::scalar(2));
  EXPECT_EQ(to_string(unequal.verdict), "UNEQUAL");
  EXPECT_EQ(unequal.witness, 0U);
  EXPECT_EQ(format_params({{"y", q("1/2")}, {"n", 3}}), "n=3 y=1/2");
}

}  // namespace
}  // namespace umbral
