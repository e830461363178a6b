#include "umbral/identities.hpp"

#include "umbral/combinatorics.hpp"
#include "umbral/error.hpp"
#include "umbral/families.hpp"
#include "umbral/pairing.hpp"
#include "umbral/sheffer.hpp"

namespace umbral {

namespace {

Rational nat(unsigned long v) { return Rational(v); }

Rational binom(unsigned long n, unsigned long k) { return Rational(binomial(n, k)); }

Rational delta(std::size_t a, std::size_t b) { return a == b ? Rational(1) : Rational(0); }

void require_order(unsigned r) {
  if (r == 0) throw Error("order r must be at least 1");
}

/// 2^{-r} sum_l C(r,l) q(l): the functional <((e^t+1)/2)^r | q>.
Rational euler_average(const Polynomial& q, unsigned r) {
  Rational acc;
  for (unsigned l = 0; l <= r; ++l) acc += binom(r, l) * evaluate(q, nat(l));
  return acc / pow(Rational(2), r);
}

/// 2^{-r} sum_k C(n,k) (sum_l C(r,l) P_{n-k}(l)) E_k^{(r)}(x), with P the
/// family being expanded.
Polynomial closing_expansion(const std::vector<Polynomial>& family, unsigned n, unsigned r) {
  const auto basis = euler_polynomials_r(n, r);
  Polynomial out;
  for (unsigned k = 0; k <= n; ++k) {
    out += (binom(n, k) * euler_average(family[n - k], r)) * basis[k];
  }
  return out;
}

}  // namespace

std::vector<Rational> euler_numbers_by_recurrence(std::size_t n) {
  std::vector<Rational> e(n + 1);
  e[0] = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    Rational acc;
    for (std::size_t l = 0; l < m; ++l) acc += binom(m, l) * e[l];
    e[m] = -acc / 2;
  }
  return e;
}

std::vector<Rational> bernoulli_numbers_by_recurrence(std::size_t n) {
  std::vector<Rational> b(n + 1);
  b[0] = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    // sum_{l<=m} C(m+1,l) B_l = 0
    Rational acc;
    for (std::size_t l = 0; l < m; ++l) acc += binom(m + 1, l) * b[l];
    b[m] = -acc / binom(m + 1, m);
  }
  return b;
}

ExpansionResult theorem4_expand(const Polynomial& p) {
  ExpansionResult result{"euler", {}, p};
  for (std::size_t k = 0; k < p.size(); ++k) {
    const Polynomial dk = derivative_k(p, k);
    result.coefficients.push_back((evaluate(dk, 1) + evaluate(dk, 0)) / (2 * Rational(factorial(k))));
  }
  return result;
}

ExpansionResult theorem8_expand(const Polynomial& p, unsigned r) {
  require_order(r);
  ExpansionResult result{"euler^" + std::to_string(r), {}, p};
  for (std::size_t k = 0; k < p.size(); ++k) {
    result.coefficients.push_back(euler_average(derivative_k(p, k), r) / Rational(factorial(k)));
  }
  return result;
}

ExpansionResult euler_pairing_expand(const Polynomial& p, unsigned r) {
  require_order(r);
  const std::size_t n = p.degree().value_or(0);
  const std::string label = r == 1 ? "euler" : "euler^" + std::to_string(r);
  const ShefferSystem sys = ShefferSystem::appell(power(euler_generator(n), r), n, label);
  return expand_in_sheffer(p, sys);
}

Polynomial recombine(const ExpansionResult& result) {
  if (result.coefficients.empty()) return {};
  const auto basis = family_polynomials(parse_family(result.basis), result.coefficients.size() - 1);
  Polynomial out;
  for (std::size_t k = 0; k < result.coefficients.size(); ++k) out += result.coefficients[k] * basis[k];
  return out;
}

Polynomial probe_polynomial(std::size_t n) {
  std::vector<Rational> coeffs(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    const long num = static_cast<long>(j) + 1;
    coeffs[j] = make_rational(j % 2 == 0 ? num : -num, static_cast<long>(j) + 2);
  }
  return Polynomial(std::move(coeffs));
}

VerificationReport theorem4_check(const Polynomial& p, const CheckOptions& options) {
  const Polynomial rhs = recombine(theorem4_expand(p));
  return make_report("thm4", {{"n", nat(p.degree().value_or(0))}}, ReportValue::polynomial(p),
                     ReportValue::polynomial(rhs), options);
}

VerificationReport theorem8_check(const Polynomial& p, unsigned r, const CheckOptions& options) {
  const Polynomial rhs = recombine(theorem8_expand(p, r));
  return make_report("thm8", {{"n", nat(p.degree().value_or(0))}, {"r", nat(r)}}, ReportValue::polynomial(p),
                     ReportValue::polynomial(rhs), options);
}

VerificationReport corollary5_check(unsigned n, const CheckOptions& options) {
  const auto euler = euler_polynomials(n);
  const auto bern = bernoulli_numbers_by_recurrence(n);
  Polynomial rhs = euler[n];
  for (unsigned k = 0; k + 2 <= n; ++k) rhs += (binom(n, k) * bern[n - k]) * euler[k];
  return make_report("cor5", {{"n", nat(n)}}, ReportValue::polynomial(bernoulli_polynomial(n)),
                     ReportValue::polynomial(rhs), options);
}

VerificationReport theorem6_check(unsigned n, unsigned r, const CheckOptions& options) {
  require_order(r);
  const auto euler = euler_polynomials(n);
  std::vector<Polynomial> scaled;
  scaled.reserve(euler.size());
  for (const auto& e : euler) scaled.push_back(scale_arg(e, Rational(1, r)));

  Polynomial rhs;
  for_each_weak_composition(n, r, [&](std::span<const unsigned> parts) {
    Polynomial term = Polynomial::constant(Rational(multinomial(parts)));
    for (unsigned i : parts) term = term * scaled[i];
    rhs += term;
  });
  return make_report("thm6", {{"n", nat(n)}, {"r", nat(r)}}, ReportValue::polynomial(euler_polynomial_r(n, r)),
                     ReportValue::polynomial(rhs), options);
}

VerificationReport corollary7_check(unsigned n, unsigned r, const CheckOptions& options) {
  require_order(r);
  const auto lower = euler_polynomials_r(n, r - 1);
  const auto euler = euler_polynomials(n);
  Polynomial rhs;
  for (unsigned k = 0; k <= n; ++k) rhs += (binom(n, k) * lower[n - k].coeff(0)) * euler[k];
  auto report = make_report("cor7", {{"n", nat(n)}, {"r", nat(r)}},
                            ReportValue::polynomial(euler_polynomial_r(n, r)), ReportValue::polynomial(rhs), options);
  if (r == 1) report.notes.push_back("order-0 Euler numbers taken from the monomial family: E^(0)_m = delta_{m,0}");
  return report;
}

VerificationReport eq61_check(unsigned n, unsigned r, const CheckOptions& options) {
  require_order(r);
  const Polynomial rhs = closing_expansion(euler_polynomials(n), n, r);
  return make_report("eq61", {{"n", nat(n)}, {"r", nat(r)}}, ReportValue::polynomial(euler_polynomial(n)),
                     ReportValue::polynomial(rhs), options);
}

VerificationReport eq63_check(unsigned n, unsigned s, unsigned r, const CheckOptions& options) {
  require_order(r);
  const Polynomial rhs = closing_expansion(bernoulli_polynomials_s(n, s), n, r);
  auto report = make_report("eq63", {{"n", nat(n)}, {"r", nat(r)}, {"s", nat(s)}},
                            ReportValue::polynomial(bernoulli_polynomial_s(n, s)), ReportValue::polynomial(rhs),
                            options);
  report.notes.push_back("order-s Bernoulli polynomials generated by (t/(e^t-1))^s e^{xt}");
  if (s == 0) report.notes.push_back("s = 0 is the monomial family");
  return report;
}

namespace {

/// ((e^{yt} - 1)/t) modulo t^(n+1).
TruncatedSeries integral_operator(const Rational& y, std::size_t n) {
  return div(exp_series(y, n + 1) - TruncatedSeries::one(n + 1), TruncatedSeries::t(n + 1));
}

}  // namespace

VerificationReport lemma2_check(unsigned n, const Rational& y, const CheckOptions& options) {
  const Polynomial e = euler_polynomial(n);
  const Polynomial anti = antiderivative(e);
  const Polynomial lhs = shift(anti, y) - anti;
  const Polynomial rhs = apply(integral_operator(y, n), e);
  return make_report("lemma2", {{"n", nat(n)}, {"y", y}}, ReportValue::polynomial(lhs),
                     ReportValue::polynomial(rhs), options);
}

VerificationReport lemma2_check_at(unsigned n, const Rational& x0, const Rational& y, const CheckOptions& options) {
  const Polynomial e = euler_polynomial(n);
  const Rational lhs = definite_integral(e, x0, x0 + y);
  const Rational rhs = evaluate(apply(integral_operator(y, n), e), x0);
  return make_report("lemma2", {{"n", nat(n)}, {"x0", x0}, {"y", y}}, ReportValue::scalar(lhs),
                     ReportValue::scalar(rhs), options);
}

VerificationReport prop3_check(unsigned n, const Rational& y, const CheckOptions& options) {
  const Polynomial e = euler_polynomial(n);
  return make_report("prop3", {{"n", nat(n)}, {"y", y}}, ReportValue::scalar(definite_integral(e, 0, y)),
                     ReportValue::scalar(pair(integral_operator(y, n), e)), options);
}

VerificationReport scaling_check(unsigned n, const Rational& alpha, const CheckOptions& options) {
  if (alpha == 0) throw Error("scaling constant must be nonzero");
  const Polynomial e = euler_polynomial(n);
  const TruncatedSeries g = euler_generator(n);
  const TruncatedSeries op = mul(g, invert(scale_variable(g, 1 / alpha)));
  const Polynomial rhs = pow(alpha, n) * apply(op, e);
  return make_report("scaling", {{"alpha", alpha}, {"n", nat(n)}}, ReportValue::polynomial(scale_arg(e, alpha)),
                     ReportValue::polynomial(rhs), options);
}

VerificationReport eq29_recurrence_check(unsigned k_max, const CheckOptions& options) {
  if (k_max == 0) throw Error("k_max must be at least 1");
  const auto euler = euler_polynomials(k_max);
  const TruncatedSeries g = euler_generator(k_max);
  const std::size_t stride = k_max + 1;
  std::vector<Rational> lhs(k_max * stride);
  std::vector<Rational> rhs(k_max * stride);
  Polynomial current = Polynomial::constant(1);
  for (unsigned k = 1; k <= k_max; ++k) {
    current = appell_recurrence_step(g, current);
    for (std::size_t j = 0; j < stride; ++j) {
      lhs[(k - 1) * stride + j] = euler[k].coeff(j);
      rhs[(k - 1) * stride + j] = current.coeff(j);
    }
  }
  return make_report("eq29", {{"k_max", nat(k_max)}}, ReportValue::table(std::move(lhs)),
                     ReportValue::table(std::move(rhs)), options);
}

VerificationReport remark27_check(unsigned n, const CheckOptions& options) {
  const Rational lhs = pair(invert(euler_generator(n)), Polynomial::monomial(n));
  return make_report("eq27", {{"n", nat(n)}}, ReportValue::scalar(lhs),
                     ReportValue::scalar(euler_numbers_by_recurrence(n)[n]), options);
}

VerificationReport eq54_check(unsigned n, unsigned r, const CheckOptions& options) {
  require_order(r);
  const Polynomial e = euler_polynomial_r(n, r);
  const Polynomial lhs = shift(e, 1) + e;
  const Polynomial rhs = Rational(2) * euler_polynomial_r(n, r - 1);
  return make_report("eq54", {{"n", nat(n)}, {"r", nat(r)}}, ReportValue::polynomial(lhs),
                     ReportValue::polynomial(rhs), options);
}

VerificationReport biorthogonality_check(unsigned n_max, unsigned r, const CheckOptions& options) {
  require_order(r);
  const ShefferSystem sys = ShefferSystem::appell(power(euler_generator(n_max), r), n_max, "euler^" + std::to_string(r));
  auto report = check_biorthogonality(sys, n_max, options);
  report.params.emplace("r", nat(r));
  return report;
}

VerificationReport lowering_euler_check(unsigned n, unsigned r, const CheckOptions& options) {
  require_order(r);
  const ShefferSystem sys = ShefferSystem::appell(power(euler_generator(n), r), n, "euler^" + std::to_string(r));
  auto report = lowering_check(sys, n, options);
  report.params.emplace("r", nat(r));
  return report;
}

VerificationReport appell_identity_check(unsigned n, unsigned r, const Rational& y, const CheckOptions& options) {
  const auto family = euler_polynomials_r(n, r);
  Polynomial rhs;
  for (unsigned k = 0; k <= n; ++k) rhs += (binom(n, k) * pow(y, k)) * family[n - k];
  return make_report("appell-identity", {{"n", nat(n)}, {"r", nat(r)}, {"y", y}},
                     ReportValue::polynomial(shift(family[n], y)), ReportValue::polynomial(rhs), options);
}

VerificationReport eq2_check(unsigned n, const CheckOptions& options) {
  const auto numbers = euler_numbers_by_recurrence(n);
  std::vector<Rational> rhs(n + 1);
  for (unsigned l = 0; l <= n; ++l) rhs[l] = binom(n, l) * numbers[n - l];
  return make_report("eq2", {{"n", nat(n)}}, ReportValue::polynomial(euler_polynomial(n)),
                     ReportValue::polynomial(Polynomial(std::move(rhs))), options);
}

VerificationReport eq3_check(unsigned n, const CheckOptions& options) {
  const Polynomial e = euler_polynomial(n);
  return make_report("eq3", {{"n", nat(n)}}, ReportValue::scalar(evaluate(e, 1) + e.coeff(0)),
                     ReportValue::scalar(2 * delta(0, n)), options);
}

VerificationReport eq40_check(unsigned n, const CheckOptions& options) {
  const Polynomial b = bernoulli_polynomial(n);
  return make_report("eq40", {{"n", nat(n)}}, ReportValue::scalar(evaluate(b, 1) - b.coeff(0)),
                     ReportValue::scalar(delta(1, n)), options);
}

}  // namespace umbral
