#include "umbral/pairing.hpp"

#include "umbral/combinatorics.hpp"
#include "umbral/error.hpp"

namespace umbral {

namespace {

void require_truncation(const TruncatedSeries& f, const Polynomial& p) {
  if (const auto d = p.degree(); d && f.truncation() < *d) {
    throw Error("series truncation below polynomial degree");
  }
}

}  // namespace

Rational pair(const TruncatedSeries& f, const Polynomial& p) {
  require_truncation(f, p);
  Rational acc;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p.coeffs()[k] != 0 && f.coeff(k) != 0) {
      acc += Rational(factorial(k)) * f.coeff(k) * p.coeffs()[k];
    }
  }
  return acc;
}

Polynomial apply(const TruncatedSeries& f, const Polynomial& p) {
  require_truncation(f, p);
  Polynomial out;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (f.coeff(k) != 0) out += f.coeff(k) * derivative_k(p, k);
  }
  return out;
}

TruncatedSeries functional_coeff_series(const std::function<Rational(const Polynomial&)>& functional,
                                        std::size_t truncation) {
  std::vector<Rational> coeffs(truncation + 1);
  for (std::size_t k = 0; k <= truncation; ++k) {
    coeffs[k] = functional(Polynomial::monomial(k)) / Rational(factorial(k));
  }
  return TruncatedSeries(std::move(coeffs));
}

Polynomial expand_monomial_basis(const Polynomial& p) {
  if (p.is_zero()) return {};
  const std::size_t n = *p.degree();
  std::vector<Rational> coeffs(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    coeffs[k] = pair(TruncatedSeries::monomial(k, n), p) / Rational(factorial(k));
  }
  return Polynomial(std::move(coeffs));
}

Rational multinomial_pair(std::span<const TruncatedSeries> factors, unsigned n) {
  for (const auto& f : factors) {
    if (f.truncation() < n) throw Error("series truncation below polynomial degree");
  }
  Rational acc;
  for_each_weak_composition(n, static_cast<unsigned>(factors.size()), [&](std::span<const unsigned> parts) {
    Rational term(multinomial(parts));
    for (std::size_t j = 0; j < parts.size() && term != 0; ++j) {
      term *= Rational(factorial(parts[j])) * factors[j].coeff(parts[j]);
    }
    acc += term;
  });
  return acc;
}

}  // namespace umbral
