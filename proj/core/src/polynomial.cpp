#include "umbral/polynomial.hpp"

#include <algorithm>

#include "umbral/combinatorics.hpp"

namespace umbral {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  normalize();
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(std::size_t k, const Rational& c) {
  std::vector<Rational> coeffs(k + 1);
  coeffs[k] = c;
  return Polynomial(std::move(coeffs));
}

std::optional<std::size_t> Polynomial::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

Rational Polynomial::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> out(std::max(a.size(), b.size()));
  for (std::size_t k = 0; k < a.size(); ++k) out[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.size(); ++k) out[k] += b.coeffs_[k];
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> out(std::max(a.size(), b.size()));
  for (std::size_t k = 0; k < a.size(); ++k) out[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.size(); ++k) out[k] -= b.coeffs_[k];
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a) { return Rational(-1) * a; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial operator*(const Rational& s, const Polynomial& a) {
  std::vector<Rational> out(a.coeffs_);
  for (auto& c : out) c *= s;
  return Polynomial(std::move(out));
}

Polynomial power(const Polynomial& p, unsigned k) {
  Polynomial result = Polynomial::constant(1);
  for (unsigned i = 0; i < k; ++i) result = result * p;
  return result;
}

Rational evaluate(const Polynomial& p, const Rational& y) {
  Rational acc;
  const auto c = p.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * y + c[k];
  return acc;
}

Polynomial derivative_k(const Polynomial& p, std::size_t k) {
  if (p.size() <= k) return {};
  std::vector<Rational> out(p.size() - k);
  for (std::size_t j = 0; j < out.size(); ++j) {
    // d^k/dx^k x^(j+k) = (j+k)!/j! x^j
    out[j] = p.coeffs()[j + k] * Rational(factorial(j + k) / factorial(j));
  }
  return Polynomial(std::move(out));
}

Polynomial antiderivative(const Polynomial& p) {
  if (p.is_zero()) return {};
  std::vector<Rational> out(p.size() + 1);
  for (std::size_t k = 0; k < p.size(); ++k) out[k + 1] = p.coeffs()[k] / Rational(static_cast<unsigned long>(k + 1));
  return Polynomial(std::move(out));
}

Rational definite_integral(const Polynomial& p, const Rational& a, const Rational& b) {
  const Polynomial big_p = antiderivative(p);
  return evaluate(big_p, b) - evaluate(big_p, a);
}

Polynomial shift(const Polynomial& p, const Rational& y) {
  Polynomial out;
  Rational weight = 1;  // y^k / k!
  for (std::size_t k = 0; k < p.size(); ++k) {
    out += weight * derivative_k(p, k);
    weight *= y / Rational(static_cast<unsigned long>(k + 1));
  }
  return out;
}

Polynomial scale_arg(const Polynomial& p, const Rational& alpha) {
  std::vector<Rational> out(p.coeffs().begin(), p.coeffs().end());
  Rational scale = 1;
  for (auto& c : out) {
    c *= scale;
    scale *= alpha;
  }
  return Polynomial(std::move(out));
}

}  // namespace umbral
