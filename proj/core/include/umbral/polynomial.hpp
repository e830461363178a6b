#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "umbral/rational.hpp"

namespace umbral {

/// Dense polynomial in x with exact rational coefficients, lowest degree
/// first. Trailing zeros are stripped, so the zero polynomial has no
/// coefficients and no degree.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial constant(const Rational& c);
  /// c x^k
  static Polynomial monomial(std::size_t k, const Rational& c = 1);
  static Polynomial x() { return monomial(1); }

  /// std::nullopt stands for the degree of the zero polynomial.
  std::optional<std::size_t> degree() const;
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of x^k; zero beyond the degree.
  Rational coeff(std::size_t k) const;
  std::span<const Rational> coeffs() const { return coeffs_; }
  /// Number of stored coefficients (degree + 1, or 0).
  std::size_t size() const { return coeffs_.size(); }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& s, const Polynomial& a);

  Polynomial& operator+=(const Polynomial& other) { return *this = *this + other; }
  Polynomial& operator-=(const Polynomial& other) { return *this = *this - other; }

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

/// p^k for a natural exponent.
Polynomial power(const Polynomial& p, unsigned k);

Rational evaluate(const Polynomial& p, const Rational& y);

/// k-th derivative; zero when k exceeds the degree.
Polynomial derivative_k(const Polynomial& p, std::size_t k);

/// Antiderivative with zero constant term.
Polynomial antiderivative(const Polynomial& p);

/// \int_a^b p(u) du.
Rational definite_integral(const Polynomial& p, const Rational& a, const Rational& b);

/// p(x + y), via the Taylor expansion sum_k p^(k)(x) y^k / k!.
Polynomial shift(const Polynomial& p, const Rational& y);

/// p(alpha x).
Polynomial scale_arg(const Polynomial& p, const Rational& alpha);

}  // namespace umbral
