#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "umbral/rational.hpp"

namespace umbral {

/// A formal power series in t known modulo t^(N+1).
///
/// Coefficients are stored in ordinary form: coeff(k) is the coefficient
/// of t^k. The divided-power form used by the pairing, a_k = k! c_k, is
/// only produced inside pair(). Binary operations truncate to the smaller
/// of the operands' truncations so that lost precision stays visible.
class TruncatedSeries {
 public:
  /// Builds the series with the given coefficients; truncation is
  /// coeffs.size() - 1. Throws umbral::Error on an empty list.
  explicit TruncatedSeries(std::vector<Rational> coeffs);

  static TruncatedSeries zero(std::size_t truncation);
  static TruncatedSeries constant(const Rational& c, std::size_t truncation);
  static TruncatedSeries one(std::size_t truncation) { return constant(1, truncation); }
  /// c t^k, which is the zero series when k > truncation.
  static TruncatedSeries monomial(std::size_t k, std::size_t truncation, const Rational& c = 1);
  static TruncatedSeries t(std::size_t truncation) { return monomial(1, truncation); }

  std::size_t truncation() const { return coeffs_.size() - 1; }
  const Rational& coeff(std::size_t k) const { return coeffs_.at(k); }
  std::span<const Rational> coeffs() const { return coeffs_; }
  bool is_zero() const;

  /// The same series known only modulo t^(n+1); n must not exceed truncation().
  TruncatedSeries truncated(std::size_t n) const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a);
  friend TruncatedSeries operator*(const Rational& s, const TruncatedSeries& a);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

 private:
  std::vector<Rational> coeffs_;
};

/// O(f): index of the first nonzero coefficient, or infinite.
///
/// Infinite can only be certified up to the truncation window: a series
/// whose nonzero terms all lie beyond t^N is reported as infinite.
class SeriesOrder {
 public:
  static SeriesOrder finite(std::size_t k) { return SeriesOrder(k, false); }
  static SeriesOrder infinite() { return SeriesOrder(0, true); }

  bool is_infinite() const { return infinite_; }
  /// Requires !is_infinite().
  std::size_t value() const;

  friend bool operator==(const SeriesOrder&, const SeriesOrder&) = default;
  friend std::strong_ordering operator<=>(const SeriesOrder& a, const SeriesOrder& b);

 private:
  SeriesOrder(std::size_t k, bool inf) : value_(k), infinite_(inf) {}
  std::size_t value_;
  bool infinite_;
};

SeriesOrder order(const TruncatedSeries& f);

/// Sum of scalar * series; truncation is the minimum over the terms.
TruncatedSeries linear_combine(std::span<const std::pair<Rational, TruncatedSeries>> terms);

/// Cauchy product modulo t^(min(N_f, N_g)+1).
TruncatedSeries mul(const TruncatedSeries& f, const TruncatedSeries& g);

/// f^k by repeated squaring; f^0 is the unit series at f's truncation.
TruncatedSeries power(const TruncatedSeries& f, unsigned k);

/// Multiplicative inverse of an order-0 series.
TruncatedSeries invert(const TruncatedSeries& f);

/// f / g where order(f) >= order(g) = m. Both are shifted down by t^m
/// first, so the result is known modulo t^(min(N_f, N_g) - m + 1).
TruncatedSeries div(const TruncatedSeries& f, const TruncatedSeries& g);

/// f(g(t)) for order(g) >= 1, by Horner's scheme.
TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& g);

/// The compositional inverse of a delta series (order exactly 1).
TruncatedSeries comp_inverse(const TruncatedSeries& f);

/// d/dt; the truncation drops by one (a truncation-0 input gives the
/// zero series at truncation 0).
TruncatedSeries derivative(const TruncatedSeries& f);

/// e^{yt} = sum y^k/k! t^k for k = 0..N.
TruncatedSeries exp_series(const Rational& y, std::size_t truncation);

/// f(alpha t): c_k becomes c_k alpha^k.
TruncatedSeries scale_variable(const TruncatedSeries& f, const Rational& alpha);

}  // namespace umbral
