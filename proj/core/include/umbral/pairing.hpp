#pragma once

#include <cstddef>
#include <functional>
#include <span>

#include "umbral/polynomial.hpp"
#include "umbral/rational.hpp"
#include "umbral/series.hpp"

namespace umbral {

// A series acts on polynomials in two ways. As a linear functional,
// <t^k | x^n> = n! delta_{n,k}; as an operator, t^k p(x) = p^(k)(x).
// Series coefficients are ordinary (c_k of t^k), so the functional picks
// up k! c_k while the operator sums c_k p^(k) with no extra factorial.
//
// Both require f.truncation() >= deg p: an exact pairing must never drop
// the terms of f that a higher-degree polynomial would see.

/// <f(t) | p(x)> = sum_k k! c_k p_k.
Rational pair(const TruncatedSeries& f, const Polynomial& p);

/// f(t) p(x) = sum_k c_k p^(k)(x).
Polynomial apply(const TruncatedSeries& f, const Polynomial& p);

/// Rebuilds the series of a linear functional from its values on
/// x^0..x^N: c_k = L(x^k) / k!.
TruncatedSeries functional_coeff_series(const std::function<Rational(const Polynomial&)>& functional,
                                        std::size_t truncation);

/// p(x) = sum_k <t^k | p(x)> / k! x^k, recomputed through pair().
Polynomial expand_monomial_basis(const Polynomial& p);

/// <f_1 ... f_m | x^n> expanded over weak compositions i_1+...+i_m = n
/// as sum multinomial(n; i) prod_j <f_j | x^{i_j}>.
Rational multinomial_pair(std::span<const TruncatedSeries> factors, unsigned n);

}  // namespace umbral
