#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "umbral/polynomial.hpp"
#include "umbral/rational.hpp"
#include "umbral/series.hpp"

namespace umbral {

/// A named Appell family. Order 0 of EulerR / BernoulliS is the monomial
/// family (empty product of generating factors).
struct FamilyId {
  enum class Kind { Euler, EulerR, Bernoulli, BernoulliS, Monomial };
  Kind kind = Kind::Euler;
  unsigned order = 1;

  friend bool operator==(const FamilyId&, const FamilyId&) = default;
};

/// "euler", "euler^3", "bernoulli", "bernoulli^2", "monomial".
FamilyId parse_family(std::string_view text);
std::string to_string(const FamilyId& id);

/// (e^t + 1)/2 modulo t^(N+1).
TruncatedSeries euler_generator(std::size_t truncation);
/// (e^t - 1)/t modulo t^(N+1).
TruncatedSeries bernoulli_generator(std::size_t truncation);

/// The invertible series g of the family's Appell pair (g, t).
TruncatedSeries family_generator(const FamilyId& id, std::size_t truncation);

/// The family members of degree 0..n.
std::vector<Polynomial> family_polynomials(const FamilyId& id, std::size_t n);

std::vector<Polynomial> euler_polynomials(std::size_t n);
std::vector<Polynomial> euler_polynomials_r(std::size_t n, unsigned r);
std::vector<Polynomial> bernoulli_polynomials(std::size_t n);
std::vector<Polynomial> bernoulli_polynomials_s(std::size_t n, unsigned s);

Polynomial euler_polynomial(std::size_t n);
Polynomial euler_polynomial_r(std::size_t n, unsigned r);
Polynomial bernoulli_polynomial(std::size_t n);
Polynomial bernoulli_polynomial_s(std::size_t n, unsigned s);

/// E_n = E_n(0).
Rational euler_number(std::size_t n);
/// E_n^{(r)} = E_n^{(r)}(0).
Rational euler_number_r(std::size_t n, unsigned r);
/// B_n = B_n(0).
Rational bernoulli_number(std::size_t n);

}  // namespace umbral
