#include "umbral/families.hpp"

#include <charconv>
#include <optional>

#include "umbral/error.hpp"
#include "umbral/pairing.hpp"
#include "umbral/sheffer.hpp"

namespace umbral {

FamilyId parse_family(std::string_view text) {
  std::string_view name = text;
  std::optional<unsigned> order;
  if (const auto caret = text.find('^'); caret != std::string_view::npos) {
    name = text.substr(0, caret);
    const std::string_view digits = text.substr(caret + 1);
    unsigned value = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
      throw Error("malformed family order in '" + std::string(text) + "'");
    }
    order = value;
  }
  if (name == "euler") {
    return order ? FamilyId{FamilyId::Kind::EulerR, *order} : FamilyId{FamilyId::Kind::Euler, 1};
  }
  if (name == "bernoulli") {
    return order ? FamilyId{FamilyId::Kind::BernoulliS, *order} : FamilyId{FamilyId::Kind::Bernoulli, 1};
  }
  if (name == "monomial" && !order) return FamilyId{FamilyId::Kind::Monomial, 0};
  throw Error("unknown family '" + std::string(text) + "'");
}

std::string to_string(const FamilyId& id) {
  switch (id.kind) {
    case FamilyId::Kind::Euler: return "euler";
    case FamilyId::Kind::EulerR: return "euler^" + std::to_string(id.order);
    case FamilyId::Kind::Bernoulli: return "bernoulli";
    case FamilyId::Kind::BernoulliS: return "bernoulli^" + std::to_string(id.order);
    case FamilyId::Kind::Monomial: return "monomial";
  }
  return "unknown";
}

TruncatedSeries euler_generator(std::size_t truncation) {
  return Rational(1, 2) * (exp_series(1, truncation) + TruncatedSeries::one(truncation));
}

TruncatedSeries bernoulli_generator(std::size_t truncation) {
  return div(exp_series(1, truncation + 1) - TruncatedSeries::one(truncation + 1),
             TruncatedSeries::t(truncation + 1));
}

TruncatedSeries family_generator(const FamilyId& id, std::size_t truncation) {
  switch (id.kind) {
    case FamilyId::Kind::Euler: return euler_generator(truncation);
    case FamilyId::Kind::EulerR: return power(euler_generator(truncation), id.order);
    case FamilyId::Kind::Bernoulli: return bernoulli_generator(truncation);
    case FamilyId::Kind::BernoulliS: return power(bernoulli_generator(truncation), id.order);
    case FamilyId::Kind::Monomial: return TruncatedSeries::one(truncation);
  }
  throw Error("unknown family");
}

std::vector<Polynomial> family_polynomials(const FamilyId& id, std::size_t n) {
  return appell_sequence(family_generator(id, n), n);
}

std::vector<Polynomial> euler_polynomials(std::size_t n) { return family_polynomials({FamilyId::Kind::Euler, 1}, n); }

std::vector<Polynomial> euler_polynomials_r(std::size_t n, unsigned r) {
  return family_polynomials({FamilyId::Kind::EulerR, r}, n);
}

std::vector<Polynomial> bernoulli_polynomials(std::size_t n) {
  return family_polynomials({FamilyId::Kind::Bernoulli, 1}, n);
}

std::vector<Polynomial> bernoulli_polynomials_s(std::size_t n, unsigned s) {
  return family_polynomials({FamilyId::Kind::BernoulliS, s}, n);
}

Polynomial euler_polynomial(std::size_t n) {
  return apply(invert(euler_generator(n)), Polynomial::monomial(n));
}

Polynomial euler_polynomial_r(std::size_t n, unsigned r) {
  return apply(invert(power(euler_generator(n), r)), Polynomial::monomial(n));
}

Polynomial bernoulli_polynomial(std::size_t n) {
  return apply(invert(bernoulli_generator(n)), Polynomial::monomial(n));
}

Polynomial bernoulli_polynomial_s(std::size_t n, unsigned s) {
  return apply(invert(power(bernoulli_generator(n), s)), Polynomial::monomial(n));
}

Rational euler_number(std::size_t n) { return euler_polynomial(n).coeff(0); }
Rational euler_number_r(std::size_t n, unsigned r) { return euler_polynomial_r(n, r).coeff(0); }
Rational bernoulli_number(std::size_t n) { return bernoulli_polynomial(n).coeff(0); }

}  // namespace umbral
