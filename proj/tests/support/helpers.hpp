#pragma once

#include <initializer_list>
#include <string_view>
#include <vector>

#include "umbral/polynomial.hpp"
#include "umbral/rational.hpp"
#include "umbral/series.hpp"

namespace umbral::test {

inline Rational q(std::string_view text) { return parse_rational(text); }

inline std::vector<Rational> qs(std::initializer_list<std::string_view> items) {
  std::vector<Rational> out;
  for (auto s : items) out.push_back(q(s));
  return out;
}

inline TruncatedSeries ser(std::initializer_list<std::string_view> items) { return TruncatedSeries(qs(items)); }

inline Polynomial poly(std::initializer_list<std::string_view> items) { return Polynomial(qs(items)); }

}  // namespace umbral::test
