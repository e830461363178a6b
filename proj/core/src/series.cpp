#include "umbral/series.hpp"

#include <algorithm>

#include "umbral/error.hpp"

namespace umbral {

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw Error("series needs at least one coefficient");
  }
  for (auto& c : coeffs_) c.canonicalize();
}

TruncatedSeries TruncatedSeries::zero(std::size_t truncation) {
  return TruncatedSeries(std::vector<Rational>(truncation + 1));
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, std::size_t truncation) {
  std::vector<Rational> coeffs(truncation + 1);
  coeffs[0] = c;
  return TruncatedSeries(std::move(coeffs));
}

TruncatedSeries TruncatedSeries::monomial(std::size_t k, std::size_t truncation, const Rational& c) {
  std::vector<Rational> coeffs(truncation + 1);
  if (k <= truncation) coeffs[k] = c;
  return TruncatedSeries(std::move(coeffs));
}

bool TruncatedSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

TruncatedSeries TruncatedSeries::truncated(std::size_t n) const {
  if (n > truncation()) {
    throw Error("cannot raise the truncation of a series");
  }
  return TruncatedSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + n + 1));
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t n = std::min(a.truncation(), b.truncation());
  std::vector<Rational> out(n + 1);
  for (std::size_t k = 0; k <= n; ++k) out[k] = a.coeffs_[k] + b.coeffs_[k];
  return TruncatedSeries(std::move(out));
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t n = std::min(a.truncation(), b.truncation());
  std::vector<Rational> out(n + 1);
  for (std::size_t k = 0; k <= n; ++k) out[k] = a.coeffs_[k] - b.coeffs_[k];
  return TruncatedSeries(std::move(out));
}

TruncatedSeries operator-(const TruncatedSeries& a) {
  std::vector<Rational> out(a.coeffs_.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = -a.coeffs_[k];
  return TruncatedSeries(std::move(out));
}

TruncatedSeries operator*(const Rational& s, const TruncatedSeries& a) {
  std::vector<Rational> out(a.coeffs_.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = s * a.coeffs_[k];
  return TruncatedSeries(std::move(out));
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return mul(a, b); }

std::size_t SeriesOrder::value() const {
  if (infinite_) throw Error("order of the zero series is infinite");
  return value_;
}

std::strong_ordering operator<=>(const SeriesOrder& a, const SeriesOrder& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
  return a.value_ <=> b.value_;
}

SeriesOrder order(const TruncatedSeries& f) {
  const auto c = f.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] != 0) return SeriesOrder::finite(k);
  }
  return SeriesOrder::infinite();
}

TruncatedSeries linear_combine(std::span<const std::pair<Rational, TruncatedSeries>> terms) {
  if (terms.empty()) throw Error("empty combination");
  std::size_t n = terms.front().second.truncation();
  for (const auto& [s, f] : terms) n = std::min(n, f.truncation());
  std::vector<Rational> out(n + 1);
  for (const auto& [s, f] : terms) {
    for (std::size_t k = 0; k <= n; ++k) out[k] += s * f.coeff(k);
  }
  return TruncatedSeries(std::move(out));
}

TruncatedSeries mul(const TruncatedSeries& f, const TruncatedSeries& g) {
  const std::size_t n = std::min(f.truncation(), g.truncation());
  const auto a = f.coeffs();
  const auto b = g.coeffs();
  std::vector<Rational> out(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j <= n; ++j) {
      if (b[j] != 0) out[i + j] += a[i] * b[j];
    }
  }
  return TruncatedSeries(std::move(out));
}

TruncatedSeries power(const TruncatedSeries& f, unsigned k) {
  TruncatedSeries result = TruncatedSeries::one(f.truncation());
  TruncatedSeries base = f;
  while (k > 0) {
    if (k & 1U) result = mul(result, base);
    k >>= 1U;
    if (k > 0) base = mul(base, base);
  }
  return result;
}

TruncatedSeries invert(const TruncatedSeries& f) {
  const auto c = f.coeffs();
  if (c[0] == 0) throw Error("not invertible");
  const std::size_t n = f.truncation();
  const Rational inv0 = 1 / c[0];
  std::vector<Rational> h(n + 1);
  h[0] = inv0;
  for (std::size_t m = 1; m <= n; ++m) {
    Rational acc;
    for (std::size_t j = 1; j <= m; ++j) {
      if (c[j] != 0) acc += c[j] * h[m - j];
    }
    h[m] = -inv0 * acc;
  }
  return TruncatedSeries(std::move(h));
}

namespace {

TruncatedSeries shift_down(const TruncatedSeries& f, std::size_t m) {
  const auto c = f.coeffs();
  return TruncatedSeries(std::vector<Rational>(c.begin() + static_cast<std::ptrdiff_t>(m), c.end()));
}

}  // namespace

TruncatedSeries div(const TruncatedSeries& f, const TruncatedSeries& g) {
  const SeriesOrder og = order(g);
  if (og.is_infinite()) throw Error("division by zero series");
  if (order(f) < og) throw Error("division leaves a pole");
  const std::size_t m = og.value();
  const std::size_t n = std::min(f.truncation(), g.truncation());
  // m <= n since g has a nonzero coefficient at t^m.
  return mul(shift_down(f.truncated(n), m), invert(shift_down(g.truncated(n), m)));
}

TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& g) {
  if (g.coeff(0) != 0) throw Error("composition with unit constant term");
  const std::size_t n = std::min(f.truncation(), g.truncation());
  const TruncatedSeries inner = g.truncated(n);
  TruncatedSeries acc = TruncatedSeries::constant(f.coeff(n), n);
  for (std::size_t k = n; k-- > 0;) {
    acc = mul(acc, inner);
    std::vector<Rational> c(acc.coeffs().begin(), acc.coeffs().end());
    c[0] += f.coeff(k);
    acc = TruncatedSeries(std::move(c));
  }
  return acc;
}

TruncatedSeries comp_inverse(const TruncatedSeries& f) {
  const std::size_t n = f.truncation();
  if (n < 1 || f.coeff(0) != 0 || f.coeff(1) == 0) throw Error("no compositional inverse");
  const Rational c1 = f.coeff(1);
  // [t^m] f(h) = c1 h_m + (terms in h_1..h_{m-1}); solve degree by degree.
  std::vector<Rational> h(n + 1);
  h[1] = 1 / c1;
  for (std::size_t m = 2; m <= n; ++m) {
    const TruncatedSeries partial = compose(f.truncated(m), TruncatedSeries(std::vector<Rational>(h.begin(), h.begin() + static_cast<std::ptrdiff_t>(m) + 1)));
    h[m] = -partial.coeff(m) / c1;
  }
  return TruncatedSeries(std::move(h));
}

TruncatedSeries derivative(const TruncatedSeries& f) {
  const std::size_t n = f.truncation();
  if (n == 0) return TruncatedSeries::zero(0);
  std::vector<Rational> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = Rational(static_cast<unsigned long>(k + 1)) * f.coeff(k + 1);
  return TruncatedSeries(std::move(out));
}

TruncatedSeries exp_series(const Rational& y, std::size_t truncation) {
  std::vector<Rational> out(truncation + 1);
  out[0] = 1;
  for (std::size_t k = 1; k <= truncation; ++k) {
    out[k] = out[k - 1] * y / Rational(static_cast<unsigned long>(k));
  }
  return TruncatedSeries(std::move(out));
}

TruncatedSeries scale_variable(const TruncatedSeries& f, const Rational& alpha) {
  std::vector<Rational> out(f.coeffs().begin(), f.coeffs().end());
  Rational scale = 1;
  for (auto& c : out) {
    c *= scale;
    scale *= alpha;
  }
  return TruncatedSeries(std::move(out));
}

}  // namespace umbral
