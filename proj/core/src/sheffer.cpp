#include "umbral/sheffer.hpp"

#include <algorithm>

#include "umbral/combinatorics.hpp"
#include "umbral/error.hpp"
#include "umbral/pairing.hpp"

namespace umbral {

namespace {

bool is_t(const TruncatedSeries& f) {
  const auto c = f.coeffs();
  if (c.size() < 2 || c[0] != 0 || c[1] != 1) return false;
  return std::all_of(c.begin() + 2, c.end(), [](const Rational& q) { return q == 0; });
}

void require_invertible(const TruncatedSeries& g) {
  if (order(g) != SeriesOrder::finite(0)) throw Error("g must be an invertible series");
}

void require_delta(const TruncatedSeries& f) {
  if (order(f) != SeriesOrder::finite(1)) throw Error("f must be a delta series");
}

}  // namespace

std::vector<Polynomial> appell_sequence(const TruncatedSeries& g, std::size_t n) {
  require_invertible(g);
  if (g.truncation() < n) throw Error("series truncation below polynomial degree");
  const TruncatedSeries inv = invert(g);
  std::vector<Polynomial> out;
  out.reserve(n + 1);
  for (std::size_t k = 0; k <= n; ++k) out.push_back(apply(inv, Polynomial::monomial(k)));
  return out;
}

std::vector<Polynomial> sheffer_sequence(const TruncatedSeries& g, const TruncatedSeries& f, std::size_t n) {
  require_invertible(g);
  require_delta(f);
  const std::size_t trunc = std::min(g.truncation(), f.truncation());
  if (trunc < n) throw Error("series truncation below polynomial degree");

  const TruncatedSeries fbar = comp_inverse(f.truncated(trunc));
  const TruncatedSeries h = invert(compose(g.truncated(trunc), fbar));

  // columns[j] = h fbar^j; S_m has y^j coefficient (m!/j!) columns[j][m].
  std::vector<TruncatedSeries> columns;
  columns.reserve(n + 1);
  columns.push_back(h);
  for (std::size_t j = 1; j <= n; ++j) columns.push_back(mul(columns.back(), fbar));

  std::vector<Polynomial> out;
  out.reserve(n + 1);
  for (std::size_t m = 0; m <= n; ++m) {
    std::vector<Rational> coeffs(m + 1);
    for (std::size_t j = 0; j <= m; ++j) {
      coeffs[j] = Rational(factorial(m) / factorial(j)) * columns[j].coeff(m);
    }
    out.emplace_back(std::move(coeffs));
  }
  return out;
}

ShefferSystem::ShefferSystem(TruncatedSeries g, TruncatedSeries f, std::size_t n, std::string label)
    : g_(std::move(g)), f_(std::move(f)), label_(std::move(label)) {
  validate_series();
  basis_ = is_t(f_) ? appell_sequence(g_, n) : sheffer_sequence(g_, f_, n);
}

ShefferSystem::ShefferSystem(TruncatedSeries g, TruncatedSeries f, std::vector<Polynomial> basis, std::string label)
    : g_(std::move(g)), f_(std::move(f)), basis_(std::move(basis)), label_(std::move(label)) {
  validate_series();
  if (basis_.empty()) throw Error("empty basis");
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    if (basis_[k].degree() != k) throw Error("basis element S_" + std::to_string(k) + " has wrong degree");
  }
}

ShefferSystem ShefferSystem::appell(TruncatedSeries g, std::size_t n, std::string label) {
  const std::size_t trunc = g.truncation();
  return ShefferSystem(std::move(g), TruncatedSeries::t(std::max<std::size_t>(trunc, 1)), n, std::move(label));
}

void ShefferSystem::validate_series() const {
  require_invertible(g_);
  require_delta(f_);
}

TruncatedSeries ShefferSystem::dual(std::size_t k) const { return mul(g_, power(f_, static_cast<unsigned>(k))); }

VerificationReport check_biorthogonality(const ShefferSystem& sys, std::size_t n_max, const CheckOptions& options) {
  if (sys.degree() < n_max) throw Error("basis does not cover the requested range");
  const std::size_t width = n_max + 1;
  std::vector<Rational> lhs(width * width);
  std::vector<Rational> rhs(width * width);
  TruncatedSeries dual = sys.g();
  for (std::size_t k = 0; k <= n_max; ++k) {
    for (std::size_t n = 0; n <= n_max; ++n) {
      lhs[n * width + k] = pair(dual, sys[n]);
      if (n == k) rhs[n * width + k] = Rational(factorial(n));
    }
    dual = mul(dual, sys.f());
  }
  auto report = make_report("biorth", {{"n_max", Rational(static_cast<unsigned long>(n_max))}},
                            ReportValue::table(std::move(lhs)), ReportValue::table(std::move(rhs)), options);
  report.notes.push_back("system=" + sys.label());
  return report;
}

ExpansionResult expand_in_sheffer(const Polynomial& p, const ShefferSystem& sys) {
  ExpansionResult result{sys.label(), {}, p};
  if (p.is_zero()) return result;
  const std::size_t n = *p.degree();
  if (sys.degree() < n) throw Error("basis does not cover the polynomial degree");
  TruncatedSeries dual = sys.g();
  for (std::size_t k = 0; k <= n; ++k) {
    result.coefficients.push_back(pair(dual, p) / Rational(factorial(k)));
    dual = mul(dual, sys.f());
  }
  return result;
}

Polynomial recombine(std::span<const Rational> coefficients, const ShefferSystem& sys) {
  if (coefficients.size() > sys.basis().size()) throw Error("basis does not cover the expansion");
  Polynomial out;
  for (std::size_t k = 0; k < coefficients.size(); ++k) {
    if (coefficients[k] != 0) out += coefficients[k] * sys[k];
  }
  return out;
}

std::vector<Rational> expand_functional_in_sheffer(const TruncatedSeries& h, const ShefferSystem& sys, std::size_t n) {
  if (sys.degree() < n) throw Error("basis does not cover the requested range");
  std::vector<Rational> lambda(n + 1);
  for (std::size_t k = 0; k <= n; ++k) lambda[k] = pair(h, sys[k]) / Rational(factorial(k));
  return lambda;
}

TruncatedSeries recombine_functional(std::span<const Rational> lambda, const ShefferSystem& sys) {
  if (lambda.empty()) throw Error("empty combination");
  const std::size_t n = lambda.size() - 1;
  TruncatedSeries acc = TruncatedSeries::zero(n);
  TruncatedSeries dual = sys.g().truncated(std::min(n, sys.g().truncation()));
  for (std::size_t k = 0; k <= n; ++k) {
    if (lambda[k] != 0) acc = acc + lambda[k] * dual;
    dual = mul(dual, sys.f());
  }
  return acc;
}

VerificationReport lowering_check(const ShefferSystem& sys, std::size_t n, const CheckOptions& options) {
  if (sys.degree() < n) throw Error("basis does not cover the requested range");
  const Polynomial lhs = apply(sys.f(), sys[n]);
  const Polynomial rhs = n == 0 ? Polynomial() : Rational(static_cast<unsigned long>(n)) * sys[n - 1];
  auto report = make_report("lowering", {{"n", Rational(static_cast<unsigned long>(n))}},
                            ReportValue::polynomial(lhs), ReportValue::polynomial(rhs), options);
  report.notes.push_back("system=" + sys.label());
  return report;
}

Polynomial appell_recurrence_step(const TruncatedSeries& g, const Polynomial& s_k) {
  require_invertible(g);
  if (g.truncation() == 0) throw Error("series truncation below polynomial degree");
  const TruncatedSeries log_derivative = div(derivative(g), g.truncated(g.truncation() - 1));
  return Polynomial::x() * s_k - apply(log_derivative, s_k);
}

}  // namespace umbral
