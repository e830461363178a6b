#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "umbral/polynomial.hpp"
#include "umbral/report.hpp"
#include "umbral/series.hpp"

namespace umbral {

/// S_k = g(t)^{-1} x^k for k = 0..n. Requires order(g) = 0 and
/// g.truncation() >= n.
std::vector<Polynomial> appell_sequence(const TruncatedSeries& g, std::size_t n);

/// The Sheffer sequence for (g, f), read off the generating function
///   g(fbar(t))^{-1} e^{y fbar(t)} = sum_k S_k(y) t^k / k!
/// where fbar is the compositional inverse of f. Expanding the exponential,
/// the coefficient of y^j in S_m is (m!/j!) [t^m] (h fbar^j) with
/// h = 1/g(fbar). Requires order(g) = 0, order(f) = 1 and both
/// truncations >= n.
std::vector<Polynomial> sheffer_sequence(const TruncatedSeries& g, const TruncatedSeries& f, std::size_t n);

/// A pair (g, f) together with S_0..S_n, built eagerly at construction and
/// immutable afterwards. A system for a larger range is a new system.
class ShefferSystem {
 public:
  /// Generates the basis; the Appell path is taken when f is exactly t.
  ShefferSystem(TruncatedSeries g, TruncatedSeries f, std::size_t n, std::string label = "sheffer");
  /// Adopts a caller-supplied basis. Only the structural invariants
  /// (orders of g and f, deg S_k = k) are validated; biorthogonality is
  /// left to check_biorthogonality().
  ShefferSystem(TruncatedSeries g, TruncatedSeries f, std::vector<Polynomial> basis, std::string label);

  static ShefferSystem appell(TruncatedSeries g, std::size_t n, std::string label = "appell");

  const TruncatedSeries& g() const { return g_; }
  const TruncatedSeries& f() const { return f_; }
  const std::vector<Polynomial>& basis() const { return basis_; }
  const Polynomial& operator[](std::size_t k) const { return basis_.at(k); }
  /// Highest cached index n.
  std::size_t degree() const { return basis_.size() - 1; }
  const std::string& label() const { return label_; }

  /// g f^k at the system's truncation.
  TruncatedSeries dual(std::size_t k) const;

 private:
  void validate_series() const;

  TruncatedSeries g_;
  TruncatedSeries f_;
  std::vector<Polynomial> basis_;
  std::string label_;
};

/// <g f^k | S_n> = n! delta_{n,k} over 0 <= n,k <= n_max. The report
/// compares flattened tables with entry n*(n_max+1)+k.
VerificationReport check_biorthogonality(const ShefferSystem& sys, std::size_t n_max,
                                         const CheckOptions& options = {});

/// b_k = <g f^k | p> / k!, so that p = sum b_k S_k.
ExpansionResult expand_in_sheffer(const Polynomial& p, const ShefferSystem& sys);

/// sum_k b_k S_k for the system's basis.
Polynomial recombine(std::span<const Rational> coefficients, const ShefferSystem& sys);

/// lambda_k = <h | S_k> / k! for k = 0..n, so that h = sum lambda_k g f^k.
std::vector<Rational> expand_functional_in_sheffer(const TruncatedSeries& h, const ShefferSystem& sys,
                                                   std::size_t n);

/// sum_k lambda_k g f^k modulo t^(n+1), n = lambda.size() - 1.
TruncatedSeries recombine_functional(std::span<const Rational> lambda, const ShefferSystem& sys);

/// f(t) S_n(x) == n S_{n-1}(x).
VerificationReport lowering_check(const ShefferSystem& sys, std::size_t n, const CheckOptions& options = {});

/// One step of the Appell derivative recurrence:
///   S_{k+1}(x) = x S_k(x) - (g'(t)/g(t)) S_k(x),
/// i.e. multiply by x, then subtract the operator g'/g acting on S_k.
/// g'/g is formed at truncation N-1 since derivative() loses a term.
Polynomial appell_recurrence_step(const TruncatedSeries& g, const Polynomial& s_k);

}  // namespace umbral
