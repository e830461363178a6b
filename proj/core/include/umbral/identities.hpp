#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "umbral/polynomial.hpp"
#include "umbral/rational.hpp"
#include "umbral/report.hpp"

namespace umbral {

// Each *_check computes the two sides of an identity by independent
// routes and compares them exactly. Left sides come from the family
// generators (g(t)^{-1} x^n); right sides are assembled from closed forms,
// number recurrences, or pairings. CheckOptions::fault perturbs the right
// side to demonstrate that a check can fail.

/// E_0..E_n from E_0 = 1, E_n = -(1/2) sum_{l<n} C(n,l) E_l, which is
/// E_n(1) + E_n = 2 delta_{0,n} solved for E_n.
std::vector<Rational> euler_numbers_by_recurrence(std::size_t n);

/// B_0..B_n from B_0 = 1, sum_{l<m} C(m,l) B_l = 0 for m >= 2, which is
/// B_m(1) - B_m = delta_{1,m} solved for B_{m-1}.
std::vector<Rational> bernoulli_numbers_by_recurrence(std::size_t n);

/// b_k = (p^(k)(1) + p^(k)(0)) / (2 k!), so p = sum b_k E_k.
ExpansionResult theorem4_expand(const Polynomial& p);

/// b_k = 2^{-r}/k! sum_l C(r,l) p^(k)(l), so p = sum b_k E_k^{(r)}.
ExpansionResult theorem8_expand(const Polynomial& p, unsigned r);

/// The same coefficients through pairings, b_k = <g^r t^k | p> / k! with
/// g = (e^t+1)/2.
ExpansionResult euler_pairing_expand(const Polynomial& p, unsigned r);

/// sum b_k P_k over the basis named by result.basis.
Polynomial recombine(const ExpansionResult& result);

/// Deterministic degree-n polynomial sum_j (-1)^j (j+1)/(j+2) x^j used as
/// the expansion probe in identity grids.
Polynomial probe_polynomial(std::size_t n);

VerificationReport theorem4_check(const Polynomial& p, const CheckOptions& options = {});
VerificationReport theorem8_check(const Polynomial& p, unsigned r, const CheckOptions& options = {});
VerificationReport corollary5_check(unsigned n, const CheckOptions& options = {});
/// Requires r >= 1. Right side multiplies E_{i_j}(x/r) over weak compositions.
VerificationReport theorem6_check(unsigned n, unsigned r, const CheckOptions& options = {});
/// Requires r >= 1; r = 1 relies on E^{(0)}_m = delta_{m,0} (monomial family).
VerificationReport corollary7_check(unsigned n, unsigned r, const CheckOptions& options = {});
VerificationReport eq61_check(unsigned n, unsigned r, const CheckOptions& options = {});
VerificationReport eq63_check(unsigned n, unsigned s, unsigned r, const CheckOptions& options = {});
/// Polynomial level: \int_x^{x+y} E_n(u) du versus ((e^{yt}-1)/t) E_n(x).
VerificationReport lemma2_check(unsigned n, const Rational& y, const CheckOptions& options = {});
/// Evaluated at x = x0.
VerificationReport lemma2_check_at(unsigned n, const Rational& x0, const Rational& y,
                                   const CheckOptions& options = {});
VerificationReport prop3_check(unsigned n, const Rational& y, const CheckOptions& options = {});
/// E_n(alpha x) versus alpha^n (g(t)/g(t/alpha)) E_n(x). alpha must be nonzero.
VerificationReport scaling_check(unsigned n, const Rational& alpha, const CheckOptions& options = {});
/// Regenerates E_1..E_{k_max} from E_0 alone with the derivative
/// recurrence. Tables are flattened with stride k_max + 1: entry
/// (k-1)*(k_max+1) + j is the x^j coefficient of E_k.
VerificationReport eq29_recurrence_check(unsigned k_max, const CheckOptions& options = {});
/// <2/(e^t+1) | x^n> versus the recurrence Euler number.
VerificationReport remark27_check(unsigned n, const CheckOptions& options = {});
VerificationReport eq54_check(unsigned n, unsigned r, const CheckOptions& options = {});
VerificationReport biorthogonality_check(unsigned n_max, unsigned r, const CheckOptions& options = {});
VerificationReport lowering_euler_check(unsigned n, unsigned r, const CheckOptions& options = {});
/// E^{(r)}_n(x+y) versus sum_k C(n,k) E^{(r)}_{n-k}(x) y^k.
VerificationReport appell_identity_check(unsigned n, unsigned r, const Rational& y,
                                         const CheckOptions& options = {});
VerificationReport eq2_check(unsigned n, const CheckOptions& options = {});
VerificationReport eq3_check(unsigned n, const CheckOptions& options = {});
VerificationReport eq40_check(unsigned n, const CheckOptions& options = {});

/// Parameter ranges for a verification sweep. Empty alpha/y lists fall
/// back to {2, -1, 1/3, 5/2} and {1, 2, 1/2, -1/3}.
struct GridSpec {
  unsigned n_max = 8;
  unsigned r_max = 3;
  unsigned s_max = 3;
  std::vector<Rational> alphas;
  std::vector<Rational> ys;
};

struct IdentityEntry {
  std::string_view id;
  std::vector<Params> (*grid)(const GridSpec&);
  VerificationReport (*run)(const Params&, const CheckOptions&);
};

/// All identities, sorted by id.
std::span<const IdentityEntry> identity_registry();

/// Throws umbral::Error for an unknown id.
const IdentityEntry& find_identity(std::string_view id);

}  // namespace umbral
