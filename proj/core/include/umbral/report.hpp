#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "umbral/polynomial.hpp"
#include "umbral/rational.hpp"

namespace umbral {

/// Coefficients b_0..b_n of a polynomial in a named basis.
struct ExpansionResult {
  std::string basis;  // FamilyId string form, e.g. "euler" or "euler^2"
  std::vector<Rational> coefficients;
  Polynomial source;
};

enum class Verdict { Equal, Unequal };

/// One side of a checked identity. Polynomials and scalars compare by
/// their coefficient lists; a table is a flattened list of scalars whose
/// layout the producing check documents.
struct ReportValue {
  enum class Kind { Scalar, Polynomial, Table };
  Kind kind = Kind::Scalar;
  std::vector<Rational> entries;

  static ReportValue scalar(const Rational& q) { return {Kind::Scalar, {q}}; }
  static ReportValue polynomial(const Polynomial& p);
  static ReportValue table(std::vector<Rational> entries) { return {Kind::Table, std::move(entries)}; }
};

/// Parameter point of a check, keyed by name ("n", "r", "s", "alpha", "y", ...).
using Params = std::map<std::string, Rational>;

/// A single-coefficient perturbation applied to the right-hand side just
/// before comparison, so that every check can be shown to be falsifiable.
struct Fault {
  std::size_t index = 0;
  Rational delta = 1;
};

struct CheckOptions {
  std::optional<Fault> fault;
};

struct VerificationReport {
  std::string identity;
  Params params;
  ReportValue lhs;
  ReportValue rhs;
  Verdict verdict = Verdict::Equal;
  /// First differing entry when the verdict is Unequal.
  std::optional<std::size_t> witness;
  std::vector<std::string> notes;

  bool equal() const { return verdict == Verdict::Equal; }
};

/// Compares lhs and rhs entry by entry (missing entries count as zero)
/// after applying options.fault to rhs.
VerificationReport make_report(std::string identity, Params params, ReportValue lhs, ReportValue rhs,
                               const CheckOptions& options = {});

std::string to_string(Verdict v);

/// "n=3 r=2 y=1/2", keys in sorted order.
std::string format_params(const Params& params);

/// Orders reports by identity, then by parameter values in key order.
bool report_less(const VerificationReport& a, const VerificationReport& b);

}  // namespace umbral
