#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "umbral/families.hpp"
#include "umbral/polynomial.hpp"
#include "umbral/report.hpp"
#include "umbral/series.hpp"

namespace umbral::cli {

using Json = nlohmann::ordered_json;

/// Coefficient strings, lowest degree first.
Json polynomial_to_json(const Polynomial& p);
/// {"coeffs": [...], "truncation": N}
Json series_to_json(const TruncatedSeries& f);
/// {identity, params, verdict, witness_index, lhs, rhs[, notes]}
Json report_to_json(const VerificationReport& report);

std::string family_json(const FamilyId& id, const std::vector<Polynomial>& polys);
/// Header "n,x^0,..,x^N" then one row per polynomial, zero padded.
std::string family_csv(const std::vector<Polynomial>& polys);
std::string family_latex(const FamilyId& id, const std::vector<Polynomial>& polys);

/// LaTeX rendering of a polynomial, highest degree first.
std::string polynomial_latex(const Polynomial& p);

}  // namespace umbral::cli
