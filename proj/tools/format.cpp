#include "format.hpp"

#include <sstream>

namespace umbral::cli {

Json polynomial_to_json(const Polynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_string(c));
  return out;
}

Json series_to_json(const TruncatedSeries& f) {
  Json coeffs = Json::array();
  for (const auto& c : f.coeffs()) coeffs.push_back(to_string(c));
  return Json{{"coeffs", coeffs}, {"truncation", f.truncation()}};
}

namespace {

Json value_to_json(const ReportValue& v) {
  if (v.kind == ReportValue::Kind::Scalar) return to_string(v.entries.empty() ? Rational(0) : v.entries.front());
  Json out = Json::array();
  for (const auto& c : v.entries) out.push_back(to_string(c));
  return out;
}

}  // namespace

Json report_to_json(const VerificationReport& report) {
  Json params = Json::object();
  for (const auto& [key, value] : report.params) params[key] = to_string(value);
  Json out{{"identity", report.identity},
           {"params", params},
           {"verdict", to_string(report.verdict)},
           {"witness_index", report.witness ? Json(*report.witness) : Json(nullptr)},
           {"lhs", value_to_json(report.lhs)},
           {"rhs", value_to_json(report.rhs)}};
  if (!report.notes.empty()) out["notes"] = report.notes;
  return out;
}

std::string family_json(const FamilyId& id, const std::vector<Polynomial>& polys) {
  Json list = Json::array();
  for (const auto& p : polys) list.push_back(polynomial_to_json(p));
  const Json out{{"family", to_string(id)}, {"n", polys.size() - 1}, {"polynomials", list}};
  return out.dump(2) + "\n";
}

std::string family_csv(const std::vector<Polynomial>& polys) {
  std::ostringstream os;
  const std::size_t width = polys.size();
  os << "n";
  for (std::size_t k = 0; k < width; ++k) os << ",x^" << k;
  os << "\n";
  for (std::size_t n = 0; n < polys.size(); ++n) {
    os << n;
    for (std::size_t k = 0; k < width; ++k) os << ',' << to_string(polys[n].coeff(k));
    os << "\n";
  }
  return os.str();
}

namespace {

std::string latex_rational(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return "\\frac{" + q.get_num().get_str() + "}{" + q.get_den().get_str() + "}";
}

std::string family_symbol(const FamilyId& id) {
  switch (id.kind) {
    case FamilyId::Kind::Euler: return "E_{n}(x)";
    case FamilyId::Kind::EulerR: return "E_{n}^{(" + std::to_string(id.order) + ")}(x)";
    case FamilyId::Kind::Bernoulli: return "B_{n}(x)";
    case FamilyId::Kind::BernoulliS: return "B_{n}^{(" + std::to_string(id.order) + ")}(x)";
    case FamilyId::Kind::Monomial: return "x^{n}";
  }
  return "P_{n}(x)";
}

}  // namespace

std::string polynomial_latex(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t k = p.size(); k-- > 0;) {
    const Rational& c = p.coeffs()[k];
    if (c == 0) continue;
    const Rational mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string monomial = k == 0 ? "" : k == 1 ? "x" : "x^{" + std::to_string(k) + "}";
    if (monomial.empty()) {
      out += latex_rational(mag);
    } else {
      out += (mag == 1 ? "" : latex_rational(mag)) + monomial;
    }
  }
  return out;
}

std::string family_latex(const FamilyId& id, const std::vector<Polynomial>& polys) {
  std::ostringstream os;
  os << "\\begin{tabular}{ll}\n";
  os << "$n$ & $" << family_symbol(id) << "$ \\\\\n";
  os << "\\hline\n";
  for (std::size_t n = 0; n < polys.size(); ++n) {
    os << n << " & $" << polynomial_latex(polys[n]) << "$ \\\\\n";
  }
  os << "\\end{tabular}\n";
  return os.str();
}

}  // namespace umbral::cli
