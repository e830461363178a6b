#include "umbral/report.hpp"

#include <algorithm>

namespace umbral {

ReportValue ReportValue::polynomial(const Polynomial& p) {
  return {Kind::Polynomial, std::vector<Rational>(p.coeffs().begin(), p.coeffs().end())};
}

namespace {

void apply_fault(ReportValue& value, const Fault& fault) {
  if (value.entries.size() <= fault.index) value.entries.resize(fault.index + 1);
  value.entries[fault.index] += fault.delta;
  if (value.kind == ReportValue::Kind::Polynomial) {
    while (!value.entries.empty() && value.entries.back() == 0) value.entries.pop_back();
  }
}

}  // namespace

VerificationReport make_report(std::string identity, Params params, ReportValue lhs, ReportValue rhs,
                               const CheckOptions& options) {
  if (options.fault) apply_fault(rhs, *options.fault);

  VerificationReport report;
  report.identity = std::move(identity);
  report.params = std::move(params);
  report.lhs = std::move(lhs);
  report.rhs = std::move(rhs);
  const auto& a = report.lhs.entries;
  const auto& b = report.rhs.entries;
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const Rational x = i < a.size() ? a[i] : Rational(0);
    const Rational y = i < b.size() ? b[i] : Rational(0);
    if (x != y) {
      report.verdict = Verdict::Unequal;
      report.witness = i;
      break;
    }
  }
  return report;
}

std::string to_string(Verdict v) { return v == Verdict::Equal ? "EQUAL" : "UNEQUAL"; }

std::string format_params(const Params& params) {
  std::string out;
  for (const auto& [key, value] : params) {
    if (!out.empty()) out += ' ';
    out += key + '=' + to_string(value);
  }
  return out;
}

bool report_less(const VerificationReport& a, const VerificationReport& b) {
  if (a.identity != b.identity) return a.identity < b.identity;
  return std::lexicographical_compare(a.params.begin(), a.params.end(), b.params.begin(), b.params.end(),
                                      [](const auto& x, const auto& y) {
                                        if (x.first != y.first) return x.first < y.first;
                                        return x.second < y.second;
                                      });
}

}  // namespace umbral
