#include "hooklab/json_io.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hooklab::json {

json to_json(const Rational& r) { return json::array({r.get_num().get_str(), r.get_den().get_str()}); }

Rational rational_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string()) {
    throw std::invalid_argument("a rational is a two-element array of decimal strings");
  }
  return parse_rational(j[0].get<std::string>() + "/" + j[1].get<std::string>());
}

json to_json(const Partition& p) {
  json out = json::array();
  for (int part : p.parts()) {
    out.push_back(part);
  }
  return out;
}

Partition partition_from_json(const json& j) {
  if (!j.is_array()) {
    throw std::invalid_argument("a partition is a JSON array of integers");
  }
  return Partition(j.get<std::vector<int>>());
}

json to_json(const HookMultiset& m) { return json(m.entries()); }

json to_json(const RationalSeries& s) {
  json coeffs = json::array();
  for (const auto& c : s.coeffs()) {
    coeffs.push_back(to_json(c));
  }
  return {{"q_offset", to_json(s.q_offset())}, {"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

RationalSeries series_from_json(const json& j) {
  const auto order = j.at("order").get<std::size_t>();
  const auto& coeffs = j.at("coeffs");
  if (coeffs.size() != order + 1) {
    throw std::invalid_argument("series coeffs must have order + 1 entries");
  }
  std::vector<Rational> values;
  values.reserve(coeffs.size());
  for (const auto& c : coeffs) {
    values.push_back(rational_from_json(c));
  }
  return RationalSeries(std::move(values), rational_from_json(j.at("q_offset")));
}

json to_json(const BracketReport& r) {
  json params = json::array();
  for (const auto& p : r.parameters) {
    params.push_back(to_json(p));
  }
  json discrepancy = nullptr;
  if (r.first_discrepancy) {
    discrepancy = {{"exponent", r.first_discrepancy->exponent},
                   {"lhs", to_json(r.first_discrepancy->lhs)},
                   {"rhs", to_json(r.first_discrepancy->rhs)}};
  }
  json out = {{"statistic", r.statistic}, {"parameters", std::move(params)},
              {"order", r.order},         {"equal", r.equal},
              {"first_discrepancy", std::move(discrepancy)},
              {"lhs", to_json(r.lhs)},    {"rhs", to_json(r.rhs)}};
  if (!r.note.empty()) {
    out["note"] = r.note;
  }
  return out;
}

namespace {

int decimal_digits(mpfr_prec_t prec) {
  return static_cast<int>(std::ceil(static_cast<double>(prec) * std::log10(2.0))) + 2;
}

long lowest_exponent(mpfr_prec_t prec) { return -2 * static_cast<long>(prec); }

}  // namespace

json to_json(const HighPrecisionComplex& z) {
  const mpfr_prec_t prec = z.precision_bits();
  return {{"re", z.real().to_string(decimal_digits(prec))},
          {"im", z.imag().to_string(decimal_digits(prec))},
          {"prec_bits", prec},
          {"err_log2", z.error_bound().log2_ceil(lowest_exponent(prec))}};
}

HighPrecisionComplex complex_from_json(const json& j) {
  const auto prec = j.at("prec_bits").get<mpfr_prec_t>();
  const auto err_log2 = j.at("err_log2").get<long>();
  return HighPrecisionComplex(Real::parse(j.at("re").get<std::string>(), prec),
                              Real::parse(j.at("im").get<std::string>(), prec),
                              ErrorBound::pow2(err_log2));
}

json to_json(const CheckResult& c) {
  return {{"point", to_json(c.point)},
          {"check", to_string(c.kind)},
          {"t", c.t},
          {"residual", to_json(c.residual)},
          {"residual_log2", c.residual_log2()},
          {"budget_log2", c.budget_log2()},
          {"pass", c.within_budget()}};
}

json to_json(const CsReport& r) {
  json probe = nullptr;
  if (r.probe) {
    probe = {{"power", r.probe->power}, {"rational", to_json(r.probe->value)}};
  }
  const long floor = lowest_exponent(r.residual.precision_bits());
  return {{"tau", to_json(r.tau)},
          {"D", r.d},
          {"t", r.t},
          {"combination", to_json(r.combination)},
          {"psi_over_eta", to_json(r.psi_over_eta)},
          {"ratio", r.ratio ? to_json(*r.ratio) : json(nullptr)},
          {"probe", std::move(probe)},
          {"alpha", to_json(r.alpha)},
          {"beta", to_json(r.beta)},
          {"degenerate", r.degenerate},
          {"residual_log2", r.residual.magnitude_upper().log2_ceil(floor)},
          {"remark_residual_log2", r.remark_residual.magnitude_upper().log2_ceil(floor)},
          {"budget_log2", r.residual.error_bound().log2_ceil(floor)},
          {"pass", r.pass()}};
}

}  // namespace hooklab::json
