#include "anore/json_io.hpp"

#include <cmath>

namespace anore {

Json complex_to_json(cplx z) { return Json::array({z.real(), z.imag()}); }

cplx complex_from_json(const Json& j) {
  if (j.is_number()) return cplx(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2) {
    return cplx(j[0].get<double>(), j[1].get<double>());
  }
  throw std::invalid_argument("complex value must be a number or [re, im]");
}

Json series_to_json(const TruncatedSeries& s) {
  Json j;
  j["center"] = complex_to_json(s.center());
  Json coeffs = Json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(complex_to_json(c));
  j["coeffs"] = std::move(coeffs);
  if (s.is_polynomial()) j["polynomial"] = true;
  return j;
}

TruncatedSeries series_from_json(const Json& j) {
  const cplx center = complex_from_json(j.at("center"));
  std::vector<cplx> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(complex_from_json(c));
  const bool poly = j.value("polynomial", false);
  return TruncatedSeries(center, std::move(coeffs), poly);
}

Json zero_to_json(const ZeroDatum& z) {
  Json j;
  j["lambda"] = complex_to_json(z.lambda);
  j["order"] = z.order;
  if (std::isinf(z.exponent)) {
    j["s"] = "inf";
  } else {
    j["s"] = z.exponent;
  }
  return j;
}

ZeroDatum zero_from_json(const Json& j) {
  return ZeroDatum(complex_from_json(j.at("lambda")), j.at("order").get<int>());
}

Json algebra_element_to_json(const AlgebraElement& a) {
  Json j;
  Json comps = Json::array();
  for (const auto& c : a.components) comps.push_back(series_to_json(c));
  j["components"] = std::move(comps);
  return j;
}

AlgebraElement algebra_element_from_json(const Json& j) {
  AlgebraElement a;
  for (const auto& c : j.at("components")) a.components.push_back(series_from_json(c));
  return a;
}

Json ore_poly_to_json(const OrePoly& p) {
  Json j;
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs) coeffs.push_back(algebra_element_to_json(c));
  j["coeffs"] = std::move(coeffs);
  return j;
}

OrePoly ore_poly_from_json(const Json& j) {
  OrePoly p;
  for (const auto& c : j.at("coeffs")) p.coeffs.push_back(algebra_element_from_json(c));
  if (p.coeffs.empty()) {
    throw std::invalid_argument("Ore polynomial needs at least one coefficient");
  }
  return p;
}

Json certificate_to_json(const StabilityCertificate& c) {
  Json j;
  j["zero"] = zero_to_json(c.zero);
  j["r"] = c.r;
  j["s"] = c.s;
  j["M"] = c.M;
  j["R"] = c.R;
  j["C_analytic"] = c.C_analytic;
  j["C_empirical"] = c.C_empirical;
  j["trials"] = c.trials;
  j["dominated"] = c.dominated();
  return j;
}

Json relation_report_to_json(const RelationReport& r) {
  Json j;
  j["max_deviation"] = r.max_deviation;
  j["component_deviations"] = r.component_deviations;
  j["series_order"] = r.series_order;
  j["x_degree"] = r.x_degree;
  return j;
}

FunctionSpec function_spec_from_json(const Json& j) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "polynomial") {
    std::vector<cplx> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(complex_from_json(c));
    return FunctionSpec{FunctionModel::polynomial(std::move(coeffs)), std::nullopt, j};
  }
  if (type == "builtin") {
    const std::string name = j.at("name").get<std::string>();
    if (name != "sinh_deformation") {
      throw std::invalid_argument("unknown builtin function: " + name);
    }
    const cplx hbar = complex_from_json(j.at("hbar"));
    auto model = FunctionModel::sinh_deformation(hbar);
    std::vector<ZeroDatum> zeros;
    if (j.contains("zeros")) {
      for (const auto& z : j.at("zeros")) zeros.push_back(zero_from_json(z));
    } else {
      zeros = sinh_deformation_zeros(hbar, j.value("window", 2));
    }
    return FunctionSpec{std::move(model), std::move(zeros), j};
  }
  throw std::invalid_argument("function spec type must be 'polynomial' or 'builtin'");
}

}  // namespace anore
