#pragma once

// JSON wire formats: series objects, function specs, algebra elements,
// Ore polynomials, and the report payloads emitted by the CLI.

#include <optional>

#include "json.hpp"

#include "anore/derivation.hpp"
#include "anore/function_model.hpp"
#include "anore/operator_models.hpp"
#include "anore/ore.hpp"
#include "anore/series.hpp"

namespace anore {

using Json = nlohmann::ordered_json;

Json complex_to_json(cplx z);  // [re, im]
cplx complex_from_json(const Json& j);  // [re, im] or a bare number

// {"center":[re,im],"coeffs":[[re,im],...]}; "polynomial":true marks an
// exactly-zero tail and defaults to false on input.
Json series_to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const Json& j);

// {"lambda":[re,im],"order":k,"s":value-or-"inf"}
Json zero_to_json(const ZeroDatum& z);
ZeroDatum zero_from_json(const Json& j);

// {"components":[series,...]}
Json algebra_element_to_json(const AlgebraElement& a);
AlgebraElement algebra_element_from_json(const Json& j);

// {"coeffs":[AlgebraElement,...]}
Json ore_poly_to_json(const OrePoly& p);
OrePoly ore_poly_from_json(const Json& j);

Json certificate_to_json(const StabilityCertificate& c);
Json relation_report_to_json(const RelationReport& r);

// {"type":"polynomial","coeffs":[...]} or
// {"type":"builtin","name":"sinh_deformation","hbar":...,"window":m}
// (builtins may instead declare zeros explicitly via "zeros":[...]).
struct FunctionSpec {
  FunctionModel model;
  std::optional<std::vector<ZeroDatum>> declared_zeros;
  Json echo;
};

FunctionSpec function_spec_from_json(const Json& j);

}  // namespace anore
