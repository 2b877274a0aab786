#pragma once

#include "json.hpp"

#include "heights/git_binary.hpp"
#include "heights/multiform.hpp"
#include "heights/pencils.hpp"
#include "heights/rational.hpp"
#include "heights/semistability.hpp"

// JSON schemas are documented in docs/schemas.md. Rationals are always the
// strings "p/q" or "p"; integers are also accepted on input.
namespace heights {

using nlohmann::json;

void to_json(json& j, const Rational& r);
void from_json(const json& j, Rational& r);

json form_to_json(const MultiForm<Rational>& f);
MultiForm<Rational> form_from_json(const json& j);

json to_json(const WeightVector& w);
json to_json(const StabilityVerdict& v);
StabilityVerdict verdict_from_json(const json& j);

json to_json(const SingularityProfile& p);
SingularityProfile profile_from_json(const json& j);

json to_json(const PencilDescriptor& p);
PencilDescriptor descriptor_from_json(const json& j);

json to_json(const HeightReport& r);
HeightReport height_report_from_json(const json& j);

json to_json(const BinaryPencil& p);
BinaryPencil binary_pencil_from_json(const json& j);

json to_json(const GitHeightReport& r);
GitHeightReport git_report_from_json(const json& j);

json to_json(const FiberLocus& l);
FiberLocus fiber_locus_from_json(const json& j);

}  // namespace heights
