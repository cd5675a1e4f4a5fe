#pragma once

#include <string>

#include "json.hpp"

#include "g11/canonical.hpp"

namespace g11 {

using json = nlohmann::ordered_json;

/// Term list: [[exponents...], coefficient] in the ring's term order.
json to_json(const Poly& f);
Poly poly_from_json(const RingPtr& R, const json& j);

json to_json(const PlanePoint& p);
PlanePoint point_from_json(const Field& F, const json& j);

json to_json(const PlaneModel& m);
PlaneModel model_from_json(const json& j);

/// Adjoints and quadrics only; the model is stored separately.
json canonical_to_json(const CanonicalCurve& c);

/// Curve file: {"model": ..., "canonical": ...}.
json curve_file(const CanonicalCurve& c);
CanonicalCurve curve_from_file(const json& j);

json to_json(const BettiTable& b);
BettiTable betti_from_json(const json& j);

json to_json(const SyzygySchemeReport& r);
/// One line in the layout "a b | dim deg genus | linear strand".
std::string table_row(const SyzygySchemeReport& r);

PencilKind pencil_kind_from_string(const std::string& s);

}  // namespace g11
