#pragma once

#include <json.hpp>

#include "dp8/piclattice.hpp"
#include "dp8/surface.hpp"

namespace dp8 {

using Json = nlohmann::json;

/// Integers that fit in 64 bits become JSON numbers; everything else is a
/// "p/q" string.
Json rational_json(const Rational& r);
/// Rational over Q, [x, y] for x + y sqrt(m) over a quadratic field.
Json scalar_json(const Scalar& x);

Json to_json(const BrauerClass2& b);
Json to_json(const BrauerSubgroup& g);
Json to_json(const Conic& c);
Json to_json(const QuadraticForm& q);
Json to_json(const QuadField& k);
Json to_json(const MinimalModel& m);
Json to_json(const AmitsurGroup& am);
Json to_json(const ScenarioReport& r);

/// Wire descriptor of a surface (same shape the CLI accepts).
Json descriptor_json(const DP8Surface& x);

/// Report fields: variant, pointless, picard_rank, splitting_field,
/// am_over_q, am_over_L, quadric, minimal_models.
Json classification_report(const DP8Surface& x, int k_max);
Json classification_report(const QuadricClassification& c, const QuadraticForm& q, int k_max);

}  // namespace dp8
