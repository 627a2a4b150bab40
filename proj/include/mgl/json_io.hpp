#pragma once

#include <string>

#include <json.hpp>

#include "mgl/conditions.hpp"
#include "mgl/constants.hpp"
#include "mgl/decompose.hpp"
#include "mgl/distribution.hpp"
#include "mgl/verifier.hpp"

namespace mgl::io {

using nlohmann::json;

json to_json(const FiniteDistribution& d);

/// Parses {"atoms":[{"x":..., "p":...}, ...]}; rejects malformed input with
/// a diagnostic naming the offending field/element.
FiniteDistribution distribution_from_json(const json& j);
FiniteDistribution load_distribution(const std::string& path);

json to_json(const MixtureDecomposition& m);
json to_json(const BoundsReport& r);
json to_json(const ConditionVerdict& v);
json to_json(const FuzzReport& r);
json to_json(const SharpnessResult& r);

/// 17 significant digits, for lossless float round trips.
std::string format_double(double v);

}  // namespace mgl::io
