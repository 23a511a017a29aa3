#pragma once

#include <string>

#include <json.hpp>

#include "curvejac/abel_jacobi.hpp"
#include "curvejac/contraction.hpp"
#include "curvejac/jacobian.hpp"
#include "curvejac/modification.hpp"
#include "curvejac/obstruction.hpp"

namespace curvejac {

using Json = nlohmann::ordered_json;

/// Torus coordinate convention written next to every class.
inline constexpr const char* kTorusOrientation =
    "value(b_i)/value(b_0) within each singularity, normalized to 1 along the spanning forest";

/// "sing:component@point"
std::string branch_label(const BranchKey& key);

Json to_json(const Rational& r);
Json to_json(const Jet& j);
Json to_json(const CurveConfig& c);
Json to_json(const JacobianPresentation& p);
Json to_json(const JacElement& e);
Json to_json(const GeneratorSet& g);
Json to_json(const LiftFailure& f, const CurveConfig& config, const std::string& singularity);
Json to_json(const Witness& w, const CurveConfig& config);

/// Serialized form used for byte-stability checks and CLI output.
std::string dump(const Json& j);

}  // namespace curvejac
