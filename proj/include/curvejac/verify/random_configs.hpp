#pragma once

#include <random>
#include <vector>

#include "curvejac/algebra/jet.hpp"
#include "curvejac/algebra/p1_point.hpp"
#include "curvejac/curve_model.hpp"
#include "curvejac/jacobian.hpp"
#include "curvejac/modification.hpp"

namespace curvejac::gen {

using Rng = std::mt19937_64;

struct ConfigShape {
  int max_components = 6;
  int max_singularities = 8;
  int max_branches = 4;
  bool positive_genus = true;
  bool non_reduced = true;
  bool basepoints = true;
};

int uniform(Rng& rng, int lo, int hi);
/// Small rational a/b with |a| <= 9, 1 <= b <= 4.
Rational small_rational(Rng& rng);
/// Nonzero small rational.
Rational small_unit(Rng& rng);

/// Always valid. Component ids C0.., singularity ids s0..; every branch point
/// is fresh on its component.
CurveConfig random_config(Rng& rng, const ConfigShape& shape = {});

/// A random configuration with a component X attached to the rest through a
/// single reduced branch of a fully reduced singularity; `site` names it.
struct ModifiableCase {
  CurveConfig config;
  ModificationSite site;
};
ModifiableCase random_modifiable(Rng& rng, const ConfigShape& shape = {});

/// A smooth rational point of a genus-0 component, not yet in `avoid`.
P1Point fresh_point(Rng& rng, const CurveConfig& config, const std::string& component,
                    const std::vector<P1Point>& avoid = {});

/// Random unit jet of the given order.
Jet random_unit_jet(Rng& rng, int order);
UnitJetVector random_unit_vector(Rng& rng, const JacobianPresentation& presentation);

}  // namespace curvejac::gen
