#pragma once

#include <string>

#include "curvejac/algebra/poly.hpp"
#include "curvejac/algebra/rational.hpp"
#include "curvejac/curve_model.hpp"

// Reference computations that deliberately avoid the library's own graph and
// elimination code: adjacency lists keyed by ids, depth-first search, and
// polynomial remainders.

namespace curvejac::oracle {

/// Connected components of the curve, by DFS over components and singularities.
int connected_components(const CurveConfig& config);

/// #branches - #components - #singularities + #connected components.
int betti1(const CurveConfig& config);

/// Sum over singularities of (total branch multiplicity - 1).
int delta_sum(const CurveConfig& config);

/// f lies in K + (g) iff f mod g is a constant.
bool in_contraction_algebra(const Poly& f, const Poly& g);

/// 1 + dim{g*h : deg(g*h) <= d}.
int contraction_slice_dimension(int e, int d);

/// Closed forms of [t = p] - [t = inf] on the standard cubics and the pair of
/// lines glued at 0 and 1 (see the derivations in the implementation).
Rational nodal_class(const Rational& p);
Rational cusp_class(const Rational& p);
Rational two_line_class(int line, const Rational& p);

}  // namespace curvejac::oracle
