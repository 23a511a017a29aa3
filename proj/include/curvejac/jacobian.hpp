#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "curvejac/algebra/jet.hpp"
#include "curvejac/algebra/rational.hpp"
#include "curvejac/curve_model.hpp"

namespace curvejac {

/// Stalk of (normalization units)/(local units) at one singularity. For a
/// contraction-type ring K + prod m_b^{n_b} the local units contribute only the
/// diagonal constants, so the torus part has rank r - 1 (r branches) and the
/// unipotent part rank sum (n_b - 1).
struct LocalUnitQuotient {
  std::string singularity;
  int torus_rank = 0;
  int unipotent_rank = 0;
  std::vector<Branch> branch_order;
};

/// Throws InvalidConfig for a singularity of total multiplicity < 2 or a
/// non-positive branch multiplicity.
LocalUnitQuotient local_unit_quotient(const Singularity& s);

/// Identifies an edge (branch) independently of list positions.
struct BranchKey {
  std::string singularity;
  std::string component;
  P1Point point;

  friend auto operator<=>(const BranchKey&, const BranchKey&) = default;
};

struct UnipotentCoordinate {
  int edge = 0;    // branch index in input order
  int degree = 0;  // jet degree k, 1 <= k < multiplicity
};

/// Coordinates on Jac(C) = torus x unipotent x abelian. Edges are the branches
/// in input order (singularity list, then branch list).
struct JacobianPresentation {
  std::uint64_t config_fingerprint = 0;
  int torus_rank = 0;
  int unipotent_rank = 0;
  int abelian_rank = 0;

  int num_components = 0;
  int num_singularities = 0;
  std::vector<DualEdge> edges;
  std::vector<BranchKey> edge_keys;
  std::vector<int> edge_multiplicity;

  /// Kruskal forest over edges ordered by (singularity id, branch index).
  std::vector<int> spanning_forest;
  /// Non-forest edges in input order; one torus coordinate each.
  std::vector<int> torus_basis;
  /// Fundamental cycle of each torus basis edge as an exponent vector over
  /// edges: torus coordinate i = prod_f value_f^{torus_cycles[i][f]}.
  std::vector<std::vector<int>> torus_cycles;
  std::vector<UnipotentCoordinate> unipotent_basis;
};

/// Throws InvalidConfig.
JacobianPresentation jacobian_structure(const CurveConfig& config);

/// One unit jet per branch (input order), of order equal to the branch multiplicity.
struct UnitJetVector {
  std::vector<Jet> jets;

  static UnitJetVector ones(const JacobianPresentation& presentation);
  /// Componentwise product.
  friend UnitJetVector operator*(const UnitJetVector& a, const UnitJetVector& b);
};

/// A point of Jac(C) in canonical coordinates. The abelian part carries no
/// coordinates.
struct JacElement {
  std::uint64_t config_fingerprint = 0;
  std::vector<Rational> torus_coords;      // nonzero
  std::vector<Rational> unipotent_coords;  // additive

  friend bool operator==(const JacElement&, const JacElement&) = default;
};

JacElement jac_zero(const JacobianPresentation& presentation);

/// Class of a unit-jet vector under the connecting map. Throws NonUnitEntry,
/// ShapeMismatch or PresentationMismatch.
JacElement class_reduce(const CurveConfig& config, const JacobianPresentation& presentation,
                        const UnitJetVector& v);

/// Throws PresentationMismatch.
JacElement jac_add(const JacElement& a, const JacElement& b);
JacElement jac_neg(const JacElement& a);
bool jac_eq(const JacElement& a, const JacElement& b);

/// Change of torus coordinates between two presentations of the same dual
/// graph (same branch keys, possibly listed in other orders):
/// to_coord[j] = prod_i from_coord[i]^{matrix[j][i]}. The matrix is unimodular.
struct TorusBasisChange {
  std::vector<std::vector<int>> matrix;
};

/// Throws PresentationMismatch when the presentations do not share their branch keys.
TorusBasisChange torus_change_of_basis(const JacobianPresentation& from,
                                       const JacobianPresentation& to);

/// Re-expresses an element of `from` in the coordinates of `to`.
JacElement change_basis(const JacobianPresentation& from, const JacobianPresentation& to,
                        const JacElement& element);

/// Determinant of a square integer matrix (Bareiss); used to confirm unimodularity.
long long integer_determinant(std::vector<std::vector<int>> m);

}  // namespace curvejac
