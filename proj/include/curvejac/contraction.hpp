#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "curvejac/algebra/p1_point.hpp"
#include "curvejac/algebra/poly.hpp"
#include "curvejac/curve_model.hpp"

namespace curvejac {

/// Finite closed subscheme of P^1: distinct points with positive multiplicities.
struct FiniteSubscheme {
  std::vector<std::pair<P1Point, int>> points;

  int degree() const;
  bool touches_infinity() const;
};

/// Throws InvalidSubscheme on an empty list, repeated points or multiplicity < 1.
void check_subscheme(const FiniteSubscheme& z);

/// Monic prod (t - a_i)^{n_i}. Throws InfinityUnsupported.
Poly vanishing_ideal_generator(const FiniteSubscheme& z);

/// Generators {g * t^k : 0 <= k < deg g} of K + (g), with the Hilbert-function
/// check: the span of generator monomials of degree <= d has dimension
/// max(1, d - e + 2) for every d <= hilbert_checked_to.
struct GeneratorSet {
  Poly ideal_generator;
  std::vector<Poly> generators;
  int degree_bound = 0;  // largest generator degree, 2e - 1
  int hilbert_checked_to = 0;
  std::vector<int> hilbert_dimensions;  // index d -> observed dimension
};

/// dim of (K + (g))_{<= d} for deg g = e.
int contraction_slice_dimension(int e, int d);

/// Throws NotMonic (also for constant g) and CertificateFailure.
GeneratorSet contraction_generators(const Poly& g, std::optional<int> check_to = std::nullopt);

/// f = constant + sum coeff * prod_i generator_i^{exponents[i]}.
struct MembershipCertificate {
  struct Term {
    Rational coeff;
    std::vector<int> exponents;
  };
  Rational constant;
  std::vector<Term> terms;

  Poly evaluate(const std::vector<Poly>& generators) const;
  /// "7 + 2*G0^2*G1", with Gk standing for generator k.
  std::string to_string() const;
};

struct NotMember {
  /// Degree of the leftover part that no generator monomial can absorb.
  int failing_degree = 0;
};

using MembershipResult = std::variant<MembershipCertificate, NotMember>;

/// Decides f in K + (g) by triangular elimination against one monic generator
/// monomial per degree >= deg g. Throws NotMonic.
MembershipResult subalgebra_membership(const Poly& f, const Poly& g);

/// One genus-0 component "P" with a single singularity "y" whose branches are
/// the points of z. Throws DegreeOne for deg z < 2.
CurveConfig contract_p1(const FiniteSubscheme& z);

/// The affine chart in which the contracted ring K + I is computed. When z
/// meets infinity the coordinate is u = 1/(t - shift), shift the least
/// nonnegative integer outside the support; otherwise u = t.
struct ContractionDatum {
  CurveConfig config;
  std::optional<Rational> chart_shift;
  FiniteSubscheme chart_points;
  GeneratorSet generators;
};

ContractionDatum contraction_datum(const FiniteSubscheme& z);

}  // namespace curvejac
