#pragma once

#include <string>
#include <variant>
#include <vector>

#include "curvejac/algebra/jet.hpp"
#include "curvejac/curve_model.hpp"

namespace curvejac {

/// Can a unit germ over the singularity c be written as (global unit of the
/// normalization above c) x (local unit of C at c)?
struct LiftabilityProblem {
  CurveConfig config;
  std::string singularity;
  /// One jet per branch of c, order = branch multiplicity.
  std::vector<Jet> germ;
  /// Component index -> connected component of the curve normalized above c only.
  std::vector<int> block_of_component;
};

/// Partition of components obtained by detaching every branch of c.
std::vector<int> partial_normalization_blocks(const CurveConfig& config, const std::string& singularity);

/// Throws InvalidProblem for an unknown singularity.
LiftabilityProblem make_liftability_problem(const CurveConfig& config, const std::string& singularity,
                                            std::vector<Jet> germ);

/// germ_b = lambda_{block(b)} * mu for every branch b.
struct LiftCertificate {
  Rational mu{1};
  std::vector<Rational> block_scalars;
};

struct LiftFailure {
  enum class Kind { NonconstantJet, UnequalValues };
  Kind kind = Kind::NonconstantJet;
  int branch = 0;
  /// The branch in the same block carrying a different value (UnequalValues only).
  int other_branch = -1;
};

const char* to_string(LiftFailure::Kind kind);

using LiftabilityResult = std::variant<LiftCertificate, LiftFailure>;

/// Throws InvalidProblem on a malformed problem.
LiftabilityResult liftability_test(const LiftabilityProblem& problem);

enum class WitnessCase { NonReducedJet, SameComponentTwoBranches, ConnectivityValue };

const char* to_string(WitnessCase c);

struct Witness {
  std::string singularity;
  int branch = 0;
  WitnessCase case_tag = WitnessCase::NonReducedJet;
  Rational lambda{1};
  std::vector<Jet> germ;
  /// The solver's rejection of the germ.
  LiftFailure failure;
};

/// The candidate germ was liftable; carries what was tried and the solver's certificate.
struct WitnessNotFound {
  WitnessCase attempted = WitnessCase::ConnectivityValue;
  std::vector<Jet> germ;
  LiftCertificate certificate;
};

using WitnessResult = std::variant<Witness, WitnessNotFound>;

/// Builds a non-liftable unit germ at (c, x): a nonconstant jet at a
/// non-reduced branch, else the value 2 at x and 1 elsewhere. Every witness is
/// re-checked by liftability_test. Throws SiteIsModifiable when (c, x) is a
/// modification site and InvalidProblem for unknown c or x.
WitnessResult obstruction_witness(const CurveConfig& config, const std::string& singularity, int branch);

}  // namespace curvejac
