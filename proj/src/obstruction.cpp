#include "curvejac/obstruction.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "curvejac/error.hpp"
#include "curvejac/modification.hpp"

namespace curvejac {

const char* to_string(LiftFailure::Kind kind) {
  switch (kind) {
    case LiftFailure::Kind::NonconstantJet: return "NonconstantJet";
    case LiftFailure::Kind::UnequalValues: return "UnequalValues";
  }
  return "Unknown";
}

const char* to_string(WitnessCase c) {
  switch (c) {
    case WitnessCase::NonReducedJet: return "NonReducedJet";
    case WitnessCase::SameComponentTwoBranches: return "SameComponentTwoBranches";
    case WitnessCase::ConnectivityValue: return "ConnectivityValue";
  }
  return "Unknown";
}

std::vector<int> partial_normalization_blocks(const CurveConfig& config, const std::string& singularity) {
  const DualGraph graph = dual_graph(config);
  const int c = config.singularity_index(singularity);
  if (c < 0) throw MathError(ErrorCode::InvalidProblem, "no singularity '" + singularity + "'");
  UnionFind uf(graph.num_vertices());
  for (const auto& e : graph.edges) {
    if (e.singularity != c) uf.unite(e.component, graph.singularity_vertex(e.singularity));
  }
  std::map<int, int> label;
  std::vector<int> blocks;
  for (int i = 0; i < graph.num_components; ++i) {
    const auto [it, inserted] = label.emplace(uf.find(i), static_cast<int>(label.size()));
    blocks.push_back(it->second);
  }
  return blocks;
}

LiftabilityProblem make_liftability_problem(const CurveConfig& config, const std::string& singularity,
                                            std::vector<Jet> germ) {
  // Computed first: a throw from inside the braced initializer would leak the copies (GCC < 13).
  auto blocks = partial_normalization_blocks(config, singularity);
  return {config, singularity, std::move(germ), std::move(blocks)};
}

LiftabilityResult liftability_test(const LiftabilityProblem& problem) {
  const auto& config = problem.config;
  if (!validate(config).empty()) throw MathError(ErrorCode::InvalidProblem, "invalid configuration");
  const int c = config.singularity_index(problem.singularity);
  if (c < 0) throw MathError(ErrorCode::InvalidProblem, "no singularity '" + problem.singularity + "'");
  const auto& branches = config.singularities[static_cast<std::size_t>(c)].branches;
  if (problem.germ.size() != branches.size()) {
    throw MathError(ErrorCode::InvalidProblem, "germ needs one jet per branch of " + problem.singularity);
  }
  if (problem.block_of_component.size() != config.components.size()) {
    throw MathError(ErrorCode::InvalidProblem, "partition does not cover the components");
  }
  for (std::size_t b = 0; b < branches.size(); ++b) {
    if (problem.germ[b].order() != branches[b].multiplicity || !problem.germ[b].is_unit()) {
      throw MathError(ErrorCode::InvalidProblem,
                      "germ entry " + std::to_string(b) + " must be a unit jet of order " +
                          std::to_string(branches[b].multiplicity));
    }
  }

  // Local units of K + I restrict to constants on these truncations, and
  // global units are constant per block, so every jet must be constant.
  for (std::size_t b = 0; b < branches.size(); ++b) {
    if (!problem.germ[b].is_constant()) {
      return LiftFailure{LiftFailure::Kind::NonconstantJet, static_cast<int>(b), -1};
    }
  }

  const int num_blocks = problem.block_of_component.empty()
                             ? 0
                             : *std::max_element(problem.block_of_component.begin(),
                                                 problem.block_of_component.end()) + 1;
  std::vector<std::optional<std::pair<Rational, int>>> seen(static_cast<std::size_t>(num_blocks));
  for (std::size_t b = 0; b < branches.size(); ++b) {
    const int block = problem.block_of_component[static_cast<std::size_t>(
        config.component_index(branches[b].component))];
    const Rational& value = problem.germ[b][0];
    auto& slot = seen[static_cast<std::size_t>(block)];
    if (!slot) {
      slot.emplace(value, static_cast<int>(b));
    } else if (slot->first != value) {
      return LiftFailure{LiftFailure::Kind::UnequalValues, static_cast<int>(b), slot->second};
    }
  }

  LiftCertificate cert;
  for (const auto& slot : seen) cert.block_scalars.push_back(slot ? slot->first : Rational(1));
  return cert;
}

WitnessResult obstruction_witness(const CurveConfig& config, const std::string& singularity, int branch) {
  const int c = config.singularity_index(singularity);
  if (c < 0) throw MathError(ErrorCode::InvalidProblem, "no singularity '" + singularity + "'");
  const auto& branches = config.singularities[static_cast<std::size_t>(c)].branches;
  if (branch < 0 || branch >= static_cast<int>(branches.size())) {
    throw MathError(ErrorCode::InvalidProblem, "branch index out of range");
  }
  const auto sites = modifiable_sites(config);
  if (std::find(sites.begin(), sites.end(), ModificationSite{singularity, branch}) != sites.end()) {
    throw MathError(ErrorCode::SiteIsModifiable,
                    "(" + singularity + ", " + std::to_string(branch) + ") is a modification site");
  }

  const Branch& x = branches[static_cast<std::size_t>(branch)];
  std::vector<Jet> germ;
  for (const auto& b : branches) germ.push_back(Jet::one(b.multiplicity));

  WitnessCase tag;
  Rational lambda(1);
  if (x.multiplicity >= 2) {
    tag = WitnessCase::NonReducedJet;
    std::vector<Rational> coeffs(static_cast<std::size_t>(x.multiplicity));
    coeffs[0] = 1;
    coeffs[1] = 1;
    germ[static_cast<std::size_t>(branch)] = Jet(std::move(coeffs));
  } else {
    const auto shared = std::count_if(branches.begin(), branches.end(),
                                      [&](const Branch& b) { return b.component == x.component; });
    tag = shared > 1 ? WitnessCase::SameComponentTwoBranches : WitnessCase::ConnectivityValue;
    lambda = 2;
    germ[static_cast<std::size_t>(branch)] = Jet::constant(lambda, x.multiplicity);
  }

  const auto verdict = liftability_test(make_liftability_problem(config, singularity, germ));
  if (const auto* cert = std::get_if<LiftCertificate>(&verdict)) {
    return WitnessNotFound{tag, std::move(germ), *cert};
  }
  return Witness{singularity, branch, tag, lambda, std::move(germ), std::get<LiftFailure>(verdict)};
}

}  // namespace curvejac
