#include "curvejac/modification.hpp"

#include <algorithm>

#include "curvejac/error.hpp"

namespace curvejac {

SiteScan scan_modification_sites(const CurveConfig& config) {
  const DualGraph graph = dual_graph(config);
  SiteScan scan;
  int edge = 0;
  for (std::size_t s = 0; s < config.singularities.size(); ++s) {
    const auto& sing = config.singularities[s];
    const bool all_reduced = std::all_of(sing.branches.begin(), sing.branches.end(),
                                         [](const Branch& b) { return b.multiplicity == 1; });
    for (std::size_t b = 0; b < sing.branches.size(); ++b, ++edge) {
      const Branch& branch = sing.branches[b];
      if (branch.multiplicity != 1) continue;
      const auto on_same_component =
          std::count_if(sing.branches.begin(), sing.branches.end(),
                        [&](const Branch& o) { return o.component == branch.component; });
      if (on_same_component != 1) continue;
      if (connected_components_without(graph, {edge}) <= graph.connected_components) continue;
      const ModificationSite site{sing.id, static_cast<int>(b)};
      (all_reduced ? scan.sites : scan.indeterminate).push_back(site);
    }
  }
  return scan;
}

std::vector<ModificationSite> modifiable_sites(const CurveConfig& config) {
  return scan_modification_sites(config).sites;
}

CurveConfig modify(const CurveConfig& config, const ModificationSite& site) {
  const auto sites = modifiable_sites(config);
  if (std::find(sites.begin(), sites.end(), site) == sites.end()) {
    throw MathError(ErrorCode::NotASite, "(" + site.singularity + ", branch " +
                                             std::to_string(site.branch) + ") is not a modification site");
  }
  CurveConfig out = config;
  const int s = out.singularity_index(site.singularity);
  auto& branches = out.singularities[static_cast<std::size_t>(s)].branches;
  branches.erase(branches.begin() + site.branch);
  if (out.singularities[static_cast<std::size_t>(s)].total_multiplicity() < 2) {
    out.singularities.erase(out.singularities.begin() + s);
  }
  return out;
}

}  // namespace curvejac
