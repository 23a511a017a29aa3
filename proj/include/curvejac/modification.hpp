#pragma once

#include <string>
#include <vector>

#include "curvejac/curve_model.hpp"

namespace curvejac {

/// A branch x of a singularity along which its component can be pulled away
/// from the rest of the curve.
struct ModificationSite {
  std::string singularity;
  int branch = 0;

  friend bool operator==(const ModificationSite&, const ModificationSite&) = default;
};

struct SiteScan {
  /// Reduced branch, alone on its component, at a fully reduced singularity,
  /// whose removal disconnects the dual graph.
  std::vector<ModificationSite> sites;
  /// Same conditions except that some other branch of the singularity is
  /// non-reduced; the scheme-theoretic condition is not decided for these.
  std::vector<ModificationSite> indeterminate;
};

/// Sites in singularity order, then branch order. Throws InvalidConfig.
SiteScan scan_modification_sites(const CurveConfig& config);
std::vector<ModificationSite> modifiable_sites(const CurveConfig& config);

/// Detaches the site's branch; a singularity left with a single reduced branch
/// is deleted. Throws NotASite.
CurveConfig modify(const CurveConfig& config, const ModificationSite& site);

}  // namespace curvejac
