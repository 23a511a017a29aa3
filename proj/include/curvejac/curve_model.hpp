#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "curvejac/algebra/p1_point.hpp"

namespace curvejac {

/// An irreducible component. Genus 0 means a projective line with coordinate t;
/// positive genus is a rank label only.
struct Component {
  std::string id;
  int genus = 0;

  friend bool operator==(const Component&, const Component&) = default;
};

/// A point of the normalization lying over a singularity. The multiplicity n
/// records the scheme structure: the local ring at the singularity is
/// K + prod_b m_b^{n_b}.
struct Branch {
  std::string component;
  P1Point point;
  int multiplicity = 1;

  friend bool operator==(const Branch&, const Branch&) = default;
};

struct Singularity {
  std::string id;
  /// Input order is significant: branch 0 is the reference branch for torus coordinates.
  std::vector<Branch> branches;

  int total_multiplicity() const;
  /// dim(normalization local ring / local ring) = total multiplicity - 1.
  int delta() const { return total_multiplicity() - 1; }

  friend bool operator==(const Singularity&, const Singularity&) = default;
};

struct CurveConfig {
  std::string name;
  std::vector<Component> components;
  std::vector<Singularity> singularities;
  std::map<std::string, P1Point> basepoints;

  /// -1 when absent.
  int component_index(const std::string& id) const;
  int singularity_index(const std::string& id) const;
  const Component& component(const std::string& id) const;
  const Singularity& singularity(const std::string& id) const;

  int total_genus() const;
  int total_branches() const;

  friend bool operator==(const CurveConfig&, const CurveConfig&) = default;
};

enum class ViolationKind {
  NoComponents,
  DuplicateComponentId,
  DuplicateSingularityId,
  NegativeGenus,
  UnknownComponent,
  NonpositiveMultiplicity,
  TotalMultiplicityTooSmall,
  DuplicateBranchPoint,
  PositiveGenusNonReduced,
  BasepointNotSmooth,
};

const char* to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  /// Canonical, order-independent description of the offending item.
  std::string subject;

  friend auto operator<=>(const Violation&, const Violation&) = default;
};

/// Sorted list of violations; empty means valid.
std::vector<Violation> validate(const CurveConfig& config);

/// Throws InvalidConfig listing the violations.
void require_valid(const CurveConfig& config);

/// Edge of the bipartite dual graph: one per branch.
struct DualEdge {
  int component = 0;    // index into config.components
  int singularity = 0;  // index into config.singularities
  int branch = 0;       // index into that singularity's branch list
};

/// Vertices 0..C-1 are components, C..C+S-1 singularities.
struct DualGraph {
  int num_components = 0;
  int num_singularities = 0;
  std::vector<DualEdge> edges;  // singularity order, then branch order
  int betti1 = 0;
  int connected_components = 0;

  int num_vertices() const { return num_components + num_singularities; }
  int singularity_vertex(int s) const { return num_components + s; }
};

/// Throws InvalidConfig.
DualGraph dual_graph(const CurveConfig& config);

/// Number of connected components of the dual graph after dropping the listed
/// edges (and nothing else).
int connected_components_without(const DualGraph& graph, const std::vector<int>& dropped_edges);

/// Throws UnknownComponent or PositiveGenusUnsupported.
bool is_smooth_point(const CurveConfig& config, const std::string& component, const P1Point& point);

/// Stable 64-bit fingerprint of the components and singularities (FNV-1a over a
/// canonical dump). Name and basepoints do not participate.
std::uint64_t fingerprint(const CurveConfig& config);

/// Small disjoint-set forest used for connectivity questions on dual graphs.
class UnionFind {
 public:
  explicit UnionFind(int n);
  int find(int x);
  /// False if already joined.
  bool unite(int a, int b);
  int sets() const { return sets_; }

 private:
  std::vector<int> parent_;
  std::vector<int> rank_;
  int sets_;
};

}  // namespace curvejac
