#include "curvejac/curve_model.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "curvejac/error.hpp"

namespace curvejac {

int Singularity::total_multiplicity() const {
  int total = 0;
  for (const auto& b : branches) total += b.multiplicity;
  return total;
}

int CurveConfig::component_index(const std::string& id) const {
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (components[i].id == id) return static_cast<int>(i);
  }
  return -1;
}

int CurveConfig::singularity_index(const std::string& id) const {
  for (std::size_t i = 0; i < singularities.size(); ++i) {
    if (singularities[i].id == id) return static_cast<int>(i);
  }
  return -1;
}

const Component& CurveConfig::component(const std::string& id) const {
  const int i = component_index(id);
  if (i < 0) throw MathError(ErrorCode::UnknownComponent, "no component '" + id + "'");
  return components[static_cast<std::size_t>(i)];
}

const Singularity& CurveConfig::singularity(const std::string& id) const {
  const int i = singularity_index(id);
  if (i < 0) throw MathError(ErrorCode::UnknownSingularity, "no singularity '" + id + "'");
  return singularities[static_cast<std::size_t>(i)];
}

int CurveConfig::total_genus() const {
  int g = 0;
  for (const auto& c : components) g += c.genus;
  return g;
}

int CurveConfig::total_branches() const {
  int n = 0;
  for (const auto& s : singularities) n += static_cast<int>(s.branches.size());
  return n;
}

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::NoComponents: return "NoComponents";
    case ViolationKind::DuplicateComponentId: return "DuplicateComponentId";
    case ViolationKind::DuplicateSingularityId: return "DuplicateSingularityId";
    case ViolationKind::NegativeGenus: return "NegativeGenus";
    case ViolationKind::UnknownComponent: return "UnknownComponent";
    case ViolationKind::NonpositiveMultiplicity: return "NonpositiveMultiplicity";
    case ViolationKind::TotalMultiplicityTooSmall: return "TotalMultiplicityTooSmall";
    case ViolationKind::DuplicateBranchPoint: return "DuplicateBranchPoint";
    case ViolationKind::PositiveGenusNonReduced: return "PositiveGenusNonReduced";
    case ViolationKind::BasepointNotSmooth: return "BasepointNotSmooth";
  }
  return "Unknown";
}

std::vector<Violation> validate(const CurveConfig& config) {
  std::vector<Violation> out;
  if (config.components.empty()) out.push_back({ViolationKind::NoComponents, config.name});

  std::map<std::string, int> genus_of;
  std::map<std::string, int> component_count;
  for (const auto& c : config.components) {
    if (++component_count[c.id] == 2) out.push_back({ViolationKind::DuplicateComponentId, c.id});
    if (c.genus < 0) out.push_back({ViolationKind::NegativeGenus, c.id});
    genus_of.emplace(c.id, c.genus);
  }

  std::map<std::string, int> sing_count;
  std::map<std::pair<std::string, P1Point>, int> point_uses;
  for (const auto& s : config.singularities) {
    if (++sing_count[s.id] == 2) out.push_back({ViolationKind::DuplicateSingularityId, s.id});
    for (const auto& b : s.branches) {
      const std::string where = b.component + "@" + b.point.to_string();
      const auto g = genus_of.find(b.component);
      if (g == genus_of.end()) {
        out.push_back({ViolationKind::UnknownComponent, s.id + ":" + b.component});
      } else if (g->second > 0 && b.multiplicity > 1) {
        out.push_back({ViolationKind::PositiveGenusNonReduced, where});
      }
      if (b.multiplicity < 1) out.push_back({ViolationKind::NonpositiveMultiplicity, where});
      if (++point_uses[{b.component, b.point}] == 2) {
        out.push_back({ViolationKind::DuplicateBranchPoint, where});
      }
    }
    if (s.total_multiplicity() < 2) {
      out.push_back({ViolationKind::TotalMultiplicityTooSmall, s.id});
    }
  }

  for (const auto& [comp, point] : config.basepoints) {
    if (!genus_of.contains(comp)) {
      out.push_back({ViolationKind::UnknownComponent, "base:" + comp});
      continue;
    }
    if (point_uses.contains({comp, point})) {
      out.push_back({ViolationKind::BasepointNotSmooth, comp + "@" + point.to_string()});
    }
  }

  std::sort(out.begin(), out.end());
  return out;
}

void require_valid(const CurveConfig& config) {
  const auto violations = validate(config);
  if (violations.empty()) return;
  std::ostringstream os;
  os << "configuration '" << config.name << "' is invalid:";
  for (const auto& v : violations) os << " " << to_string(v.kind) << "(" << v.subject << ")";
  throw MathError(ErrorCode::InvalidConfig, os.str());
}

UnionFind::UnionFind(int n)
    : parent_(static_cast<std::size_t>(n)), rank_(static_cast<std::size_t>(n), 0), sets_(n) {
  std::iota(parent_.begin(), parent_.end(), 0);
}

int UnionFind::find(int x) {
  while (parent_[static_cast<std::size_t>(x)] != x) {
    auto& p = parent_[static_cast<std::size_t>(x)];
    p = parent_[static_cast<std::size_t>(p)];
    x = p;
  }
  return x;
}

bool UnionFind::unite(int a, int b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  auto ra = rank_[static_cast<std::size_t>(a)];
  auto rb = rank_[static_cast<std::size_t>(b)];
  if (ra < rb) std::swap(a, b);
  parent_[static_cast<std::size_t>(b)] = a;
  if (ra == rb) ++rank_[static_cast<std::size_t>(a)];
  --sets_;
  return true;
}

DualGraph dual_graph(const CurveConfig& config) {
  require_valid(config);
  DualGraph g;
  g.num_components = static_cast<int>(config.components.size());
  g.num_singularities = static_cast<int>(config.singularities.size());
  for (std::size_t s = 0; s < config.singularities.size(); ++s) {
    const auto& sing = config.singularities[s];
    for (std::size_t b = 0; b < sing.branches.size(); ++b) {
      g.edges.push_back(
          {config.component_index(sing.branches[b].component), static_cast<int>(s), static_cast<int>(b)});
    }
  }
  g.connected_components = connected_components_without(g, {});
  g.betti1 = static_cast<int>(g.edges.size()) - g.num_vertices() + g.connected_components;
  return g;
}

int connected_components_without(const DualGraph& graph, const std::vector<int>& dropped_edges) {
  UnionFind uf(graph.num_vertices());
  for (std::size_t e = 0; e < graph.edges.size(); ++e) {
    if (std::find(dropped_edges.begin(), dropped_edges.end(), static_cast<int>(e)) !=
        dropped_edges.end()) {
      continue;
    }
    uf.unite(graph.edges[e].component, graph.singularity_vertex(graph.edges[e].singularity));
  }
  return uf.sets();
}

bool is_smooth_point(const CurveConfig& config, const std::string& component, const P1Point& point) {
  const Component& comp = config.component(component);
  if (comp.genus > 0) {
    throw MathError(ErrorCode::PositiveGenusUnsupported,
                    "component '" + component + "' has positive genus");
  }
  for (const auto& s : config.singularities) {
    for (const auto& b : s.branches) {
      if (b.component == component && b.point == point) return false;
    }
  }
  return true;
}

std::uint64_t fingerprint(const CurveConfig& config) {
  std::ostringstream os;
  for (const auto& c : config.components) os << "C " << c.id << ' ' << c.genus << '\n';
  for (const auto& s : config.singularities) {
    os << "S " << s.id;
    for (const auto& b : s.branches) {
      os << ' ' << b.component << '@' << b.point.to_string() << '^' << b.multiplicity;
    }
    os << '\n';
  }
  std::uint64_t h = 14695981039346656037ULL;
  for (const unsigned char ch : os.str()) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace curvejac
