#include "curvejac/jacobian.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <queue>

#include "curvejac/error.hpp"

namespace curvejac {

LocalUnitQuotient local_unit_quotient(const Singularity& s) {
  for (const auto& b : s.branches) {
    if (b.multiplicity < 1) {
      throw MathError(ErrorCode::InvalidConfig, "branch multiplicity < 1 at " + s.id);
    }
  }
  if (s.total_multiplicity() < 2) {
    throw MathError(ErrorCode::InvalidConfig, "singularity " + s.id + " has total multiplicity < 2");
  }
  LocalUnitQuotient q;
  q.singularity = s.id;
  q.torus_rank = static_cast<int>(s.branches.size()) - 1;
  for (const auto& b : s.branches) q.unipotent_rank += b.multiplicity - 1;
  q.branch_order = s.branches;
  return q;
}

namespace {

struct ForestEdge {
  int edge;
  int to;
};

/// Adjacency over the spanning forest only.
std::vector<std::vector<ForestEdge>> forest_adjacency(const JacobianPresentation& p) {
  std::vector<std::vector<ForestEdge>> adj(static_cast<std::size_t>(p.num_components + p.num_singularities));
  for (const int e : p.spanning_forest) {
    const auto& edge = p.edges[static_cast<std::size_t>(e)];
    const int a = edge.component;
    const int b = p.num_components + edge.singularity;
    adj[static_cast<std::size_t>(a)].push_back({e, b});
    adj[static_cast<std::size_t>(b)].push_back({e, a});
  }
  return adj;
}

/// Edges on the forest path from `from` to `to`, in walking order.
std::vector<int> forest_path(const std::vector<std::vector<ForestEdge>>& adj, int from, int to) {
  std::vector<int> via(adj.size(), -1);
  std::vector<int> prev(adj.size(), -1);
  std::vector<bool> seen(adj.size(), false);
  std::queue<int> q;
  q.push(from);
  seen[static_cast<std::size_t>(from)] = true;
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    if (u == to) break;
    for (const auto& fe : adj[static_cast<std::size_t>(u)]) {
      if (seen[static_cast<std::size_t>(fe.to)]) continue;
      seen[static_cast<std::size_t>(fe.to)] = true;
      via[static_cast<std::size_t>(fe.to)] = fe.edge;
      prev[static_cast<std::size_t>(fe.to)] = u;
      q.push(fe.to);
    }
  }
  std::vector<int> path;
  for (int v = to; v != from; v = prev[static_cast<std::size_t>(v)]) {
    path.push_back(via[static_cast<std::size_t>(v)]);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

void require_same(std::uint64_t a, std::uint64_t b) {
  if (a != b) throw MathError(ErrorCode::PresentationMismatch, "elements of different Jacobians");
}

}  // namespace

JacobianPresentation jacobian_structure(const CurveConfig& config) {
  const DualGraph graph = dual_graph(config);
  JacobianPresentation p;
  p.config_fingerprint = fingerprint(config);
  p.num_components = graph.num_components;
  p.num_singularities = graph.num_singularities;
  p.edges = graph.edges;
  p.abelian_rank = config.total_genus();

  for (const auto& e : graph.edges) {
    const auto& sing = config.singularities[static_cast<std::size_t>(e.singularity)];
    const auto& br = sing.branches[static_cast<std::size_t>(e.branch)];
    p.edge_keys.push_back({sing.id, br.component, br.point});
    p.edge_multiplicity.push_back(br.multiplicity);
  }

  std::vector<int> order(graph.edges.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    const auto& ea = graph.edges[static_cast<std::size_t>(a)];
    const auto& eb = graph.edges[static_cast<std::size_t>(b)];
    const auto& ia = config.singularities[static_cast<std::size_t>(ea.singularity)].id;
    const auto& ib = config.singularities[static_cast<std::size_t>(eb.singularity)].id;
    if (ia != ib) return ia < ib;
    return ea.branch < eb.branch;
  });
  UnionFind uf(graph.num_vertices());
  std::vector<bool> in_forest(graph.edges.size(), false);
  for (const int e : order) {
    const auto& edge = graph.edges[static_cast<std::size_t>(e)];
    if (uf.unite(edge.component, graph.singularity_vertex(edge.singularity))) {
      in_forest[static_cast<std::size_t>(e)] = true;
      p.spanning_forest.push_back(e);
    }
  }
  for (std::size_t e = 0; e < graph.edges.size(); ++e) {
    if (!in_forest[e]) p.torus_basis.push_back(static_cast<int>(e));
  }
  p.torus_rank = static_cast<int>(p.torus_basis.size());

  const auto adj = forest_adjacency(p);
  for (const int e : p.torus_basis) {
    const auto& edge = graph.edges[static_cast<std::size_t>(e)];
    std::vector<int> cycle(graph.edges.size(), 0);
    cycle[static_cast<std::size_t>(e)] = 1;
    const auto path = forest_path(adj, edge.component, graph.singularity_vertex(edge.singularity));
    int sign = -1;
    for (const int f : path) {
      cycle[static_cast<std::size_t>(f)] += sign;
      sign = -sign;
    }
    p.torus_cycles.push_back(std::move(cycle));
  }

  for (std::size_t e = 0; e < graph.edges.size(); ++e) {
    for (int k = 1; k < p.edge_multiplicity[e]; ++k) {
      p.unipotent_basis.push_back({static_cast<int>(e), k});
    }
  }
  p.unipotent_rank = static_cast<int>(p.unipotent_basis.size());
  return p;
}

UnitJetVector UnitJetVector::ones(const JacobianPresentation& presentation) {
  UnitJetVector v;
  for (const int n : presentation.edge_multiplicity) v.jets.push_back(Jet::one(n));
  return v;
}

UnitJetVector operator*(const UnitJetVector& a, const UnitJetVector& b) {
  if (a.jets.size() != b.jets.size()) {
    throw MathError(ErrorCode::ShapeMismatch, "unit-jet vectors of different length");
  }
  UnitJetVector out;
  for (std::size_t i = 0; i < a.jets.size(); ++i) out.jets.push_back(a.jets[i] * b.jets[i]);
  return out;
}

JacElement jac_zero(const JacobianPresentation& presentation) {
  JacElement z;
  z.config_fingerprint = presentation.config_fingerprint;
  z.torus_coords.assign(static_cast<std::size_t>(presentation.torus_rank), Rational(1));
  z.unipotent_coords.assign(static_cast<std::size_t>(presentation.unipotent_rank), Rational(0));
  return z;
}

JacElement class_reduce(const CurveConfig& config, const JacobianPresentation& presentation,
                        const UnitJetVector& v) {
  require_same(fingerprint(config), presentation.config_fingerprint);
  if (v.jets.size() != presentation.edges.size()) {
    throw MathError(ErrorCode::ShapeMismatch, "expected " + std::to_string(presentation.edges.size()) +
                                                  " branch jets, got " + std::to_string(v.jets.size()));
  }
  for (std::size_t e = 0; e < v.jets.size(); ++e) {
    if (v.jets[e].order() != presentation.edge_multiplicity[e]) {
      throw MathError(ErrorCode::ShapeMismatch, "jet order at branch " + std::to_string(e) +
                                                    " must equal its multiplicity");
    }
    if (!v.jets[e].is_unit()) {
      throw MathError(ErrorCode::NonUnitEntry, "entry " + std::to_string(e) + " is not a unit");
    }
  }

  // Vertex scalars s with s_comp * s_sing * value = 1 on every forest edge.
  const std::size_t nv = static_cast<std::size_t>(presentation.num_components + presentation.num_singularities);
  std::vector<std::optional<Rational>> scalar(nv);
  const auto adj = forest_adjacency(presentation);
  for (std::size_t root = 0; root < nv; ++root) {
    if (scalar[root]) continue;
    scalar[root] = Rational(1);
    std::queue<int> q;
    q.push(static_cast<int>(root));
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (const auto& fe : adj[static_cast<std::size_t>(u)]) {
        auto& target = scalar[static_cast<std::size_t>(fe.to)];
        if (target) continue;
        const Rational& value = v.jets[static_cast<std::size_t>(fe.edge)][0];
        target = (*scalar[static_cast<std::size_t>(u)] * value).inverse();
        q.push(fe.to);
      }
    }
  }

  JacElement out;
  out.config_fingerprint = presentation.config_fingerprint;
  for (const int e : presentation.torus_basis) {
    const auto& edge = presentation.edges[static_cast<std::size_t>(e)];
    out.torus_coords.push_back(v.jets[static_cast<std::size_t>(e)][0] *
                               *scalar[static_cast<std::size_t>(edge.component)] *
                               *scalar[static_cast<std::size_t>(presentation.num_components + edge.singularity)]);
  }

  std::vector<std::optional<Jet>> logs(v.jets.size());
  for (const auto& u : presentation.unipotent_basis) {
    auto& lg = logs[static_cast<std::size_t>(u.edge)];
    if (!lg) lg = unit_log(v.jets[static_cast<std::size_t>(u.edge)]);
    out.unipotent_coords.push_back((*lg)[u.degree]);
  }
  return out;
}

JacElement jac_add(const JacElement& a, const JacElement& b) {
  require_same(a.config_fingerprint, b.config_fingerprint);
  if (a.torus_coords.size() != b.torus_coords.size() ||
      a.unipotent_coords.size() != b.unipotent_coords.size()) {
    throw MathError(ErrorCode::PresentationMismatch, "coordinate counts differ");
  }
  JacElement out = a;
  for (std::size_t i = 0; i < out.torus_coords.size(); ++i) out.torus_coords[i] *= b.torus_coords[i];
  for (std::size_t i = 0; i < out.unipotent_coords.size(); ++i) {
    out.unipotent_coords[i] += b.unipotent_coords[i];
  }
  return out;
}

JacElement jac_neg(const JacElement& a) {
  JacElement out = a;
  for (auto& t : out.torus_coords) t = t.inverse();
  for (auto& u : out.unipotent_coords) u = -u;
  return out;
}

bool jac_eq(const JacElement& a, const JacElement& b) {
  require_same(a.config_fingerprint, b.config_fingerprint);
  return a == b;
}

namespace {

std::vector<int> edge_map(const JacobianPresentation& from, const JacobianPresentation& to) {
  if (from.edge_keys.size() != to.edge_keys.size()) {
    throw MathError(ErrorCode::PresentationMismatch, "dual graphs have different edge counts");
  }
  std::map<BranchKey, int> index_in_to;
  for (std::size_t e = 0; e < to.edge_keys.size(); ++e) index_in_to.emplace(to.edge_keys[e], static_cast<int>(e));
  std::vector<int> map;
  for (std::size_t e = 0; e < from.edge_keys.size(); ++e) {
    const auto it = index_in_to.find(from.edge_keys[e]);
    if (it == index_in_to.end() ||
        to.edge_multiplicity[static_cast<std::size_t>(it->second)] != from.edge_multiplicity[e]) {
      throw MathError(ErrorCode::PresentationMismatch, "branch sets differ");
    }
    map.push_back(it->second);
  }
  return map;
}

Rational int_pow(const Rational& x, int e) {
  Rational base = e < 0 ? x.inverse() : x;
  Rational r(1);
  for (int k = 0; k < std::abs(e); ++k) r *= base;
  return r;
}

}  // namespace

TorusBasisChange torus_change_of_basis(const JacobianPresentation& from,
                                       const JacobianPresentation& to) {
  const auto map = edge_map(from, to);
  TorusBasisChange change;
  for (const auto& cycle_to : to.torus_cycles) {
    std::vector<int> row;
    for (const int e : from.torus_basis) row.push_back(cycle_to[static_cast<std::size_t>(map[static_cast<std::size_t>(e)])]);
    // The cycle must equal the combination of `from` cycles read off its values.
    for (std::size_t f = 0; f < from.edges.size(); ++f) {
      int combined = 0;
      for (std::size_t i = 0; i < row.size(); ++i) combined += row[i] * from.torus_cycles[i][f];
      if (combined != cycle_to[static_cast<std::size_t>(map[f])]) {
        throw MathError(ErrorCode::CertificateFailure, "cycle bases do not span the same lattice");
      }
    }
    change.matrix.push_back(std::move(row));
  }
  return change;
}

JacElement change_basis(const JacobianPresentation& from, const JacobianPresentation& to,
                        const JacElement& element) {
  require_same(element.config_fingerprint, from.config_fingerprint);
  const auto change = torus_change_of_basis(from, to);
  const auto map = edge_map(from, to);
  JacElement out;
  out.config_fingerprint = to.config_fingerprint;
  for (const auto& row : change.matrix) {
    Rational c(1);
    for (std::size_t i = 0; i < row.size(); ++i) c *= int_pow(element.torus_coords[i], row[i]);
    out.torus_coords.push_back(c);
  }
  std::map<std::pair<int, int>, Rational> unip;
  for (std::size_t i = 0; i < from.unipotent_basis.size(); ++i) {
    const auto& u = from.unipotent_basis[i];
    unip[{map[static_cast<std::size_t>(u.edge)], u.degree}] = element.unipotent_coords[i];
  }
  for (const auto& u : to.unipotent_basis) out.unipotent_coords.push_back(unip.at({u.edge, u.degree}));
  return out;
}

long long integer_determinant(std::vector<std::vector<int>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  std::vector<std::vector<long long>> a(n, std::vector<long long>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
  }
  long long sign = 1;
  long long prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && a[swap_with][k] == 0) ++swap_with;
      if (swap_with == n) return 0;
      std::swap(a[k], a[swap_with]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace curvejac
