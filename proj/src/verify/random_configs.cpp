#include "curvejac/verify/random_configs.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace curvejac::gen {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Rational small_rational(Rng& rng) { return Rational(uniform(rng, -9, 9), uniform(rng, 1, 4)); }

Rational small_unit(Rng& rng) {
  for (;;) {
    Rational r = small_rational(rng);
    if (!r.is_zero()) return r;
  }
}

namespace {

P1Point random_point(Rng& rng) {
  if (uniform(rng, 0, 15) == 0) return P1Point::infinity();
  return P1Point(small_rational(rng));
}

std::set<P1Point> used_points(const CurveConfig& config, const std::string& component) {
  std::set<P1Point> used;
  for (const auto& s : config.singularities) {
    for (const auto& b : s.branches) {
      if (b.component == component) used.insert(b.point);
    }
  }
  return used;
}

Branch fresh_branch(Rng& rng, const CurveConfig& config, const std::vector<Branch>& pending,
                    const std::string& component) {
  auto used = used_points(config, component);
  for (const auto& b : pending) {
    if (b.component == component) used.insert(b.point);
  }
  if (const auto base = config.basepoints.find(component); base != config.basepoints.end()) {
    used.insert(base->second);
  }
  for (;;) {
    P1Point p = random_point(rng);
    if (!used.contains(p)) return {component, p, 1};
  }
}

void assign_basepoints(Rng& rng, CurveConfig& config) {
  for (const auto& c : config.components) {
    if (c.genus > 0) continue;
    const auto used = used_points(config, c.id);
    for (;;) {
      P1Point p = uniform(rng, 0, 1) == 0 ? P1Point::infinity() : P1Point(small_rational(rng));
      if (!used.contains(p)) {
        config.basepoints[c.id] = p;
        break;
      }
    }
  }
}

}  // namespace

CurveConfig random_config(Rng& rng, const ConfigShape& shape) {
  CurveConfig config;
  config.name = "random";
  const int nc = uniform(rng, 1, shape.max_components);
  for (int i = 0; i < nc; ++i) {
    const int genus = shape.positive_genus && uniform(rng, 0, 3) == 0 ? uniform(rng, 1, 2) : 0;
    config.components.push_back({"C" + std::to_string(i), genus});
  }
  const int ns = uniform(rng, 0, shape.max_singularities);
  for (int s = 0; s < ns; ++s) {
    Singularity sing;
    sing.id = "s" + std::to_string(s);
    const int nb = uniform(rng, 1, shape.max_branches);
    for (int b = 0; b < nb; ++b) {
      const auto& comp = config.components[static_cast<std::size_t>(uniform(rng, 0, nc - 1))];
      Branch br = fresh_branch(rng, config, sing.branches, comp.id);
      if (shape.non_reduced && comp.genus == 0 && uniform(rng, 0, 3) == 0) br.multiplicity = uniform(rng, 2, 3);
      sing.branches.push_back(br);
    }
    if (sing.total_multiplicity() < 2) {
      const auto& only = sing.branches.front();
      if (shape.non_reduced && config.component(only.component).genus == 0) {
        sing.branches.front().multiplicity = 2;
      } else {
        const auto& comp = config.components[static_cast<std::size_t>(uniform(rng, 0, nc - 1))];
        sing.branches.push_back(fresh_branch(rng, config, sing.branches, comp.id));
      }
    }
    config.singularities.push_back(std::move(sing));
  }
  if (shape.basepoints) assign_basepoints(rng, config);
  return config;
}

ModifiableCase random_modifiable(Rng& rng, const ConfigShape& shape) {
  CurveConfig config = random_config(rng, shape);
  config.basepoints.clear();
  const Component x{"X", shape.positive_genus && uniform(rng, 0, 3) == 0 ? 1 : 0};
  config.components.push_back(x);

  // Optional self-gluings of X, which keep it attached to the rest only through m.
  if (x.genus == 0 && uniform(rng, 0, 2) == 0) {
    Singularity self;
    self.id = "xs";
    self.branches.push_back(fresh_branch(rng, config, {}, "X"));
    self.branches.push_back(fresh_branch(rng, config, self.branches, "X"));
    config.singularities.push_back(self);
  }

  Singularity m;
  m.id = "m";
  const int others = uniform(rng, 1, 3);
  const int nc = static_cast<int>(config.components.size()) - 1;
  for (int i = 0; i < others; ++i) {
    const auto& comp = config.components[static_cast<std::size_t>(uniform(rng, 0, nc - 1))];
    m.branches.push_back(fresh_branch(rng, config, m.branches, comp.id));
  }
  const int x_pos = uniform(rng, 0, others);
  m.branches.insert(m.branches.begin() + x_pos, fresh_branch(rng, config, m.branches, "X"));
  const int m_pos = uniform(rng, 0, static_cast<int>(config.singularities.size()));
  config.singularities.insert(config.singularities.begin() + m_pos, m);

  if (shape.basepoints) assign_basepoints(rng, config);
  return {config, {"m", x_pos}};
}

P1Point fresh_point(Rng& rng, const CurveConfig& config, const std::string& component,
                    const std::vector<P1Point>& avoid) {
  auto used = used_points(config, component);
  used.insert(avoid.begin(), avoid.end());
  // Wider pool than branch points, so large samples stay distinct.
  for (int attempt = 0; attempt < 1000; ++attempt) {
    P1Point p = uniform(rng, 0, 63) == 0 ? P1Point::infinity()
                                         : P1Point(Rational(uniform(rng, -60, 60), uniform(rng, 1, 12)));
    if (!used.contains(p)) return p;
  }
  for (long k = 61;; ++k) {
    if (!used.contains(P1Point(k))) return P1Point(k);
  }
}

Jet random_unit_jet(Rng& rng, int order) {
  std::vector<Rational> c;
  c.push_back(small_unit(rng));
  for (int k = 1; k < order; ++k) c.push_back(small_rational(rng));
  return Jet(std::move(c));
}

UnitJetVector random_unit_vector(Rng& rng, const JacobianPresentation& presentation) {
  UnitJetVector v;
  for (const int n : presentation.edge_multiplicity) v.jets.push_back(random_unit_jet(rng, n));
  return v;
}

}  // namespace curvejac::gen
