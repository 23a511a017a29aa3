#include "curvejac/json_io.hpp"

#include <cstdio>

namespace curvejac {

std::string branch_label(const BranchKey& key) {
  return key.singularity + ":" + key.component + "@" + key.point.to_string();
}

Json to_json(const Rational& r) { return r.to_string(); }

Json to_json(const Jet& j) {
  Json arr = Json::array();
  for (const auto& c : j.coeffs()) arr.push_back(c.to_string());
  return arr;
}

Json to_json(const CurveConfig& c) {
  Json j;
  j["name"] = c.name;
  Json comps = Json::array();
  for (const auto& comp : c.components) comps.push_back({{"id", comp.id}, {"genus", comp.genus}});
  j["components"] = comps;
  Json sings = Json::array();
  for (const auto& s : c.singularities) {
    Json branches = Json::array();
    for (const auto& b : s.branches) {
      branches.push_back({{"component", b.component}, {"point", b.point.to_string()}, {"mult", b.multiplicity}});
    }
    sings.push_back({{"id", s.id}, {"branches", branches}});
  }
  j["singularities"] = sings;
  Json base = Json::object();
  for (const auto& [comp, p] : c.basepoints) base[comp] = p.to_string();
  j["basepoints"] = base;
  return j;
}

Json to_json(const JacobianPresentation& p) {
  Json j;
  j["torus_rank"] = p.torus_rank;
  j["unipotent_rank"] = p.unipotent_rank;
  j["abelian_rank"] = p.abelian_rank;
  Json forest = Json::array();
  for (const int e : p.spanning_forest) forest.push_back(branch_label(p.edge_keys[static_cast<std::size_t>(e)]));
  j["spanning_forest"] = forest;
  Json torus = Json::array();
  for (const int e : p.torus_basis) torus.push_back(branch_label(p.edge_keys[static_cast<std::size_t>(e)]));
  j["torus_basis"] = torus;
  Json unip = Json::array();
  for (const auto& u : p.unipotent_basis) {
    Json entry;
    entry["branch"] = branch_label(p.edge_keys[static_cast<std::size_t>(u.edge)]);
    entry["degree"] = u.degree;
    unip.push_back(entry);
  }
  j["unipotent_basis"] = unip;
  j["torus_orientation"] = kTorusOrientation;
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(p.config_fingerprint));
  j["config_fingerprint"] = buf;
  return j;
}

Json to_json(const JacElement& e) {
  Json j;
  Json torus = Json::array();
  for (const auto& t : e.torus_coords) torus.push_back(t.to_string());
  Json unip = Json::array();
  for (const auto& u : e.unipotent_coords) unip.push_back(u.to_string());
  j["torus_coords"] = torus;
  j["unipotent_coords"] = unip;
  return j;
}

Json to_json(const GeneratorSet& g) {
  Json j;
  j["ideal_generator"] = g.ideal_generator.to_string();
  Json gens = Json::array();
  for (const auto& p : g.generators) gens.push_back(p.to_string());
  j["generators"] = gens;
  j["degree_bound"] = g.degree_bound;
  j["hilbert_checked_to"] = g.hilbert_checked_to;
  j["hilbert_dimensions"] = g.hilbert_dimensions;
  return j;
}

Json to_json(const LiftFailure& f, const CurveConfig& config, const std::string& singularity) {
  const auto& branches = config.singularity(singularity).branches;
  auto label = [&](int b) {
    const auto& br = branches[static_cast<std::size_t>(b)];
    return branch_label({singularity, br.component, br.point});
  };
  Json j;
  j["kind"] = to_string(f.kind);
  j["branch"] = label(f.branch);
  if (f.other_branch >= 0) j["other_branch"] = label(f.other_branch);
  return j;
}

Json to_json(const Witness& w, const CurveConfig& config) {
  const auto& br = config.singularity(w.singularity).branches[static_cast<std::size_t>(w.branch)];
  Json j;
  j["singularity"] = w.singularity;
  j["branch"] = w.branch;
  j["branch_label"] = branch_label({w.singularity, br.component, br.point});
  j["case"] = to_string(w.case_tag);
  j["lambda"] = w.lambda.to_string();
  Json germ = Json::array();
  for (const auto& jet : w.germ) germ.push_back(to_json(jet));
  j["germ"] = germ;
  j["solver"] = to_json(w.failure, config, w.singularity);
  return j;
}

std::string dump(const Json& j) { return j.dump(); }

}  // namespace curvejac
