#include "curvejac/cli/app.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "curvejac/dsl.hpp"
#include "curvejac/error.hpp"
#include "curvejac/json_io.hpp"
#include "curvejac/verify/acceptance.hpp"
#include "curvejac/verify/random_configs.hpp"

#ifndef CURVEJAC_FIXTURE_DIR
#define CURVEJAC_FIXTURE_DIR "fixtures"
#endif

namespace curvejac::cli {

namespace {

/// Usage-level failure carrying its own message; exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

CurveConfig load_curve(const std::string& path, std::ostream& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  auto parsed = parse_curve_dsl(ss.str());
  if (!parsed.ok()) {
    for (const auto& d : parsed.diagnostics) err << path << ":" << d.line << ":" << d.column << ": " << d.message
                                                  << (d.token.empty() ? "" : " (at '" + d.token + "')") << "\n";
    throw UsageError(path + ": parse failed");
  }
  require_valid(parsed.doc->config);
  return parsed.doc->config;
}

SamplePoint parse_point_arg(const std::string& text) {
  const auto colon = text.rfind(':');
  if (colon == std::string::npos || colon == 0) throw UsageError("expected COMP:PT, got '" + text + "'");
  try {
    P1Point point = P1Point::parse(text.substr(colon + 1));
    return {text.substr(0, colon), std::move(point)};
  } catch (const MathError&) {
    throw UsageError("bad point in '" + text + "'");
  }
}

FiniteSubscheme parse_points_arg(const std::string& text) {
  FiniteSubscheme z;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.rfind(':');
    try {
      if (colon == std::string::npos) {
        z.points.emplace_back(P1Point::parse(item), 1);
        continue;
      }
      const int mult = std::stoi(item.substr(colon + 1));
      z.points.emplace_back(P1Point::parse(item.substr(0, colon)), mult);
    } catch (const std::exception&) {
      throw UsageError("bad point specification '" + item + "' (expected PT:MULT)");
    }
  }
  if (z.points.empty()) throw UsageError("--points is empty");
  return z;
}

std::string label(const SamplePoint& p) { return p.component + ":" + p.point.to_string(); }

void emit(std::ostream& out, const Json& j) { out << dump(j) << "\n"; }

int cmd_jacobian(const std::string& file, std::ostream& out, std::ostream& err) {
  emit(out, to_json(jacobian_structure(load_curve(file, err))));
  return kOk;
}

int cmd_aj(const std::string& file, const std::string& point, std::ostream& out, std::ostream& err) {
  const CurveConfig config = load_curve(file, err);
  const SamplePoint p = parse_point_arg(point);
  const auto presentation = jacobian_structure(config);
  Json j;
  j["point"] = label(p);
  j["basepoint"] = config.basepoints.contains(p.component) ? config.basepoints.at(p.component).to_string() : "";
  const Json cls = to_json(aj_eval(config, presentation, config.basepoints, p.component, p.point));
  for (const auto& [k, v] : cls.items()) j[k] = v;
  j["torus_orientation"] = kTorusOrientation;
  emit(out, j);
  return kOk;
}

int cmd_probe(const std::string& file, int samples, const std::vector<std::string>& points, std::uint64_t seed,
              std::ostream& out, std::ostream& err) {
  const CurveConfig config = load_curve(file, err);
  std::vector<SamplePoint> sample;
  for (const auto& p : points) sample.push_back(parse_point_arg(p));
  for (const auto& s : sample) {
    if (config.component_index(s.component) < 0) throw UsageError("unknown component '" + s.component + "'");
  }
  std::vector<std::string> comps;
  for (const auto& c : config.components) {
    if (c.genus == 0) comps.push_back(c.id);
  }
  if (samples > 0 && comps.empty()) throw MathError(ErrorCode::PositiveGenusUnsupported, "no rational component");
  gen::Rng rng(seed);
  for (int i = 0; i < samples; ++i) {
    const std::string& comp = comps[static_cast<std::size_t>(i) % comps.size()];
    std::vector<P1Point> avoid;
    if (const auto b = config.basepoints.find(comp); b != config.basepoints.end()) avoid.push_back(b->second);
    for (const auto& s : sample) {
      if (s.component == comp) avoid.push_back(s.point);
    }
    sample.push_back({comp, gen::fresh_point(rng, config, comp, avoid)});
  }
  const auto report = aj_injectivity_probe(config, config.basepoints, sample);
  Json j;
  j["samples"] = static_cast<int>(sample.size());
  Json pts = Json::array();
  for (std::size_t i = 0; i < sample.size(); ++i) {
    Json entry;
    entry["point"] = label(sample[i]);
    const Json cls = to_json(report.classes[i]);
    for (const auto& [k, v] : cls.items()) entry[k] = v;
    pts.push_back(entry);
  }
  j["points"] = pts;
  Json coll = Json::array();
  for (const auto& [a, b] : report.collisions) coll.push_back(Json::array({label(sample[a]), label(sample[b])}));
  j["collisions"] = coll;
  j["seed"] = seed;
  emit(out, j);
  return kOk;
}

Json site_json(const CurveConfig& config, const ModificationSite& s) {
  const auto& br = config.singularity(s.singularity).branches[static_cast<std::size_t>(s.branch)];
  Json j;
  j["singularity"] = s.singularity;
  j["branch"] = s.branch;
  j["branch_label"] = branch_label({s.singularity, br.component, br.point});
  return j;
}

int cmd_modifiable(const std::string& file, std::ostream& out, std::ostream& err) {
  const CurveConfig config = load_curve(file, err);
  const auto scan = scan_modification_sites(config);
  Json j;
  Json sites = Json::array();
  for (const auto& s : scan.sites) sites.push_back(site_json(config, s));
  Json ind = Json::array();
  for (const auto& s : scan.indeterminate) ind.push_back(site_json(config, s));
  j["sites"] = sites;
  j["indeterminate"] = ind;
  emit(out, j);
  return kOk;
}

int cmd_modify(const std::string& file, const std::string& sing, int branch, const std::string& output,
               std::ostream& out, std::ostream& err) {
  const CurveConfig config = load_curve(file, err);
  if (config.singularity_index(sing) < 0) throw UsageError("unknown singularity '" + sing + "'");
  const ModificationSite site{sing, branch};
  const CurveConfig modified = modify(config, site);
  std::ofstream o(output, std::ios::binary);
  if (!o) throw UsageError("cannot write '" + output + "'");
  o << print_curve_dsl(modified);
  if (!o.flush()) throw UsageError("cannot write '" + output + "'");
  const auto before = dual_graph(config);
  const auto after = dual_graph(modified);
  Json j;
  j["site"] = site_json(config, site);
  j["output"] = output;
  j["connected_components_before"] = before.connected_components;
  j["connected_components_after"] = after.connected_components;
  j["config"] = to_json(modified);
  emit(out, j);
  return kOk;
}

int cmd_contract(const std::string& points, std::ostream& out) {
  const FiniteSubscheme z = parse_points_arg(points);
  const auto datum = contraction_datum(z);
  Json j = to_json(datum.generators);
  j["chart"] = datum.chart_shift ? "u = 1/(t - " + datum.chart_shift->to_string() + ")" : std::string("t");
  j["config"] = to_json(datum.config);
  j["config_dsl"] = print_curve_dsl(datum.config);
  emit(out, j);
  return kOk;
}

int cmd_witness(const std::string& file, const std::string& sing, int branch, std::ostream& out,
                std::ostream& err) {
  const CurveConfig config = load_curve(file, err);
  if (config.singularity_index(sing) < 0) throw UsageError("unknown singularity '" + sing + "'");
  const auto& branches = config.singularity(sing).branches;
  if (branch < 0 || branch >= static_cast<int>(branches.size())) {
    throw UsageError("branch index " + std::to_string(branch) + " out of range");
  }
  const auto result = obstruction_witness(config, sing, branch);
  if (const auto* w = std::get_if<Witness>(&result)) {
    Json j;
    j["status"] = "found";
    const Json body = to_json(*w, config);
    for (const auto& [k, v] : body.items()) j[k] = v;
    emit(out, j);
    return kOk;
  }
  const auto& nf = std::get<WitnessNotFound>(result);
  Json j;
  j["status"] = "not_found";
  j["attempted"] = to_string(nf.attempted);
  Json germ = Json::array();
  for (const auto& jet : nf.germ) germ.push_back(to_json(jet));
  j["germ"] = germ;
  j["mu"] = nf.certificate.mu.to_string();
  Json scalars = Json::array();
  for (const auto& s : nf.certificate.block_scalars) scalars.push_back(s.to_string());
  j["block_scalars"] = scalars;
  emit(out, j);
  err << "no non-liftable germ found at (" << sing << ", " << branch << "): the candidate lifts\n";
  return kNegative;
}

int cmd_verify(const std::string& fixtures, std::uint64_t seed, std::ostream& out, std::ostream& err) {
  const auto results = run_acceptance({fixtures, seed});
  Json j;
  Json list = Json::array();
  bool all = true;
  for (const auto& r : results) {
    list.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    if (!r.passed) {
      all = false;
      err << "criterion " << r.id << " failed: " << r.detail << "\n";
    }
  }
  j["criteria"] = list;
  j["passed"] = all;
  emit(out, j);
  return all ? kOk : kNegative;
}

bool is_usage_code(ErrorCode c) {
  return c == ErrorCode::ParseError || c == ErrorCode::InvalidConfig || c == ErrorCode::UnknownComponent ||
         c == ErrorCode::UnknownSingularity || c == ErrorCode::InvalidSubscheme;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized Jacobians of curves with rational components", "curvejac"};
  app.require_subcommand(1);

  std::string file, point, sing, output, points, fixtures = CURVEJAC_FIXTURE_DIR;
  int samples = 100, branch = 0;
  std::uint64_t seed = 20261015;
  std::vector<std::string> extra_points;

  auto* jacobian = app.add_subcommand("jacobian", "Print the Jacobian presentation");
  jacobian->add_option("FILE", file, "curve file")->required();

  auto* aj = app.add_subcommand("aj", "Abel-Jacobi class of a smooth point");
  aj->add_option("FILE", file, "curve file")->required();
  aj->add_option("--point", point, "COMP:PT")->required();

  auto* probe = app.add_subcommand("probe", "Search for Abel-Jacobi collisions among sampled points");
  probe->add_option("FILE", file, "curve file")->required();
  probe->add_option("--samples", samples, "number of random points")->check(CLI::NonNegativeNumber);
  probe->add_option("--point", extra_points, "COMP:PT, included before the random sample");
  probe->add_option("--seed", seed, "sampling seed");

  auto* modifiable = app.add_subcommand("modifiable", "List modification sites");
  modifiable->add_option("FILE", file, "curve file")->required();

  auto* mod = app.add_subcommand("modify", "Detach a branch at a modification site");
  mod->add_option("FILE", file, "curve file")->required();
  mod->add_option("--sing", sing, "singularity id")->required();
  mod->add_option("--branch", branch, "branch index")->required();
  mod->add_option("-o,--output", output, "output curve file")->required();

  auto* contract = app.add_subcommand("contract", "Contract a finite subscheme of P^1 to a point");
  contract->add_option("--points", points, "PT:MULT,... e.g. \"0:1,1:1\"")->required();

  auto* witness = app.add_subcommand("witness", "Non-liftable unit germ at a branch");
  witness->add_option("FILE", file, "curve file")->required();
  witness->add_option("--sing", sing, "singularity id")->required();
  witness->add_option("--branch", branch, "branch index")->required();

  auto* verify = app.add_subcommand("verify", "Run the acceptance suite on the shipped fixtures");
  verify->add_option("--fixtures", fixtures, "fixture directory");
  verify->add_option("--seed", seed, "seed for the randomized criteria");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*jacobian) return cmd_jacobian(file, out, err);
    if (*aj) return cmd_aj(file, point, out, err);
    if (*probe) return cmd_probe(file, samples, extra_points, seed, out, err);
    if (*modifiable) return cmd_modifiable(file, out, err);
    if (*mod) return cmd_modify(file, sing, branch, output, out, err);
    if (*contract) return cmd_contract(points, out);
    if (*witness) return cmd_witness(file, sing, branch, out, err);
    if (*verify) return cmd_verify(fixtures, seed, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const MathError& e) {
    err << "error: " << e.what() << "\n";
    return is_usage_code(e.code()) ? kUsage : kNegative;
  }
  return kUsage;
}

}  // namespace curvejac::cli
