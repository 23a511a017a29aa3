#include <algorithm>
#include <set>

#include <doctest.h>

#include "curvejac/jacobian.hpp"
#include "curvejac/modification.hpp"
#include "curvejac/verify/oracles.hpp"
#include "curvejac/verify/random_configs.hpp"
#include "test_support.hpp"

using namespace curvejac;

namespace {

// Sites identified by (singularity, component, point), independent of list order.
std::set<std::tuple<std::string, std::string, P1Point>> site_keys(const CurveConfig& c,
                                                                 const std::vector<ModificationSite>& sites) {
  std::set<std::tuple<std::string, std::string, P1Point>> out;
  for (const auto& s : sites) {
    const auto& b = c.singularity(s.singularity).branches[static_cast<std::size_t>(s.branch)];
    out.emplace(s.singularity, b.component, b.point);
  }
  return out;
}

}  // namespace

TEST_CASE("sites of reference curves") {
  const auto two = testing::fixture("two_lines.curve");
  CHECK(modifiable_sites(two) == std::vector<ModificationSite>{{"n", 0}, {"n", 1}});
  const auto lut = testing::fixture("lut.curve");
  CHECK(modifiable_sites(lut).empty());
  CHECK(modifiable_sites(testing::fixture("elliptic_pair.curve")) == std::vector<ModificationSite>{{"n", 0}, {"n", 1}});
  CHECK(modifiable_sites(testing::fixture("nodal.curve")).empty());
  CHECK(modifiable_sites(testing::fixture("cusp.curve")).empty());

  for (const auto& s : lut.singularities) {
    for (int b = 0; b < 2; ++b) CHECK_MATH_ERROR(modify(lut, {s.id, b}), ErrorCode::NotASite);
  }
  CurveConfig bad;
  CHECK_MATH_ERROR(modifiable_sites(bad), ErrorCode::InvalidConfig);
}

TEST_CASE("detaching") {
  const auto two = testing::fixture("two_lines.curve");
  const auto apart = modify(two, {"n", 0});
  CHECK(apart.singularities.empty());
  CHECK(apart.components == two.components);
  CHECK(oracle::connected_components(apart) == 2);

  const auto tri = testing::fixture("triple_point.curve");
  const auto sites = modifiable_sites(tri);
  CHECK(sites.size() == 3);
  const auto after = modify(tri, {"p", 0});
  CHECK(validate(after).empty());
  REQUIRE(after.singularities.size() == 1);
  CHECK(after.singularities[0].branches == std::vector<Branch>{{"L2", P1Point(0), 1}, {"L3", P1Point(0), 1}});
  CHECK(oracle::connected_components(after) == 2);
}

TEST_CASE("mixed multiplicities are reported as indeterminate") {
  const auto c = testing::parse_config(
      "curve m\ncomponent A\ncomponent B\nsing p pinch (A at 0) (B at 0 mult 2)\n");
  const auto scan = scan_modification_sites(c);
  CHECK(scan.sites.empty());
  CHECK(scan.indeterminate == std::vector<ModificationSite>{{"p", 0}});
  CHECK_MATH_ERROR(modify(c, {"p", 0}), ErrorCode::NotASite);
}

TEST_CASE("a branch sharing its component at the singularity is not a site") {
  // A meets itself and B at one point: removing one A-branch leaves A attached.
  const auto c = testing::parse_config(
      "curve s\ncomponent A\ncomponent B\nsing p pinch (A at 0) (A at 1) (B at 0)\n");
  CHECK(modifiable_sites(c) == std::vector<ModificationSite>{{"p", 2}});
}

TEST_CASE("Jacobian invariance under modification") {
  gen::Rng rng(51);
  for (int i = 0; i < 100; ++i) {
    const auto mc = gen::random_modifiable(rng);
    const auto sites = modifiable_sites(mc.config);
    REQUIRE(std::find(sites.begin(), sites.end(), mc.site) != sites.end());
    for (const auto& site : sites) {
      const auto after = modify(mc.config, site);
      CHECK(validate(after).empty());
      const auto p = jacobian_structure(mc.config), q = jacobian_structure(after);
      CHECK(p.torus_rank == q.torus_rank);
      CHECK(p.unipotent_rank == q.unipotent_rank);
      CHECK(p.abelian_rank == q.abelian_rank);
      CHECK(oracle::connected_components(after) == oracle::connected_components(mc.config) + 1);
    }
  }
}

TEST_CASE("sites do not depend on list order") {
  gen::Rng rng(52);
  for (int i = 0; i < 100; ++i) {
    const auto c = i % 2 ? gen::random_modifiable(rng).config : gen::random_config(rng);
    CurveConfig d = c;
    std::shuffle(d.components.begin(), d.components.end(), rng);
    std::shuffle(d.singularities.begin(), d.singularities.end(), rng);
    for (auto& s : d.singularities) std::shuffle(s.branches.begin(), s.branches.end(), rng);
    const auto a = scan_modification_sites(c), b = scan_modification_sites(d);
    CHECK(site_keys(c, a.sites) == site_keys(d, b.sites));
    CHECK(site_keys(c, a.indeterminate) == site_keys(d, b.indeterminate));
  }
}

TEST_CASE("repeated modification terminates") {
  gen::Rng rng(53);
  for (int i = 0; i < 100; ++i) {
    CurveConfig c = gen::random_modifiable(rng).config;
    const int budget = c.total_branches();
    int steps = 0;
    for (auto sites = modifiable_sites(c); !sites.empty(); sites = modifiable_sites(c)) {
      const int before = c.total_branches();
      c = modify(c, sites[static_cast<std::size_t>(gen::uniform(rng, 0, static_cast<int>(sites.size()) - 1))]);
      CHECK(c.total_branches() < before);
      REQUIRE(++steps <= budget);
    }
    CHECK(modifiable_sites(c).empty());
  }
}
