#include <random>

#include <doctest.h>

#include "curvejac/contraction.hpp"
#include "curvejac/verify/oracles.hpp"
#include "curvejac/verify/random_configs.hpp"
#include "row_reduce.hpp"
#include "test_support.hpp"

using namespace curvejac;

namespace {

Rational q(long a, long b = 1) { return Rational(a, b); }
const Poly t{q(0), q(1)};

Poly power(const Poly& p, int k) { return p.pow(static_cast<unsigned>(k)); }

FiniteSubscheme z_of(std::vector<std::pair<P1Point, int>> pts) { return {std::move(pts)}; }

Poly random_monic(gen::Rng& rng, int e) {
  std::vector<Rational> c;
  for (int k = 0; k < e; ++k) c.push_back(gen::small_rational(rng));
  c.push_back(q(1));
  return Poly(c);
}

Poly random_poly(gen::Rng& rng, int max_degree) {
  std::vector<Rational> c;
  for (int k = 0; k <= gen::uniform(rng, 0, max_degree); ++k) c.push_back(gen::small_rational(rng));
  return Poly(c);
}

// All products of generators of total degree <= d, as coefficient rows.
testing::Matrix slice_rows(const std::vector<Poly>& gens, int d) {
  testing::Matrix rows;
  auto push = [&](const Poly& p) {
    std::vector<Rational> row(static_cast<std::size_t>(d) + 1);
    for (int k = 0; k <= p.degree(); ++k) row[static_cast<std::size_t>(k)] = p.coeff(k);
    rows.push_back(row);
  };
  push(Poly(q(1)));
  std::vector<std::pair<Poly, std::size_t>> frontier{{Poly(q(1)), 0}};
  while (!frontier.empty()) {
    std::vector<std::pair<Poly, std::size_t>> next;
    for (const auto& [p, from] : frontier) {
      for (std::size_t i = from; i < gens.size(); ++i) {
        Poly r = p * gens[i];
        if (r.degree() > d) continue;
        push(r);
        next.emplace_back(std::move(r), i);
      }
    }
    frontier = std::move(next);
  }
  return rows;
}

}  // namespace

TEST_CASE("vanishing ideal generators") {
  CHECK(vanishing_ideal_generator(z_of({{P1Point(0), 1}, {P1Point(1), 1}})) == t * t - t);
  CHECK(vanishing_ideal_generator(z_of({{P1Point(0), 2}})) == t * t);
  CHECK(vanishing_ideal_generator(z_of({{P1Point(2), 1}})) == t - Poly(q(2)));
  CHECK_MATH_ERROR(vanishing_ideal_generator(z_of({{P1Point::infinity(), 1}})), ErrorCode::InfinityUnsupported);
  CHECK_MATH_ERROR(check_subscheme(z_of({})), ErrorCode::InvalidSubscheme);
  CHECK_MATH_ERROR(check_subscheme(z_of({{P1Point(0), 1}, {P1Point(0), 2}})), ErrorCode::InvalidSubscheme);
  CHECK_MATH_ERROR(check_subscheme(z_of({{P1Point(0), 0}})), ErrorCode::InvalidSubscheme);
}

TEST_CASE("generator sets") {
  const auto node = contraction_generators(t * t - t);
  CHECK(node.generators == std::vector<Poly>{t * t - t, power(t, 3) - t * t});
  const auto cusp = contraction_generators(t * t);
  CHECK(cusp.generators == std::vector<Poly>{t * t, power(t, 3)});
  CHECK(cusp.generators[0].to_string() == "t^2");
  CHECK(cusp.generators[1].to_string() == "t^3");

  const auto cube = contraction_generators(power(t, 3), 12);
  CHECK(cube.generators == std::vector<Poly>{power(t, 3), power(t, 4), power(t, 5)});
  CHECK(cube.hilbert_checked_to == 12);
  // Brute-force Hilbert check per degree.
  for (int d = 0; d <= 12; ++d) {
    CHECK(testing::rank(slice_rows(cube.generators, d)) == oracle::contraction_slice_dimension(3, d));
  }

  CHECK_MATH_ERROR(contraction_generators(Poly{q(0), q(2)}), ErrorCode::NotMonic);
  CHECK_MATH_ERROR(contraction_generators(Poly(q(1))), ErrorCode::NotMonic);
}

TEST_CASE("Hilbert dimensions against row reduction") {
  gen::Rng rng(21);
  for (int i = 0; i < 25; ++i) {
    const int e = gen::uniform(rng, 1, 4);
    const Poly g = random_monic(rng, e);
    const auto gs = contraction_generators(g);
    CHECK(gs.hilbert_checked_to >= 3 * e + 3);
    CHECK(gs.degree_bound == 2 * e - 1);
    for (int d = 0; d <= 3 * e + 3; ++d) {
      const int expected = std::max(1, d - e + 2);
      CHECK(oracle::contraction_slice_dimension(e, d) == expected);
      CHECK(contraction_slice_dimension(e, d) == expected);
      CHECK(gs.hilbert_dimensions[static_cast<std::size_t>(d)] == expected);
      CHECK(testing::rank(slice_rows(gs.generators, d)) == expected);
    }
  }
}

TEST_CASE("membership examples") {
  const Poly g = t * t - t;
  CHECK(std::holds_alternative<NotMember>(subalgebra_membership(t, t * t)));
  CHECK(std::get<NotMember>(subalgebra_membership(t, t * t)).failing_degree == 1);

  const Poly f = power(t, 5) - power(t, 4);
  const auto r = subalgebra_membership(f, g);
  REQUIRE(std::holds_alternative<MembershipCertificate>(r));
  const auto& cert = std::get<MembershipCertificate>(r);
  CHECK(cert.evaluate(contraction_generators(g).generators) == f);
  // t^5 - t^4 = t^3 (t^2 - t) = G1 * (G0 + G1)... any valid expansion will do; it is re-evaluated above.
  CHECK_FALSE(cert.terms.empty());

  const auto seven = subalgebra_membership(Poly(q(7)), g);
  REQUIRE(std::holds_alternative<MembershipCertificate>(seven));
  CHECK(std::get<MembershipCertificate>(seven).constant == q(7));
  CHECK(std::get<MembershipCertificate>(seven).terms.empty());
  CHECK(std::get<MembershipCertificate>(seven).to_string() == "7");

  CHECK_MATH_ERROR(subalgebra_membership(t, Poly{q(0), q(3)}), ErrorCode::NotMonic);
}

TEST_CASE("membership on random inputs") {
  gen::Rng rng(22);
  for (int i = 0; i < 100; ++i) {
    const int e = gen::uniform(rng, 1, 6);
    const Poly g = random_monic(rng, e);
    const auto gens = contraction_generators(g).generators;

    // products of up to three generators
    Poly prod(q(1));
    for (int k = gen::uniform(rng, 1, 3); k > 0; --k) {
      prod *= gens[static_cast<std::size_t>(gen::uniform(rng, 0, static_cast<int>(gens.size()) - 1))];
    }
    const auto rp = subalgebra_membership(prod, g);
    REQUIRE(std::holds_alternative<MembershipCertificate>(rp));
    CHECK(std::get<MembershipCertificate>(rp).evaluate(gens) == prod);

    // lambda + h g
    const Poly f = Poly(gen::small_rational(rng)) + random_poly(rng, 6) * g;
    const auto rf = subalgebra_membership(f, g);
    REQUIRE(std::holds_alternative<MembershipCertificate>(rf));
    CHECK(std::get<MembershipCertificate>(rf).evaluate(gens) == f);

    // generic polynomials: agree with the remainder oracle
    const Poly h = random_poly(rng, 8);
    const auto rh = subalgebra_membership(h, g);
    CHECK(std::holds_alternative<MembershipCertificate>(rh) == oracle::in_contraction_algebra(h, g));
    if (const auto* c = std::get_if<MembershipCertificate>(&rh)) CHECK(c->evaluate(gens) == h);

    // with g = t^e, e >= 2, a linear term is never absorbed
    if (e >= 2) {
      const Poly lin = h + Poly{q(0), gen::small_unit(rng) - h.coeff(1)};
      REQUIRE_FALSE(lin.coeff(1).is_zero());
      CHECK(std::holds_alternative<NotMember>(subalgebra_membership(lin, power(t, e))));
    }
  }
}

TEST_CASE("contract_p1") {
  const auto nodal = contract_p1(z_of({{P1Point(0), 1}, {P1Point(1), 1}}));
  CHECK(validate(nodal).empty());
  REQUIRE(nodal.components.size() == 1);
  CHECK(nodal.components[0].genus == 0);
  REQUIRE(nodal.singularities.size() == 1);
  CHECK(nodal.singularities[0].branches ==
        std::vector<Branch>{{"P", P1Point(0), 1}, {"P", P1Point(1), 1}});

  const auto cusp = contract_p1(z_of({{P1Point(0), 2}}));
  CHECK(cusp.singularities[0].branches == std::vector<Branch>{{"P", P1Point(0), 2}});
  CHECK(cusp.basepoints.at("P") == P1Point::infinity());

  CHECK_MATH_ERROR(contract_p1(z_of({{P1Point(0), 1}})), ErrorCode::DegreeOne);
}

TEST_CASE("contraction through infinity uses a shifted chart") {
  const auto d = contraction_datum(z_of({{P1Point(0), 1}, {P1Point::infinity(), 2}}));
  REQUIRE(d.chart_shift.has_value());
  const Rational b = *d.chart_shift;
  CHECK(b != q(0));
  CHECK(validate(d.config).empty());
  // The chart sends a -> 1/(a - b) and infinity -> 0.
  Poly expected(q(1));
  for (const auto& [p, n] : d.chart_points.points) {
    expected *= power(t - Poly(p.value()), n);
  }
  CHECK(d.generators.ideal_generator == expected);
  CHECK(d.chart_points.points.size() == 2);
  bool saw_zero = false, saw_image = false;
  for (const auto& [p, n] : d.chart_points.points) {
    if (p == P1Point(0) && n == 2) saw_zero = true;
    if (p == P1Point((q(0) - b).inverse()) && n == 1) saw_image = true;
  }
  CHECK(saw_zero);
  CHECK(saw_image);
}
