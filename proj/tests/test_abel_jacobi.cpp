#include <algorithm>

#include <doctest.h>

#include "curvejac/abel_jacobi.hpp"
#include "curvejac/contraction.hpp"
#include "curvejac/verify/oracles.hpp"
#include "curvejac/verify/random_configs.hpp"
#include "test_support.hpp"

using namespace curvejac;

namespace {

Rational q(long a, long b = 1) { return Rational(a, b); }

std::vector<SamplePoint> distinct_sample(gen::Rng& rng, const CurveConfig& c, const std::string& comp, int n) {
  std::vector<P1Point> used{c.basepoints.at(comp)};
  std::vector<SamplePoint> out;
  while (static_cast<int>(out.size()) < n) {
    const P1Point p = gen::fresh_point(rng, c, comp, used);
    used.push_back(p);
    out.push_back({comp, p});
  }
  return out;
}

SmoothDivisor random_degree_zero(gen::Rng& rng, const CurveConfig& c) {
  SmoothDivisor d;
  for (const auto& comp : c.components) {
    std::vector<P1Point> used;
    for (int k = gen::uniform(rng, 0, 2); k > 0; --k) {
      const P1Point a = gen::fresh_point(rng, c, comp.id, used);
      used.push_back(a);
      const P1Point b = gen::fresh_point(rng, c, comp.id, used);
      used.push_back(b);
      const int m = gen::uniform(rng, 1, 3);
      d.add(comp.id, a, m).add(comp.id, b, -m);
    }
  }
  return d;
}

}  // namespace

TEST_CASE("reference classes") {
  const auto nodal = testing::fixture("nodal.curve");
  const auto pn = jacobian_structure(nodal);
  SmoothDivisor d;
  d.add("L", P1Point(2), 1).add("L", P1Point::infinity(), -1);
  const auto cls = divisor_class(nodal, pn, d);
  // f = t - 2 evaluated at the branches 1 and 0.
  const Rational f1 = q(1) - q(2), f0 = q(0) - q(2);
  CHECK(cls.torus_coords == std::vector<Rational>{f1 / f0});
  CHECK(cls.torus_coords == std::vector<Rational>{oracle::nodal_class(q(2))});
  CHECK(cls.torus_coords == std::vector<Rational>{q(1, 2)});
  CHECK(aj_eval(nodal, pn, nodal.basepoints, "L", P1Point(2)) == cls);

  const auto cusp = testing::fixture("cusp.curve");
  const auto pc = jacobian_structure(cusp);
  const auto cc = aj_eval(cusp, pc, cusp.basepoints, "L", P1Point(5));
  // jet of t - 5 at 0 is -5 (1 - s/5): log coefficient -1/5
  CHECK(cc.unipotent_coords == std::vector<Rational>{unit_log(Jet({q(-5), q(1)}))[1]});
  CHECK(cc.unipotent_coords == std::vector<Rational>{q(-1, 5)});

  const auto lut = testing::fixture("lut.curve");
  const auto pl = jacobian_structure(lut);
  const auto a = aj_eval(lut, pl, lut.basepoints, "L1", P1Point(2));
  const auto b = aj_eval(lut, pl, lut.basepoints, "L2", P1Point(-1));
  CHECK(a == b);
  CHECK(a != jac_zero(pl));
  CHECK(a.torus_coords == std::vector<Rational>{oracle::two_line_class(1, q(2))});
  CHECK(b.torus_coords == std::vector<Rational>{oracle::two_line_class(2, q(-1))});
}

TEST_CASE("basepoints map to zero") {
  gen::Rng rng(41);
  gen::ConfigShape shape;
  shape.positive_genus = false;
  for (int i = 0; i < 50; ++i) {
    const auto c = gen::random_config(rng, shape);
    const auto p = jacobian_structure(c);
    for (const auto& [comp, base] : c.basepoints) CHECK(aj_eval(c, p, c.basepoints, comp, base) == jac_zero(p));
  }
}

TEST_CASE("principal divisors have trivial class") {
  // A function on the singular curve must lie in each local ring, so its
  // last pole is solved for from the gluing condition.
  gen::Rng rng(42);
  auto pick = [&](std::vector<Rational>& used) {
    for (;;) {
      const Rational r = gen::small_rational(rng);
      if (r.is_zero() || r.is_one() || std::find(used.begin(), used.end(), r) != used.end()) continue;
      used.push_back(r);
      return r;
    }
  };
  auto fresh = [](const Rational& d, const std::vector<Rational>& used) {
    return !d.is_zero() && !d.is_one() && std::find(used.begin(), used.end(), d) == used.end();
  };
  const auto nodal = testing::fixture("nodal.curve");
  const auto cusp = testing::fixture("cusp.curve");
  const auto lut = testing::fixture("lut.curve");
  const auto pn = jacobian_structure(nodal), pc = jacobian_structure(cusp), pl = jacobian_structure(lut);
  int checked = 0;
  for (int i = 0; i < 100; ++i) {
    std::vector<Rational> used;
    const Rational a = pick(used), b = pick(used), c = pick(used);
    // Node: f = (t-a)(t-b)/((t-c)(t-d)) with f(0) = f(1).
    const Rational ab1c = a * b * (q(1) - c);
    const Rational den_n = ab1c + c * (q(1) - a) * (q(1) - b);
    const Rational dn = den_n.is_zero() ? q(0) : ab1c / den_n;
    if (fresh(dn, used)) {
      SmoothDivisor d;
      d.add("L", P1Point(a), 1).add("L", P1Point(b), 1).add("L", P1Point(c), -1).add("L", P1Point(dn), -1);
      CHECK(divisor_class(nodal, pn, d) == jac_zero(pn));
      ++checked;
    }
    // Cusp: the same shape with f'(0) = 0, i.e. 1/d = 1/a + 1/b - 1/c.
    const Rational inv = a.inverse() + b.inverse() - c.inverse();
    if (!inv.is_zero() && fresh(inv.inverse(), used)) {
      SmoothDivisor d;
      d.add("L", P1Point(a), 1).add("L", P1Point(b), 1).add("L", P1Point(c), -1).add("L", P1Point(inv.inverse()), -1);
      CHECK(divisor_class(cusp, pc, d) == jac_zero(pc));
      ++checked;
    }
    // Two lines: (t-a)/(t-c) on L1 and lambda (t-b)/(t-d) on L2 agreeing at 0 and at 1.
    const Rational cb = c * b * (q(1) - a);
    const Rational den_l = a * (q(1) - b) * (q(1) - c) + cb;
    const Rational dl = den_l.is_zero() ? q(0) : cb / den_l;
    if (fresh(dl, {b})) {
      SmoothDivisor d;
      d.add("L1", P1Point(a), 1).add("L1", P1Point(c), -1).add("L2", P1Point(b), 1).add("L2", P1Point(dl), -1);
      CHECK(divisor_class(lut, pl, d) == jac_zero(pl));
      ++checked;
    }
  }
  CHECK(checked > 150);
}

TEST_CASE("divisor_class is additive and independent of scaling") {
  gen::Rng rng(43);
  gen::ConfigShape shape;
  shape.positive_genus = false;
  for (int i = 0; i < 50; ++i) {
    const auto c = gen::random_config(rng, shape);
    const auto p = jacobian_structure(c);
    for (int j = 0; j < 5; ++j) {
      const auto d1 = random_degree_zero(rng, c), d2 = random_degree_zero(rng, c);
      CHECK(divisor_class(c, p, d1 + d2) == jac_add(divisor_class(c, p, d1), divisor_class(c, p, d2)));

      auto fs = interpolating_functions(d1);
      for (auto& [_, f] : fs) f.numerator = f.numerator * Poly(gen::small_unit(rng));
      CHECK(class_reduce(c, p, branch_jets(p, fs)) == divisor_class(c, p, d1));
    }
  }
}

TEST_CASE("Abel-Jacobi errors") {
  const auto nodal = testing::fixture("nodal.curve");
  const auto p = jacobian_structure(nodal);
  SmoothDivisor d;
  d.add("L", P1Point(2), 1);
  CHECK_MATH_ERROR(divisor_class(nodal, p, d), ErrorCode::NonzeroDegree);
  CHECK_MATH_ERROR(aj_eval(nodal, p, nodal.basepoints, "L", P1Point(1)), ErrorCode::PointNotSmooth);
  CHECK_MATH_ERROR(aj_eval(nodal, p, nodal.basepoints, "M", P1Point(3)), ErrorCode::UnknownComponent);
  CHECK_MATH_ERROR(aj_eval(nodal, p, {}, "L", P1Point(3)), ErrorCode::MissingBasepoint);
  const auto ell = testing::fixture("elliptic_pair.curve");
  SmoothDivisor e;
  e.add("E1", P1Point(5), 1).add("E1", P1Point(6), -1);
  CHECK_MATH_ERROR(divisor_class(ell, jacobian_structure(ell), e), ErrorCode::PositiveGenusUnsupported);
}

TEST_CASE("injectivity probes") {
  gen::Rng rng(44);
  for (const char* file : {"nodal.curve", "cusp.curve"}) {
    CAPTURE(file);
    const auto c = testing::fixture(file);
    const auto sample = distinct_sample(rng, c, "L", 40);
    const auto r = aj_injectivity_probe(c, c.basepoints, sample);
    CHECK(r.collisions.empty());
    CHECK(r.classes.size() == sample.size());
  }
  const auto lut = testing::fixture("lut.curve");
  std::vector<SamplePoint> s{{"L1", P1Point(3)}, {"L1", P1Point(2)}, {"L2", P1Point(5)}, {"L2", P1Point(-1)}};
  const auto r = aj_injectivity_probe(lut, lut.basepoints, s);
  // Oracle: pairs with equal closed-form classes.
  std::vector<std::pair<std::size_t, std::size_t>> expected;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      const auto ci = oracle::two_line_class(s[i].component == "L1" ? 1 : 2, s[i].point.value());
      const auto cj = oracle::two_line_class(s[j].component == "L1" ? 1 : 2, s[j].point.value());
      if (ci == cj) expected.emplace_back(i, j);
    }
  }
  CHECK(r.collisions == expected);
  CHECK(std::find(r.collisions.begin(), r.collisions.end(), std::pair<std::size_t, std::size_t>{1, 3}) !=
        r.collisions.end());
}

TEST_CASE("cubic parametrizations") {
  const auto [x, y] = nodal_param(q(2));
  CHECK(x == q(2));
  CHECK(y == q(4));
  CHECK(y * y == x * y + x * x * x);
  CHECK(cuspidal_param(q(0)) == std::pair<Rational, Rational>{q(0), q(0)});
  for (const Rational& t : {q(2), q(3), q(-1), q(7, 2)}) {
    const auto [a, b] = nodal_param(t);
    CHECK(param_inverse(a, b) == t);
    const auto [c, d] = cuspidal_param(t);
    CHECK(param_inverse(c, d) == t);
  }
  CHECK_MATH_ERROR(param_inverse(q(0), q(0)), ErrorCode::SingularPoint);

  const auto [nx, ny] = nodal_param_poly();
  CHECK(nodal_equation(nx, ny).is_zero());
  const auto [cx, cy] = cuspidal_param_poly();
  CHECK(cuspidal_equation(cx, cy).is_zero());
  // Swapping the parametrizations breaks both identities.
  CHECK_FALSE(nodal_equation(cx, cy).is_zero());
  CHECK_FALSE(cuspidal_equation(nx, ny).is_zero());
}

TEST_CASE("classes on contracted lines match the cubic descriptions") {
  gen::Rng rng(45);
  const auto nodal = contract_p1({{{P1Point(0), 1}, {P1Point(1), 1}}});
  const auto cusp = contract_p1({{{P1Point(0), 2}}});
  const auto pn = jacobian_structure(nodal);
  const auto pc = jacobian_structure(cusp);
  int n = 0;
  while (n < 20) {
    const Rational t = gen::small_rational(rng);
    if (t.is_zero() || t.is_one()) continue;
    ++n;
    // Recover the parameter from the point on the cubic, then apply the closed forms.
    const auto [x, y] = nodal_param(t);
    CHECK(aj_eval(nodal, pn, nodal.basepoints, "P", P1Point(t)).torus_coords ==
          std::vector<Rational>{oracle::nodal_class(param_inverse(x, y))});
    const auto [u, v] = cuspidal_param(t);
    CHECK(aj_eval(cusp, pc, cusp.basepoints, "P", P1Point(t)).unipotent_coords ==
          std::vector<Rational>{oracle::cusp_class(param_inverse(u, v))});
  }
}
