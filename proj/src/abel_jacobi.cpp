#include "curvejac/abel_jacobi.hpp"

#include <cstdlib>

#include "curvejac/algebra/jet.hpp"
#include "curvejac/error.hpp"

namespace curvejac {

SmoothDivisor& SmoothDivisor::add(std::string component, P1Point point, int coefficient) {
  terms.push_back({std::move(component), std::move(point), coefficient});
  return *this;
}

std::map<std::string, int> SmoothDivisor::degrees() const {
  std::map<std::string, int> deg;
  for (const auto& t : terms) deg[t.component] += t.coefficient;
  return deg;
}

SmoothDivisor operator+(const SmoothDivisor& a, const SmoothDivisor& b) {
  SmoothDivisor out = a;
  out.terms.insert(out.terms.end(), b.terms.begin(), b.terms.end());
  return out;
}

std::map<std::string, InterpolatingFunction> interpolating_functions(const SmoothDivisor& d) {
  std::map<std::string, std::map<P1Point, int>> merged;
  for (const auto& t : d.terms) merged[t.component][t.point] += t.coefficient;
  std::map<std::string, InterpolatingFunction> out;
  for (const auto& [comp, points] : merged) {
    InterpolatingFunction f;
    for (const auto& [p, m] : points) {
      if (p.is_infinity() || m == 0) continue;
      const Poly factor = Poly::linear_root(p.value()).pow(static_cast<unsigned>(std::abs(m)));
      if (m > 0) {
        f.numerator *= factor;
      } else {
        f.denominator *= factor;
      }
    }
    out.emplace(comp, std::move(f));
  }
  return out;
}

UnitJetVector branch_jets(const JacobianPresentation& presentation,
                          const std::map<std::string, InterpolatingFunction>& functions) {
  UnitJetVector v;
  for (std::size_t e = 0; e < presentation.edge_keys.size(); ++e) {
    const auto& key = presentation.edge_keys[e];
    const int order = presentation.edge_multiplicity[e];
    const auto it = functions.find(key.component);
    if (it == functions.end()) {
      v.jets.push_back(Jet::one(order));
    } else {
      v.jets.push_back(jet_of_rational_function(it->second.numerator, it->second.denominator, key.point, order));
    }
  }
  return v;
}

JacElement divisor_class(const CurveConfig& config, const JacobianPresentation& presentation,
                         const SmoothDivisor& d) {
  for (const auto& c : config.components) {
    if (c.genus > 0) {
      throw MathError(ErrorCode::PositiveGenusUnsupported,
                      "divisor classes need every component to have genus 0 ('" + c.id + "' does not)");
    }
  }
  for (const auto& t : d.terms) {
    if (t.coefficient != 0 && !is_smooth_point(config, t.component, t.point)) {
      throw MathError(ErrorCode::PointNotSmooth, t.component + " at " + t.point.to_string());
    }
  }
  for (const auto& [comp, deg] : d.degrees()) {
    if (deg != 0) {
      throw MathError(ErrorCode::NonzeroDegree,
                      "degree " + std::to_string(deg) + " on component '" + comp + "'");
    }
  }
  return class_reduce(config, presentation, branch_jets(presentation, interpolating_functions(d)));
}

JacElement aj_eval(const CurveConfig& config, const JacobianPresentation& presentation,
                   const std::map<std::string, P1Point>& basepoints, const std::string& component,
                   const P1Point& point) {
  config.component(component);
  const auto base = basepoints.find(component);
  if (base == basepoints.end()) {
    throw MathError(ErrorCode::MissingBasepoint, "no basepoint on component '" + component + "'");
  }
  for (const auto& c : config.components) {
    if (!basepoints.contains(c.id)) {
      throw MathError(ErrorCode::MissingBasepoint, "no basepoint on component '" + c.id + "'");
    }
  }
  SmoothDivisor d;
  d.add(component, point, 1).add(component, base->second, -1);
  if (!is_smooth_point(config, component, base->second)) {
    throw MathError(ErrorCode::PointNotSmooth, "basepoint of '" + component + "' is singular");
  }
  return divisor_class(config, presentation, d);
}

InjectivityReport aj_injectivity_probe(const CurveConfig& config,
                                       const std::map<std::string, P1Point>& basepoints,
                                       const std::vector<SamplePoint>& sample) {
  const auto presentation = jacobian_structure(config);
  InjectivityReport report;
  for (const auto& s : sample) {
    report.classes.push_back(aj_eval(config, presentation, basepoints, s.component, s.point));
  }
  for (std::size_t i = 0; i < sample.size(); ++i) {
    for (std::size_t j = i + 1; j < sample.size(); ++j) {
      if (sample[i] == sample[j]) continue;
      if (report.classes[i] == report.classes[j]) report.collisions.emplace_back(i, j);
    }
  }
  return report;
}

std::pair<Rational, Rational> nodal_param(const Rational& t) {
  return {t * t - t, t * t * t - t * t};
}

std::pair<Rational, Rational> cuspidal_param(const Rational& t) { return {t * t, t * t * t}; }

Rational param_inverse(const Rational& x, const Rational& y) {
  if (x.is_zero()) throw MathError(ErrorCode::SingularPoint, "x = 0 is the singular point");
  return y / x;
}

std::pair<Poly, Poly> nodal_param_poly() {
  return {Poly{0, -1, 1}, Poly{0, 0, -1, 1}};
}

std::pair<Poly, Poly> cuspidal_param_poly() { return {Poly{0, 0, 1}, Poly{0, 0, 0, 1}}; }

Poly nodal_equation(const Poly& x, const Poly& y) { return y * y - x * y - x * x * x; }

Poly cuspidal_equation(const Poly& x, const Poly& y) { return y * y - x * x * x; }

}  // namespace curvejac
