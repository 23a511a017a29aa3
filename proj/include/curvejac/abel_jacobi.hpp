#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "curvejac/algebra/p1_point.hpp"
#include "curvejac/algebra/poly.hpp"
#include "curvejac/curve_model.hpp"
#include "curvejac/jacobian.hpp"

namespace curvejac {

struct DivisorTerm {
  std::string component;
  P1Point point;
  int coefficient = 0;
};

/// Divisor supported on the smooth locus.
struct SmoothDivisor {
  std::vector<DivisorTerm> terms;

  SmoothDivisor& add(std::string component, P1Point point, int coefficient);
  /// Degree on each component that appears.
  std::map<std::string, int> degrees() const;
  friend SmoothDivisor operator+(const SmoothDivisor& a, const SmoothDivisor& b);
};

/// Per-component rational function with the divisor's restriction as its
/// divisor, as numerator/denominator products of monic linear factors;
/// infinity is absorbed by the degree balance.
struct InterpolatingFunction {
  Poly numerator{Rational(1)};
  Poly denominator{Rational(1)};
};

std::map<std::string, InterpolatingFunction> interpolating_functions(const SmoothDivisor& d);

/// Unit-jet vector obtained by evaluating one rational function per component
/// at every branch. Components without an entry get the constant 1.
UnitJetVector branch_jets(const JacobianPresentation& presentation,
                          const std::map<std::string, InterpolatingFunction>& functions);

/// Throws NonzeroDegree, PointNotSmooth, PositiveGenusUnsupported,
/// UnknownComponent.
JacElement divisor_class(const CurveConfig& config, const JacobianPresentation& presentation,
                         const SmoothDivisor& d);

/// Class of [point] - [basepoint of its component]. Throws MissingBasepoint in
/// addition to the divisor_class errors.
JacElement aj_eval(const CurveConfig& config, const JacobianPresentation& presentation,
                   const std::map<std::string, P1Point>& basepoints, const std::string& component,
                   const P1Point& point);

struct SamplePoint {
  std::string component;
  P1Point point;

  friend bool operator==(const SamplePoint&, const SamplePoint&) = default;
};

struct InjectivityReport {
  std::vector<JacElement> classes;                   // one per sample, in order
  std::vector<std::pair<std::size_t, std::size_t>> collisions;  // i < j, lexicographic
};

/// Exact pairwise comparison of Abel-Jacobi classes over the sample.
InjectivityReport aj_injectivity_probe(const CurveConfig& config,
                                       const std::map<std::string, P1Point>& basepoints,
                                       const std::vector<SamplePoint>& sample);

/// Normalization of the nodal cubic y^2 = xy + x^3: t -> (t^2 - t, t^3 - t^2).
std::pair<Rational, Rational> nodal_param(const Rational& t);
/// Normalization of the cuspidal cubic y^2 = x^3: t -> (t^2, t^3).
std::pair<Rational, Rational> cuspidal_param(const Rational& t);
/// Rational inverse (x, y) -> y/x of both parametrizations. Throws SingularPoint at x = 0.
Rational param_inverse(const Rational& x, const Rational& y);

/// The parametrizations as polynomial pairs (x(t), y(t)).
std::pair<Poly, Poly> nodal_param_poly();
std::pair<Poly, Poly> cuspidal_param_poly();
/// y^2 - xy - x^3 and y^2 - x^3 evaluated on polynomial arguments.
Poly nodal_equation(const Poly& x, const Poly& y);
Poly cuspidal_equation(const Poly& x, const Poly& y);

}  // namespace curvejac
