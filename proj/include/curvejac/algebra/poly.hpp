#pragma once

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "curvejac/algebra/rational.hpp"

namespace curvejac {

/// Dense univariate polynomial over the rationals in the variable t.
/// Coefficients are indexed by degree; the leading coefficient is nonzero
/// unless the polynomial is zero (empty coefficient vector).
class Poly {
 public:
  Poly() = default;
  Poly(Rational constant);  // NOLINT(google-explicit-constructor)
  Poly(std::initializer_list<Rational> coeffs);
  explicit Poly(std::vector<Rational> coeffs);

  static Poly monomial(const Rational& c, int degree);
  /// t - a
  static Poly linear_root(const Rational& a);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

  /// Coefficient of t^k; zero beyond the degree.
  Rational coeff(int k) const;
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational leading() const { return c_.empty() ? Rational() : c_.back(); }

  Rational eval(const Rational& x) const;
  /// p(t + a): re-expands around a, so coefficient k is the k-th Taylor coefficient at a.
  Poly taylor_shift(const Rational& a) const;
  /// t^n p(1/t) for n >= degree.
  Poly reversed(int n) const;
  Poly pow(unsigned e) const;

  /// Euclidean division; throws DivisionByZero for a zero divisor.
  std::pair<Poly, Poly> divmod(const Poly& divisor) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  Poly operator-() const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// Human form, highest degree first: "t^3 - t^2", "2/3*t + 1", "0".
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace curvejac
