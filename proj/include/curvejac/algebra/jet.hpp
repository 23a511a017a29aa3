#pragma once

#include <string>
#include <vector>

#include "curvejac/algebra/p1_point.hpp"
#include "curvejac/algebra/poly.hpp"
#include "curvejac/algebra/rational.hpp"

namespace curvejac {

/// Truncated power series class in K[s]/(s^n), n = order() >= 1.
/// Orders never mix: binary operations on jets of different order throw
/// OrderMismatch instead of truncating.
class Jet {
 public:
  /// Throws OrderNonpositive on an empty coefficient list.
  explicit Jet(std::vector<Rational> coeffs);

  static Jet constant(const Rational& c, int order);
  static Jet one(int order) { return constant(Rational(1), order); }

  int order() const { return static_cast<int>(c_.size()); }
  const Rational& operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_unit() const { return !c_.front().is_zero(); }
  /// True when every coefficient above degree 0 vanishes.
  bool is_constant() const;

  Jet inverse() const;

  Jet& operator+=(const Jet& o);
  Jet& operator-=(const Jet& o);
  Jet& operator*=(const Jet& o);
  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(Jet a, const Jet& b) { return a *= b; }
  Jet scaled(const Rational& c) const;

  friend bool operator==(const Jet& a, const Jet& b) { return a.c_ == b.c_; }

  std::string to_string() const;

 private:
  void require_same_order(const Jet& o) const;
  std::vector<Rational> c_;
};

/// Truncated logarithm of u / u(0); the result has zero constant term and
/// unit_log(a * b) = unit_log(a) + unit_log(b).
Jet unit_log(const Jet& u);

/// Truncated exponential of a jet with zero constant term.
Jet unit_exp(const Jet& x);

/// The class of numerator/denominator in the local ring at `center`, truncated at
/// `order`, in the coordinate s = t - a at a finite point a and s = 1/t at infinity.
/// Throws DenominatorVanishes when the function has a pole there.
Jet jet_of_rational_function(const Poly& numerator, const Poly& denominator, const P1Point& center,
                             int order);

}  // namespace curvejac
