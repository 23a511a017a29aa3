#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "curvejac/algebra/rational.hpp"

namespace curvejac {

/// A rational point of the projective line: a finite coordinate or infinity.
class P1Point {
 public:
  P1Point() = default;
  P1Point(Rational finite) : coord_(std::move(finite)) {}  // NOLINT(google-explicit-constructor)
  P1Point(long finite) : coord_(Rational(finite)) {}       // NOLINT(google-explicit-constructor)

  static P1Point infinity() {
    P1Point p;
    p.coord_.reset();
    return p;
  }
  /// "inf", or a rational literal.
  static P1Point parse(std::string_view text);

  bool is_infinity() const { return !coord_.has_value(); }
  /// Precondition: finite.
  const Rational& value() const { return *coord_; }

  /// Finite points ordered numerically; infinity sorts last.
  friend std::strong_ordering operator<=>(const P1Point& a, const P1Point& b);
  friend bool operator==(const P1Point& a, const P1Point& b) { return a.coord_ == b.coord_; }

  std::string to_string() const { return coord_ ? coord_->to_string() : "inf"; }

 private:
  std::optional<Rational> coord_{Rational()};
};

}  // namespace curvejac
