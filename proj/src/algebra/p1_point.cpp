#include "curvejac/algebra/p1_point.hpp"

namespace curvejac {

P1Point P1Point::parse(std::string_view text) {
  if (text == "inf") return infinity();
  return P1Point(Rational::parse(text));
}

std::strong_ordering operator<=>(const P1Point& a, const P1Point& b) {
  if (a.is_infinity() || b.is_infinity()) {
    return a.is_infinity() <=> b.is_infinity();
  }
  return a.value() <=> b.value();
}

}  // namespace curvejac
