#include "curvejac/algebra/jet.hpp"

#include <sstream>

#include "curvejac/error.hpp"

namespace curvejac {

namespace {

Jet truncate(const Poly& p, int order) {
  std::vector<Rational> c(static_cast<std::size_t>(order));
  for (int k = 0; k < order; ++k) c[static_cast<std::size_t>(k)] = p.coeff(k);
  return Jet(std::move(c));
}

}  // namespace

Jet::Jet(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) throw MathError(ErrorCode::OrderNonpositive, "jet order must be at least 1");
}

Jet Jet::constant(const Rational& c, int order) {
  if (order < 1) throw MathError(ErrorCode::OrderNonpositive, "jet order must be at least 1");
  std::vector<Rational> v(static_cast<std::size_t>(order));
  v[0] = c;
  return Jet(std::move(v));
}

bool Jet::is_constant() const {
  for (std::size_t k = 1; k < c_.size(); ++k) {
    if (!c_[k].is_zero()) return false;
  }
  return true;
}

void Jet::require_same_order(const Jet& o) const {
  if (o.order() != order()) {
    throw MathError(ErrorCode::OrderMismatch, "jet orders " + std::to_string(order()) + " and " +
                                                  std::to_string(o.order()));
  }
}

Jet& Jet::operator+=(const Jet& o) {
  require_same_order(o);
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

Jet& Jet::operator-=(const Jet& o) {
  require_same_order(o);
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

Jet& Jet::operator*=(const Jet& o) {
  require_same_order(o);
  const std::size_t n = c_.size();
  std::vector<Rational> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < n; ++j) out[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(out);
  return *this;
}

Jet Jet::scaled(const Rational& c) const {
  Jet r = *this;
  for (auto& x : r.c_) x *= c;
  return r;
}

Jet Jet::inverse() const {
  if (!is_unit()) throw MathError(ErrorCode::NonUnit, "jet " + to_string() + " is not a unit");
  const std::size_t n = c_.size();
  std::vector<Rational> inv(n);
  const Rational a0_inv = c_[0].inverse();
  inv[0] = a0_inv;
  for (std::size_t k = 1; k < n; ++k) {
    Rational acc;
    for (std::size_t j = 1; j <= k; ++j) acc += c_[j] * inv[k - j];
    inv[k] = -acc * a0_inv;
  }
  return Jet(std::move(inv));
}

std::string Jet::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (k) os << ", ";
    os << c_[k];
  }
  os << ")";
  return os.str();
}

Jet unit_log(const Jet& u) {
  if (!u.is_unit()) throw MathError(ErrorCode::NonUnit, "unit_log of non-unit " + u.to_string());
  const int n = u.order();
  Jet x = u.scaled(u[0].inverse()) - Jet::one(n);
  Jet result = Jet::constant(Rational(), n);
  Jet power = x;
  for (int k = 1; k < n; ++k) {
    const Rational c = Rational(k % 2 == 1 ? 1 : -1) / Rational(k);
    result += power.scaled(c);
    power *= x;
  }
  return result;
}

Jet unit_exp(const Jet& x) {
  if (!x[0].is_zero()) throw MathError(ErrorCode::NonUnit, "unit_exp needs zero constant term");
  const int n = x.order();
  Jet result = Jet::one(n);
  Jet term = Jet::one(n);
  for (int k = 1; k < n; ++k) {
    term = (term * x).scaled(Rational(1) / Rational(k));
    result += term;
  }
  return result;
}

Jet jet_of_rational_function(const Poly& numerator, const Poly& denominator, const P1Point& center,
                             int order) {
  if (order < 1) throw MathError(ErrorCode::OrderNonpositive, "jet order must be at least 1");
  if (denominator.is_zero()) throw MathError(ErrorCode::DenominatorVanishes, "zero denominator");
  if (!center.is_infinity()) {
    const Poly num = numerator.taylor_shift(center.value());
    const Poly den = denominator.taylor_shift(center.value());
    if (den.coeff(0).is_zero()) {
      throw MathError(ErrorCode::DenominatorVanishes,
                      "denominator vanishes at " + center.to_string());
    }
    return truncate(num, order) * truncate(den, order).inverse();
  }
  if (numerator.is_zero()) return Jet::constant(Rational(), order);
  const int dn = numerator.degree();
  const int dd = denominator.degree();
  if (dn > dd) throw MathError(ErrorCode::DenominatorVanishes, "pole at infinity");
  // In s = 1/t: N(1/s)/D(1/s) = s^(dd - dn) * rev(N)(s) / rev(D)(s).
  const Poly num = numerator.reversed(dn) * Poly::monomial(Rational(1), dd - dn);
  const Poly den = denominator.reversed(dd);
  return truncate(num, order) * truncate(den, order).inverse();
}

}  // namespace curvejac
