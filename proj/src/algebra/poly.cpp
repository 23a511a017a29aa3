#include "curvejac/algebra/poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "curvejac/error.hpp"

namespace curvejac {

Poly::Poly(Rational constant) {
  if (!constant.is_zero()) c_.push_back(std::move(constant));
}

Poly::Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const Rational& c, int degree) {
  if (c.is_zero() || degree < 0) return Poly();
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

Poly Poly::linear_root(const Rational& a) { return Poly{-a, Rational(1)}; }

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Rational();
  return c_[static_cast<std::size_t>(k)];
}

Rational Poly::eval(const Rational& x) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Poly Poly::taylor_shift(const Rational& a) const {
  // Repeated synthetic division by (t - a).
  std::vector<Rational> work = c_;
  const std::size_t n = work.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = n - 1; j > i; --j) {
      work[j - 1] += a * work[j];
    }
  }
  return Poly(std::move(work));
}

Poly Poly::reversed(int n) const {
  std::vector<Rational> v(static_cast<std::size_t>(std::max(n, 0)) + 1);
  for (int k = 0; k <= degree(); ++k) {
    if (n - k >= 0) v[static_cast<std::size_t>(n - k)] = c_[static_cast<std::size_t>(k)];
  }
  return Poly(std::move(v));
}

Poly Poly::pow(unsigned e) const {
  Poly result(Rational(1));
  Poly base = *this;
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
  if (divisor.is_zero()) throw MathError(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (degree() < divisor.degree()) return {Poly(), *this};
  std::vector<Rational> rem = c_;
  const int dd = divisor.degree();
  std::vector<Rational> quot(static_cast<std::size_t>(degree() - dd) + 1);
  const Rational lead_inv = divisor.leading().inverse();
  for (int k = degree(); k >= dd; --k) {
    const Rational q = rem[static_cast<std::size_t>(k)] * lead_inv;
    quot[static_cast<std::size_t>(k - dd)] = q;
    if (q.is_zero()) continue;
    for (int j = 0; j <= dd; ++j) {
      rem[static_cast<std::size_t>(k - dd + j)] -= q * divisor.c_[static_cast<std::size_t>(j)];
    }
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> out(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(out);
  trim();
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

std::string Poly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = c_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag;
      continue;
    }
    if (!mag.is_one()) os << mag << "*";
    os << "t";
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

}  // namespace curvejac
