#include "curvejac/algebra/rational.hpp"

#include <cctype>
#include <ostream>

#include "curvejac/error.hpp"

namespace curvejac {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (s[0] == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw MathError(ErrorCode::DivisionByZero, "zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_literal(text)) {
      throw MathError(ErrorCode::ParseError, "not a rational literal: '" + std::string(text) + "'");
    }
    return Rational(mpq_class(parse_integer(text)));
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!is_integer_literal(num) || den.empty() || den[0] == '-' || den[0] == '+' ||
      !is_integer_literal(den)) {
    throw MathError(ErrorCode::ParseError, "not a rational literal: '" + std::string(text) + "'");
  }
  return Rational(parse_integer(num), parse_integer(den));
}

Rational Rational::inverse() const {
  if (is_zero()) throw MathError(ErrorCode::DivisionByZero, "inverse of zero");
  return Rational(mpq_class(1 / v_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw MathError(ErrorCode::DivisionByZero, "division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace curvejac
