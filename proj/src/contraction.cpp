#include "curvejac/contraction.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "curvejac/error.hpp"

namespace curvejac {

int FiniteSubscheme::degree() const {
  int d = 0;
  for (const auto& [p, n] : points) d += n;
  return d;
}

bool FiniteSubscheme::touches_infinity() const {
  return std::any_of(points.begin(), points.end(),
                     [](const auto& pn) { return pn.first.is_infinity(); });
}

void check_subscheme(const FiniteSubscheme& z) {
  if (z.points.empty()) throw MathError(ErrorCode::InvalidSubscheme, "empty subscheme");
  std::set<P1Point> seen;
  for (const auto& [p, n] : z.points) {
    if (n < 1) {
      throw MathError(ErrorCode::InvalidSubscheme, "multiplicity at " + p.to_string() + " is < 1");
    }
    if (!seen.insert(p).second) {
      throw MathError(ErrorCode::InvalidSubscheme, "point " + p.to_string() + " repeated");
    }
  }
}

Poly vanishing_ideal_generator(const FiniteSubscheme& z) {
  check_subscheme(z);
  Poly g(Rational(1));
  for (const auto& [p, n] : z.points) {
    if (p.is_infinity()) {
      throw MathError(ErrorCode::InfinityUnsupported, "subscheme supported at infinity");
    }
    g *= Poly::linear_root(p.value()).pow(static_cast<unsigned>(n));
  }
  return g;
}

int contraction_slice_dimension(int e, int d) { return std::max(1, d - e + 2); }

namespace {

void require_monic(const Poly& g) {
  if (!g.is_monic() || g.degree() < 1) {
    throw MathError(ErrorCode::NotMonic, "ideal generator must be monic of degree >= 1, got " +
                                             g.to_string());
  }
}

/// Row echelon basis keyed by leading degree.
class LeadingTermBasis {
 public:
  /// True when p was independent of the current span.
  bool insert(Poly p) {
    while (!p.is_zero()) {
      const auto it = rows_.find(p.degree());
      if (it == rows_.end()) {
        rows_.emplace(p.degree(), std::move(p));
        return true;
      }
      p -= it->second * Poly(p.leading() / it->second.leading());
    }
    return false;
  }
  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  std::map<int, Poly> rows_;
};

void collect_products(const std::vector<Poly>& gens, std::size_t first, const Poly& acc,
                      int max_degree, std::vector<Poly>& out) {
  for (std::size_t i = first; i < gens.size(); ++i) {
    if (acc.degree() + gens[i].degree() > max_degree) break;  // generators sorted by degree
    Poly next = acc * gens[i];
    out.push_back(next);
    collect_products(gens, i, next, max_degree, out);
  }
}

}  // namespace

GeneratorSet contraction_generators(const Poly& g, std::optional<int> check_to) {
  require_monic(g);
  const int e = g.degree();
  GeneratorSet set;
  set.ideal_generator = g;
  for (int k = 0; k < e; ++k) set.generators.push_back(g * Poly::monomial(Rational(1), k));
  set.degree_bound = 2 * e - 1;
  set.hilbert_checked_to = check_to.value_or(3 * e + 3);

  for (const auto& gen : set.generators) {
    if (!gen.divmod(g).second.is_zero()) {
      throw MathError(ErrorCode::CertificateFailure, "generator outside the ideal");
    }
  }

  std::vector<Poly> products{Poly(Rational(1))};
  collect_products(set.generators, 0, Poly(Rational(1)), set.hilbert_checked_to, products);
  std::stable_sort(products.begin(), products.end(),
                   [](const Poly& a, const Poly& b) { return a.degree() < b.degree(); });

  LeadingTermBasis basis;
  std::size_t next = 0;
  for (int d = 0; d <= set.hilbert_checked_to; ++d) {
    while (next < products.size() && products[next].degree() <= d) basis.insert(products[next++]);
    set.hilbert_dimensions.push_back(basis.rank());
    if (basis.rank() != contraction_slice_dimension(e, d)) {
      throw MathError(ErrorCode::CertificateFailure,
                      "generated algebra has dimension " + std::to_string(basis.rank()) +
                          " in degree <= " + std::to_string(d) + ", expected " +
                          std::to_string(contraction_slice_dimension(e, d)));
    }
  }
  return set;
}

Poly MembershipCertificate::evaluate(const std::vector<Poly>& generators) const {
  Poly f(constant);
  for (const auto& term : terms) {
    Poly m(term.coeff);
    for (std::size_t i = 0; i < term.exponents.size(); ++i) {
      if (term.exponents[i] > 0) m *= generators.at(i).pow(static_cast<unsigned>(term.exponents[i]));
    }
    f += m;
  }
  return f;
}

std::string MembershipCertificate::to_string() const {
  std::ostringstream os;
  os << constant;
  for (const auto& term : terms) {
    os << (term.coeff.sign() < 0 ? " - " : " + ") << (term.coeff.sign() < 0 ? -term.coeff : term.coeff);
    for (std::size_t i = 0; i < term.exponents.size(); ++i) {
      if (term.exponents[i] == 0) continue;
      os << "*G" << i;
      if (term.exponents[i] > 1) os << "^" << term.exponents[i];
    }
  }
  return os.str();
}

MembershipResult subalgebra_membership(const Poly& f, const Poly& g) {
  require_monic(g);
  const int e = g.degree();
  std::vector<Poly> gens;
  for (int k = 0; k < e; ++k) gens.push_back(g * Poly::monomial(Rational(1), k));

  // pivot[d]: a monic product of generators of degree exactly d (d >= e).
  struct Pivot {
    Poly poly;
    std::vector<int> exponents;
  };
  std::vector<Pivot> pivot(static_cast<std::size_t>(std::max(f.degree(), e) + 1));
  for (int d = e; d <= f.degree(); ++d) {
    if (d < 2 * e) {
      std::vector<int> ex(static_cast<std::size_t>(e), 0);
      ex[static_cast<std::size_t>(d - e)] = 1;
      pivot[static_cast<std::size_t>(d)] = {gens[static_cast<std::size_t>(d - e)], ex};
      continue;
    }
    const int k = std::min(e - 1, d - 2 * e);
    const Pivot& rest = pivot[static_cast<std::size_t>(d - e - k)];
    Pivot p{rest.poly * gens[static_cast<std::size_t>(k)], rest.exponents};
    ++p.exponents[static_cast<std::size_t>(k)];
    pivot[static_cast<std::size_t>(d)] = std::move(p);
  }

  std::map<std::vector<int>, Rational> terms;
  Poly rest = f;
  while (rest.degree() >= e) {
    const Pivot& p = pivot[static_cast<std::size_t>(rest.degree())];
    const Rational c = rest.leading();
    rest -= p.poly * Poly(c);
    terms[p.exponents] += c;
  }
  if (rest.degree() >= 1) return NotMember{rest.degree()};

  MembershipCertificate cert;
  cert.constant = rest.coeff(0);
  // Descending exponent order so the largest monomials are listed first.
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    if (!it->second.is_zero()) cert.terms.push_back({it->second, it->first});
  }
  return cert;
}

namespace {

FiniteSubscheme to_chart(const FiniteSubscheme& z, std::optional<Rational>& shift) {
  if (!z.touches_infinity()) {
    shift.reset();
    return z;
  }
  std::set<Rational> finite;
  for (const auto& [p, n] : z.points) {
    if (!p.is_infinity()) finite.insert(p.value());
  }
  long b = 0;
  while (finite.contains(Rational(b))) ++b;
  shift = Rational(b);
  FiniteSubscheme out;
  for (const auto& [p, n] : z.points) {
    if (p.is_infinity()) {
      out.points.emplace_back(P1Point(Rational(0)), n);
    } else {
      out.points.emplace_back(P1Point((p.value() - *shift).inverse()), n);
    }
  }
  return out;
}

}  // namespace

CurveConfig contract_p1(const FiniteSubscheme& z) {
  check_subscheme(z);
  if (z.degree() < 2) {
    throw MathError(ErrorCode::DegreeOne,
                    "contracting a reduced point is an isomorphism; nothing to contract");
  }
  CurveConfig config;
  config.name = "contraction";
  config.components.push_back({"P", 0});
  Singularity y{"y", {}};
  for (const auto& [p, n] : z.points) y.branches.push_back({"P", p, n});
  config.singularities.push_back(std::move(y));

  std::set<P1Point> support;
  for (const auto& [p, n] : z.points) support.insert(p);
  P1Point base = P1Point::infinity();
  for (long k = 0; support.contains(base); ++k) base = P1Point(Rational(k));
  config.basepoints.emplace("P", base);
  return config;
}

ContractionDatum contraction_datum(const FiniteSubscheme& z) {
  ContractionDatum datum{contract_p1(z), std::nullopt, {}, {}};
  datum.chart_points = to_chart(z, datum.chart_shift);
  datum.generators = contraction_generators(vanishing_ideal_generator(datum.chart_points));
  return datum;
}

}  // namespace curvejac
