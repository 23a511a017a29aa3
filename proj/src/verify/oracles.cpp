#include "curvejac/verify/oracles.hpp"

#include <map>
#include <set>
#include <vector>

namespace curvejac::oracle {

namespace {

// Vertices named "c:<id>" and "s:<index>"; one adjacency entry per branch.
std::map<std::string, std::vector<std::string>> adjacency(const CurveConfig& config) {
  std::map<std::string, std::vector<std::string>> adj;
  for (const auto& c : config.components) adj["c:" + c.id];
  for (std::size_t i = 0; i < config.singularities.size(); ++i) {
    const std::string s = "s:" + std::to_string(i);
    adj[s];
    for (const auto& b : config.singularities[i].branches) {
      adj[s].push_back("c:" + b.component);
      adj["c:" + b.component].push_back(s);
    }
  }
  return adj;
}

}  // namespace

int connected_components(const CurveConfig& config) {
  const auto adj = adjacency(config);
  std::set<std::string> seen;
  int count = 0;
  for (const auto& [start, _] : adj) {
    if (seen.contains(start)) continue;
    ++count;
    std::vector<std::string> stack{start};
    seen.insert(start);
    while (!stack.empty()) {
      const std::string v = stack.back();
      stack.pop_back();
      for (const auto& w : adj.at(v)) {
        if (seen.insert(w).second) stack.push_back(w);
      }
    }
  }
  return count;
}

int betti1(const CurveConfig& config) {
  int branches = 0;
  for (const auto& s : config.singularities) branches += static_cast<int>(s.branches.size());
  return branches - static_cast<int>(config.components.size()) -
         static_cast<int>(config.singularities.size()) + connected_components(config);
}

int delta_sum(const CurveConfig& config) {
  int total = 0;
  for (const auto& s : config.singularities) {
    int m = 0;
    for (const auto& b : s.branches) m += b.multiplicity;
    total += m - 1;
  }
  return total;
}

bool in_contraction_algebra(const Poly& f, const Poly& g) {
  return f.divmod(g).second.degree() <= 0;
}

int contraction_slice_dimension(int e, int d) {
  // Multiples g*h with deg h <= d - e form a space of dimension d - e + 1.
  const int multiples = d >= e ? d - e + 1 : 0;
  return 1 + multiples;
}

// Nodal cubic: branches t = 0 (reference) and t = 1; f = t - p gives
// f(1)/f(0) = (1 - p)/(-p).
Rational nodal_class(const Rational& p) { return (p - Rational(1)) / p; }

// Cusp: the germ of t - p at 0 is -p(1 - s/p); its log starts with -s/p.
Rational cusp_class(const Rational& p) { return -p.inverse(); }

// Lines L1, L2 glued at 0 and at 1. The single cycle L1 -0- L2 -1- L1 has
// coordinate f1(0) f2(1) / (f2(0) f1(1)) for functions f1 on L1 and f2 on L2.
Rational two_line_class(int line, const Rational& p) {
  if (line == 1) return (-p) / (Rational(1) - p);
  return (Rational(1) - p) / (-p);
}

}  // namespace curvejac::oracle
