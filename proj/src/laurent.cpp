#include "fanohull/laurent.hpp"

namespace fanohull {

void LaurentPolynomial::add_term(const std::vector<long long>& e, const Int& c) {
  if (e.size() != ambient) throw std::invalid_argument("term dimension mismatch");
  auto it = terms.find(e);
  if (it == terms.end()) {
    if (c != 0) terms[e] = c;
    return;
  }
  it->second += c;
  if (it->second == 0) terms.erase(it);
}

LaurentPolynomial multiply(const LaurentPolynomial& f, const LaurentPolynomial& g) {
  if (f.ambient != g.ambient) throw std::invalid_argument("multiply: dimension mismatch");
  LaurentPolynomial r;
  r.ambient = f.ambient;
  std::vector<long long> e(f.ambient);
  for (const auto& [ef, cf] : f.terms)
    for (const auto& [eg, cg] : g.terms) {
      for (size_t i = 0; i < e.size(); ++i) e[i] = ef[i] + eg[i];
      auto [it, fresh] = r.terms.try_emplace(e, 0);
      it->second += cf * cg;
      if (it->second == 0) r.terms.erase(it);
    }
  return r;
}

LatticePolytope newton_polytope(const LaurentPolynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("newton_polytope of the zero polynomial");
  std::vector<IntVec> pts;
  for (const auto& [e, c] : f.terms) {
    IntVec v(e.size());
    for (size_t i = 0; i < e.size(); ++i) v[i] = e[i];
    pts.push_back(v);
  }
  return hull(pts);
}

LaurentPolynomial restrict_to_face(const LaurentPolynomial& f,
                                   const std::vector<std::pair<IntVec, Rat>>& supports) {
  LaurentPolynomial r;
  r.ambient = f.ambient;
  for (const auto& [normal, level] : supports) {
    bool tight_somewhere = false;
    for (const auto& [e, c] : f.terms) {
      Rat s = 0;
      for (size_t i = 0; i < e.size(); ++i) s += Rat(normal[i]) * Rat(Int(e[i]));
      if (s > level) throw std::invalid_argument("restrict_to_face: not a supporting inequality");
      if (s == level) tight_somewhere = true;
    }
    if (!tight_somewhere) throw std::invalid_argument("restrict_to_face: not a face");
  }
  for (const auto& [e, c] : f.terms) {
    bool keep = true;
    for (const auto& [normal, level] : supports) {
      Rat s = 0;
      for (size_t i = 0; i < e.size(); ++i) s += Rat(normal[i]) * Rat(Int(e[i]));
      if (s != level) {
        keep = false;
        break;
      }
    }
    if (keep) r.terms[e] = c;
  }
  return r;
}

LaurentPolynomial restrict_to_face(const LaurentPolynomial& f, const Facet& facet) {
  return restrict_to_face(f, {{facet.normal, facet.level}});
}

Int constant_term(const LaurentPolynomial& f) {
  std::vector<long long> zero(f.ambient, 0);
  auto it = f.terms.find(zero);
  return it == f.terms.end() ? Int(0) : it->second;
}

PeriodSeries classical_period(const LaurentPolynomial& f, int order) {
  if (order < 0) throw std::invalid_argument("classical_period: negative order");
  PeriodSeries s;
  s.coefficients.push_back(1);  // empty product
  LaurentPolynomial power;
  power.ambient = f.ambient;
  power.terms[std::vector<long long>(f.ambient, 0)] = 1;
  for (int d = 1; d <= order; ++d) {
    power = multiply(power, f);
    s.coefficients.push_back(constant_term(power));
  }
  return s;
}

}  // namespace fanohull
