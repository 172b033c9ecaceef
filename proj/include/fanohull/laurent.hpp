#ifndef FANOHULL_LAURENT_HPP
#define FANOHULL_LAURENT_HPP

#include "fanohull/polytope.hpp"

namespace fanohull {

// Sparse Laurent polynomial: exponent vector -> coefficient, zero
// coefficients never stored. Exponents fit machine integers; the
// coefficients are arbitrary precision.
struct LaurentPolynomial {
  size_t ambient = 0;
  std::map<std::vector<long long>, Int> terms;

  bool is_zero() const { return terms.empty(); }
  void add_term(const std::vector<long long>& e, const Int& c);
};

LaurentPolynomial multiply(const LaurentPolynomial& f, const LaurentPolynomial& g);

LatticePolytope newton_polytope(const LaurentPolynomial& f);

// Keep exactly the terms tight on every listed supporting inequality
// <normal, e> <= level of the Newton polytope. An empty list returns f.
LaurentPolynomial restrict_to_face(const LaurentPolynomial& f,
                                   const std::vector<std::pair<IntVec, Rat>>& supports);
LaurentPolynomial restrict_to_face(const LaurentPolynomial& f, const Facet& facet);

Int constant_term(const LaurentPolynomial& f);

struct PeriodSeries {
  std::vector<Int> coefficients;  // index d: constant term of f^d
};

PeriodSeries classical_period(const LaurentPolynomial& f, int order);

}  // namespace fanohull

#endif
