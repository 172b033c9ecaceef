#ifndef FANOHULL_FIXTURES_HPP
#define FANOHULL_FIXTURES_HPP

#include "fanohull/hull.hpp"
#include "fanohull/laurent.hpp"

namespace fanohull {
namespace fixtures {

// The centrally symmetric canonical Fano 3-polytope with 10 vertices
// (pentagon at height 1 and its reflection).
LatticePolytope paper_p();

// The 12-term Laurent polynomial supported on the vertices of paper_p
// and the two interior facet points, coefficient 1 each.
LaurentPolynomial paper_f();

// The deformation hull in 8 coordinates with ideal (t1^2, t1t2, t3^2, t3t4).
HullPresentation paper_a();

// Generators of the automorphism action on paper_a: the central
// reflection and the coordinate swap.
std::vector<std::pair<IntMat, std::vector<size_t>>> paper_g_action();

// The quotient presentation in 6 variables of degrees (2,2,2,3,2,2) with
// ideal (u1^2, u2^2, u1u2, u1u3, u2u3).
HullPresentation paper_ag_claimed();

// Auxiliary inputs used by the command line and tests.
LatticePolytope cube();
LaurentPolynomial x_plus_xinv();
LaurentPolynomial three_term_multinomial();  // x + y + 1/(xy)

}  // namespace fixtures
}  // namespace fanohull

#endif
