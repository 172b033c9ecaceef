#ifndef FANOHULL_HULL_HPP
#define FANOHULL_HULL_HPP

#include "fanohull/polytope.hpp"
#include "fanohull/t1.hpp"

namespace fanohull {

struct HullVariable {
  std::string name;
  IntVec weight;  // torus weight in M
  int tdeg = 1;
};

// Power series quotient by a monomial ideal, with torus weights.
struct HullPresentation {
  std::vector<HullVariable> vars;
  std::vector<std::vector<Int>> ideal;  // monomial generators as exponent vectors

  size_t nvars() const { return vars.size(); }
  bool in_ideal(const std::vector<Int>& e) const;
  std::string ideal_string() const;
};

// Finite group of variable permutations compatible with the torus
// weights, together with the lattice matrices inducing them.
struct GroupAction {
  std::vector<std::vector<size_t>> perms;  // closed, identity first
  std::vector<IntMat> matrices;            // aligned with perms

  size_t order() const { return perms.size(); }
};

struct LocalHull {
  std::vector<std::string> var_names;
  std::vector<std::vector<Int>> ideal;  // over the local variables
  std::vector<IntVec> degrees;          // one per local variable
};

struct ObstructedChart {
  std::string chart_id;
  LocalHull hull;
};

struct VanishingAssumptions {
  bool h1_t1_zero = false;  // computed by the Cech machinery
  bool h2_t0_zero = false;  // declared input assumption
};

// The registry of known local hulls: the Gorenstein cone over a pentagon
// with unit edges, with two local coordinates in minus the Gorenstein
// degree and ideal (u^2, uv).
std::optional<LocalHull> local_hull_registry(const ChartReport& report);

HullPresentation assemble_hull(std::vector<IntVec> global_weights,
                               const std::vector<ObstructedChart>& obstructed,
                               const VanishingAssumptions& flags);

// Hull of the polytope's deformations from the global T1 data, with
// obstructed charts resolved through the registry.
HullPresentation hull_from_global_t1(const GlobalT1& g);

GroupAction build_group_action(const HullPresentation& hull,
                               const std::vector<std::pair<IntMat, std::vector<size_t>>>& generators);

// Derive the induced variable permutations of lattice automorphisms by
// order-preserving matching inside weight blocks.
GroupAction action_from_automorphisms(const HullPresentation& hull, const MatrixGroup& aut);

// Monomials of the given total t-degree outside the ideal with torus
// weight zero, in deterministic order.
std::vector<std::vector<Int>> torus_invariant_basis(const HullPresentation& hull, int t_degree);

std::vector<Int> invariant_hilbert_function(const HullPresentation& hull, const GroupAction& action,
                                            int max_degree);

std::vector<Int> hilbert_function_of_presentation(const HullPresentation& pres, int max_degree);

struct InvariantCertificate {
  bool match = false;
  std::vector<Int> invariant_sequence;
  std::vector<Int> presentation_sequence;
};

InvariantCertificate verify_invariant_presentation(const HullPresentation& hull,
                                                   const GroupAction& action,
                                                   const HullPresentation& claimed, int max_degree);

// Number of minimal algebra generators of the invariant ring per degree.
std::vector<std::pair<int, size_t>> invariant_generators(const HullPresentation& hull,
                                                         const GroupAction& action, int max_degree);

}  // namespace fanohull

#endif
