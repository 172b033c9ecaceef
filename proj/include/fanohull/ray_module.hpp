#ifndef FANOHULL_RAY_MODULE_HPP
#define FANOHULL_RAY_MODULE_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "fanohull/linalg.hpp"

namespace fanohull {

// M-graded vector space supported on finitely many sporadic degrees plus
// finitely many arithmetic rays of degrees, one dimension per ray degree.
struct Sporadic {
  IntVec degree;
  int dim = 1;
  std::string label;
};

struct RayFamily {
  IntVec base;
  IntVec dir;  // primitive step
  bool two_sided = false;
  std::string label;

  bool contains(const IntVec& m) const;
};

struct RayFamilyModule {
  size_t ambient = 0;
  std::vector<Sporadic> sporadic;
  std::vector<RayFamily> rays;

  bool is_zero() const { return sporadic.empty() && rays.empty(); }
  int dim_at(const IntVec& m) const;
  // Total dimension when the support is finite.
  std::optional<Int> total_dim() const;
  std::vector<IntVec> degree_multiset() const;  // finite support only

  // Canonical form: per-line maximal constant-dimension runs, merged
  // sporadics, deterministic ordering. Two modules agree degreewise iff
  // their canonical forms are structurally equal.
  RayFamilyModule normalized() const;
};

bool same_support_dims(const RayFamilyModule& a, const RayFamilyModule& b);

// Lines of degrees base + t*dir with a canonical (lex-positive primitive
// direction, reduced anchor) key.
struct DegreeLine {
  IntVec dir;     // lex-positive primitive
  IntVec anchor;  // representative with anchor[pivot] in [0, dir[pivot})

  bool operator<(const DegreeLine& o) const {
    if (dir != o.dir) return lex_less(dir, o.dir);
    return lex_less(anchor, o.anchor);
  }
  bool operator==(const DegreeLine& o) const { return dir == o.dir && anchor == o.anchor; }

  IntVec point(const Int& t) const;
  std::optional<Int> t_of(const IntVec& m) const;  // nullopt when off the line
};

DegreeLine line_through(const IntVec& base, const IntVec& dir);

// Degree-preserving map given family-wise: a listed pair means the source
// family maps to the target family with coefficient +1 on every common
// degree, and to zero elsewhere.
struct FamilyRef {
  bool is_ray = false;
  size_t idx = 0;
  bool operator<(const FamilyRef& o) const {
    return std::tie(is_ray, idx) < std::tie(o.is_ray, o.idx);
  }
};

struct GradedLinearMap {
  std::vector<std::pair<FamilyRef, FamilyRef>> links;  // source -> target

  bool linked(const FamilyRef& s, const FamilyRef& t) const;
};

// Restriction of a chart module to an intersection module, matched by
// degree. Enforces the multiplicity preconditions of the construction.
GradedLinearMap restriction(const RayFamilyModule& source, const RayFamilyModule& target);

struct CechData {
  size_t ambient = 0;
  std::vector<std::pair<std::string, RayFamilyModule>> charts;
  // (first chart index, second chart index, module) with i < j.
  std::vector<std::tuple<size_t, size_t, RayFamilyModule>> intersections;
  // Keyed by (chart index, intersection index).
  std::map<std::pair<size_t, size_t>, GradedLinearMap> restrictions;
};

// One partition class of degrees on which the differential has a
// constant matrix: either a single degree or a run along a line.
struct CechClass {
  std::string description;
  IntVec representative;
  size_t c0 = 0, c1 = 0;  // dims of the complex at each degree of the class
  size_t h0 = 0, h1 = 0;
  bool finite_class = true;  // single degree or bounded run
  bool bijective() const { return h0 == 0 && h1 == 0 && c0 == c1; }
};

struct CechResult {
  RayFamilyModule h0, h1;
  std::vector<CechClass> classes;  // the finiteness certificate
  std::vector<size_t> exceptional;  // indices of non-bijective classes
};

CechResult cech_h0_h1(const CechData& data);

// Deterministic order for weight multisets: group by primitive direction
// (lex), then by multiple along the ray.
void canonical_weight_sort(std::vector<IntVec>& weights);

}  // namespace fanohull

#endif
