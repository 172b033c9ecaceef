#ifndef FANOHULL_T1_HPP
#define FANOHULL_T1_HPP

#include "fanohull/cone.hpp"
#include "fanohull/ray_module.hpp"

namespace fanohull {

// Which rule produced a chart's graded module of first-order
// deformations compatible with the canonical cover.
enum class T1Rule { Smooth, RigidQuotient, Hypersurface, PolygonCone, Unsupported };

// Module of a binomial hypersurface chart: the quotient by the relation
// and its partial derivatives reduces to a monomial ideal, whose
// standard monomials are organized into sporadic degrees and rays.
RayFamilyModule t1_binomial_hypersurface(const ChartPresentation& pres,
                                         const std::string& chart_id = "");

// Gorenstein cone over a polygon with k vertices, all edges of lattice
// length 1: the module has dimension k-3 in minus the Gorenstein degree.
RayFamilyModule t1_polygon_cone(const Cone& c, const std::string& chart_id = "");

// Isolated terminal quotient chart: zero module.
RayFamilyModule t1_qg_quotient(const Cone& c, const std::string& chart_id = "");

struct ChartModule {
  T1Rule rule = T1Rule::Unsupported;
  RayFamilyModule module;
};

// Per-chart rule dispatch used by the global computation.
ChartModule t1_of_chart(const ChartReport& report);

struct GlobalT1 {
  ChartAtlas atlas;
  std::vector<ChartModule> facet_modules;  // aligned with atlas.facet_charts
  CechData cech;
  CechResult result;
  std::vector<IntVec> weight_list;  // sorted multiset of H0 degrees
};

GlobalT1 global_t1(const ChartAtlas& atlas);
GlobalT1 global_t1(const LatticePolytope& p);

}  // namespace fanohull

#endif
