#ifndef FANOHULL_CONE_HPP
#define FANOHULL_CONE_HPP

#include <optional>
#include <string>
#include <vector>

#include "fanohull/polytope.hpp"

namespace fanohull {

// Raised when a chart falls outside the classification rules this
// library implements; callers degrade to report-only mode.
class UnsupportedChartError : public std::runtime_error {
 public:
  UnsupportedChartError(std::string chart, const std::string& what)
      : std::runtime_error(what + " [chart " + chart + "]"), chart_id(std::move(chart)) {}
  std::string chart_id;
};

// Pointed rational polyhedral cone with primitive irredundant rays in
// canonical (lex) order. May be lower-dimensional in its ambient space.
struct Cone {
  size_t ambient = 0;
  std::vector<IntVec> rays;

  size_t dim() const;  // dimension of the linear span
  bool operator==(const Cone& o) const { return ambient == o.ambient && rays == o.rays; }
};

// Canonicalizes generators (primitivize, drop duplicates and non-extreme
// generators) and verifies pointedness.
Cone make_cone(size_t ambient, std::vector<IntVec> generators);

Cone cone_over_face(const LatticePolytope& p, const std::vector<size_t>& face);

// Dual of a pointed full-dimensional cone.
Cone dual_cone(const Cone& c);

bool cone_contains(const Cone& c, const IntVec& x);

// Minimal generating set of the monoid of lattice points of a pointed cone.
std::vector<IntVec> hilbert_basis(const Cone& c);

struct QuotientType {
  Int r;
  std::vector<Int> weights;  // canonical: lex-min under unit rescaling, sorted
  bool smooth() const { return r == 1; }
  std::string str() const;  // "1/r(a,b,c)"
  bool operator==(const QuotientType& o) const { return r == o.r && weights == o.weights; }
};

// Cyclic quotient type of a simplicial full-dimensional cone.
QuotientType quotient_type(const Cone& c);

struct GorensteinData {
  bool q_gorenstein = false;  // some m with <m, ray> = 1 on all rays over Q
  bool gorenstein = false;
  Int index = 0;                     // least k with an integral solution of <m, ray> = k
  RatVec degree;                     // the canonical rational solution m
  std::optional<IntVec> int_degree;  // present iff gorenstein
};

GorensteinData gorenstein_data(const Cone& c);

struct ChartVariable {
  std::string name;
  IntVec degree;  // M-degree of the corresponding semigroup generator
  bool invertible = false;
};

struct ChartPresentation {
  std::vector<ChartVariable> variables;
  std::vector<Int> relation_plus, relation_minus;  // exponent vectors over variables
  IntVec relation_degree() const;                  // common M-degree of both monomials
  std::string display() const;                     // relation in declared variable names
  std::string type_string() const;                 // normalized letters, e.g. "x^2y^2 - zw"
  size_t noninvertible_count() const;
};

// Binomial hypersurface presentation of the chart of a pointed cone.
// Faces of larger cones are handled through the lineality of the dual:
// each unit direction becomes an invertible variable. Throws
// UnsupportedChartError when the chart is not a hypersurface.
ChartPresentation binomial_presentation(const Cone& c,
                                        const std::vector<IntVec>& invertible_directions = {});

struct ChartReport {
  std::string id;
  std::vector<size_t> face;  // vertex indices into the polytope
  Cone cone;
  bool smooth = false;
  bool gorenstein = false;
  Int gorenstein_index = 0;
  std::optional<IntVec> gorenstein_degree;
  RatVec gorenstein_degree_rat;
  std::optional<QuotientType> quotient;
  size_t hilbert_basis_size = 0;
  std::optional<ChartPresentation> presentation;
  bool qg_rigid = false;
  std::vector<Int> polygon_edge_lengths;  // facet charts over a polygon only
};

struct ChartAtlas {
  LatticePolytope polytope;
  std::vector<Facet> facet_list;
  std::vector<ChartReport> facet_charts;                  // one per facet, facet order
  std::vector<std::pair<size_t, size_t>> singular_pairs;  // facet index pairs
  std::vector<ChartReport> intersection_charts;           // aligned with singular_pairs
};

// Reports for every facet chart and for every singular face shared by
// two facet charts of a canonical Fano polytope.
ChartAtlas chart_atlas(const LatticePolytope& p);

// True when every proper face of the (simplicial, full-dimensional) cone
// is a smooth cone.
bool has_isolated_singularity(const Cone& c);

// True when the only lattice points of conv(0, rays) are 0 and the rays.
bool is_terminal_cone(const Cone& c);

}  // namespace fanohull

#endif
