#ifndef FANOHULL_POLYTOPE_HPP
#define FANOHULL_POLYTOPE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fanohull/linalg.hpp"

namespace fanohull {

// Supporting inequality <normal, x> <= level of a full-dimensional
// polytope; the normal is a primitive integer vector and equality holds
// exactly on vertex_indices.
struct Facet {
  IntVec normal;
  Rat level;
  std::vector<size_t> vertex_indices;
};

// Polytope with rational vertices, stored as the irredundant extreme
// point set in lexicographic order. May be empty or lower-dimensional.
class RationalPolytope {
 public:
  RationalPolytope() = default;
  explicit RationalPolytope(size_t ambient_dim) : ambient_(ambient_dim), dim_(-1) {}

  static RationalPolytope from_points(size_t ambient_dim, std::vector<RatVec> points);

  size_t ambient_dim() const { return ambient_; }
  int dim() const { return dim_; }  // affine dimension, -1 when empty
  bool empty() const { return vertices_.empty(); }
  bool is_full_dim() const { return dim_ >= 0 && static_cast<size_t>(dim_) == ambient_; }
  const std::vector<RatVec>& vertices() const { return vertices_; }

  bool operator==(const RationalPolytope& o) const {
    return ambient_ == o.ambient_ && vertices_ == o.vertices_;
  }

 private:
  size_t ambient_ = 0;
  int dim_ = -1;
  std::vector<RatVec> vertices_;
};

// Lattice polytope: integer vertices, same canonicalization.
class LatticePolytope {
 public:
  LatticePolytope() = default;

  size_t ambient_dim() const { return ambient_; }
  int dim() const { return dim_; }
  bool is_full_dim() const { return dim_ >= 0 && static_cast<size_t>(dim_) == ambient_; }
  const std::vector<IntVec>& vertices() const { return vertices_; }
  RationalPolytope rational() const;

  bool operator==(const LatticePolytope& o) const {
    return ambient_ == o.ambient_ && vertices_ == o.vertices_;
  }

  friend LatticePolytope hull(const std::vector<IntVec>& points);

 private:
  size_t ambient_ = 0;
  int dim_ = -1;
  std::vector<IntVec> vertices_;
};

// Group of unimodular matrices preserving a vertex set; closed, with
// the identity, canonically sorted.
struct MatrixGroup {
  std::vector<IntMat> elements;
  size_t order() const { return elements.size(); }
};

struct FanoReport {
  bool fano = false;
  bool canonical = false;
  bool terminal = false;
  bool reflexive = false;
  bool centrally_symmetric = false;
};

struct KPolystabilityCertificate {
  bool polystable = false;
  RatVec polar_barycentre;
};

LatticePolytope hull(const std::vector<IntVec>& points);

std::vector<Facet> facets(const RationalPolytope& p);
std::vector<Facet> facets(const LatticePolytope& p);

RationalPolytope polar(const LatticePolytope& p);
RationalPolytope polar(const RationalPolytope& p);

std::vector<IntVec> lattice_points(const RationalPolytope& p);
std::vector<IntVec> lattice_points(const LatticePolytope& p);

Rat normalized_volume(const RationalPolytope& p);
Rat normalized_volume(const LatticePolytope& p);

RatVec barycentre(const RationalPolytope& p);
RatVec barycentre(const LatticePolytope& p);

FanoReport fano_classify(const LatticePolytope& p);
KPolystabilityCertificate k_polystable_toric(const LatticePolytope& p);

MatrixGroup automorphisms(const LatticePolytope& p);

RationalPolytope slice(const RationalPolytope& p, size_t axis, const Rat& level);
RationalPolytope slice(const LatticePolytope& p, size_t axis, const Rat& level);

// Edges of a full-dimensional polytope as sorted vertex index pairs.
std::vector<std::pair<size_t, size_t>> edges(const RationalPolytope& p);
std::vector<std::pair<size_t, size_t>> edges(const LatticePolytope& p);

std::map<std::pair<size_t, size_t>, Int> edge_lattice_lengths(const LatticePolytope& p);

bool contains(const RationalPolytope& p, const RatVec& x);
bool contains(const LatticePolytope& p, const RatVec& x);

// True when the given vertex index set is a face of p (p full-dimensional).
bool is_face(const RationalPolytope& p, const std::vector<size_t>& vertex_set);
bool is_face(const LatticePolytope& p, const std::vector<size_t>& vertex_set);

Rat rat_det(const std::vector<RatVec>& rows);

}  // namespace fanohull

#endif
