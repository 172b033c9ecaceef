#ifndef FANOHULL_TEST_HELPERS_HPP
#define FANOHULL_TEST_HELPERS_HPP

#include <algorithm>
#include <set>

#include "fanohull/fixtures.hpp"

namespace fanohull {
namespace testutil {

// Vertices of the bundled pentagon polytope, by name.
inline IntVec pa() { return {1, 0, 1}; }
inline IntVec pb() { return {1, 1, 1}; }
inline IntVec pc() { return {0, 1, 1}; }
inline IntVec pd() { return {-1, 0, 1}; }
inline IntVec pe() { return {0, -1, 1}; }

inline std::vector<size_t> face_of(const LatticePolytope& p, std::vector<IntVec> verts) {
  std::vector<size_t> idx;
  for (const IntVec& v : verts) {
    auto it = std::find(p.vertices().begin(), p.vertices().end(), v);
    REQUIRE(it != p.vertices().end());
    idx.push_back(static_cast<size_t>(it - p.vertices().begin()));
  }
  std::sort(idx.begin(), idx.end());
  return idx;
}

// The facet of p whose vertex set is exactly the given point set.
inline const Facet& facet_with_vertices(const LatticePolytope& p, const std::vector<Facet>& fs,
                                        std::vector<IntVec> verts) {
  std::set<IntVec> want(verts.begin(), verts.end());
  for (const Facet& f : fs) {
    std::set<IntVec> got;
    for (size_t i : f.vertex_indices) got.insert(p.vertices()[i]);
    if (got == want) return f;
  }
  REQUIRE(false);
  return fs.front();
}

inline RatVec rat_point(std::vector<std::string> entries) {
  RatVec v;
  for (const std::string& s : entries) v.push_back(rat_from_string(s));
  return v;
}

inline std::set<IntVec> vertex_set(const LatticePolytope& p) {
  return {p.vertices().begin(), p.vertices().end()};
}

}  // namespace testutil
}  // namespace fanohull

#endif
