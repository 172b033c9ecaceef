#include "fanohull/polytope.hpp"

#include <algorithm>
#include <set>

namespace fanohull {

bool lex_less(const RatVec& a, const RatVec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool lex_less(const IntVec& a, const IntVec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Rat rat_det(const std::vector<RatVec>& rows) {
  size_t n = rows.size();
  RatMat m(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) m.at(i, j) = rows[i][j];
  Rat d = 1;
  for (size_t k = 0; k < n; ++k) {
    size_t p = k;
    while (p < n && m.at(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      for (size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
      d = -d;
    }
    d *= m.at(k, k);
    Rat inv = Rat(1) / m.at(k, k);
    for (size_t i = k + 1; i < n; ++i) {
      if (m.at(i, k) == 0) continue;
      Rat f = m.at(i, k) * inv;
      for (size_t j = k; j < n; ++j) m.at(i, j) -= f * m.at(k, j);
    }
  }
  return d;
}

namespace {

// Affine chart of a point set: orthonormality is not needed, only exact
// invertibility of the projection restricted to the affine hull.
struct AffineChart {
  RatVec origin;
  std::vector<RatVec> basis;  // d rows spanning the difference space

  size_t dim() const { return basis.size(); }

  RatVec project(const RatVec& x) const {
    size_t n = origin.size(), d = basis.size();
    RatMat m(n, d);
    for (size_t j = 0; j < d; ++j)
      for (size_t i = 0; i < n; ++i) m.at(i, j) = basis[j][i];
    RatVec rhs(n);
    for (size_t i = 0; i < n; ++i) rhs[i] = x[i] - origin[i];
    auto sol = solve_unique(m, rhs);
    if (!sol) throw std::invalid_argument("point outside affine hull");
    return *sol;
  }

  bool in_affine_hull(const RatVec& x) const {
    size_t n = origin.size(), d = basis.size();
    RatMat m(n, d);
    for (size_t j = 0; j < d; ++j)
      for (size_t i = 0; i < n; ++i) m.at(i, j) = basis[j][i];
    RatVec rhs(n);
    for (size_t i = 0; i < n; ++i) rhs[i] = x[i] - origin[i];
    return solve_any(m, rhs).has_value();
  }
};

AffineChart make_chart(const std::vector<RatVec>& pts) {
  AffineChart c;
  c.origin = pts[0];
  std::vector<RatVec> diffs;
  for (size_t i = 1; i < pts.size(); ++i) {
    RatVec d(pts[i].size());
    for (size_t j = 0; j < d.size(); ++j) d[j] = pts[i][j] - c.origin[j];
    diffs.push_back(d);
    if (rank_of_rows(diffs) == diffs.size())
      c.basis.push_back(d);
    else
      diffs.pop_back();
  }
  return c;
}

// Hyperplane <a,x> = b through a point subset, unique up to scale, with
// primitive integer a; nullopt when the subset is affinely degenerate.
std::optional<std::pair<IntVec, Rat>> hyperplane_through(const std::vector<RatVec>& pts) {
  size_t n = pts[0].size();
  RatMat m(pts.size(), n + 1);
  for (size_t i = 0; i < pts.size(); ++i) {
    for (size_t j = 0; j < n; ++j) m.at(i, j) = pts[i][j];
    m.at(i, n) = -1;
  }
  auto kern = rat_kernel(m);
  if (kern.size() != 1) return std::nullopt;
  RatVec v = kern[0];
  RatVec dir(v.begin(), v.begin() + n);
  bool zero = true;
  for (const Rat& q : dir)
    if (q != 0) zero = false;
  if (zero) return std::nullopt;
  IntVec a = primitive_integer_direction(dir);
  size_t i0 = 0;
  while (dir[i0] == 0) ++i0;
  Rat scale = Rat(a[i0]) / dir[i0];
  return std::make_pair(a, v[n] * scale);
}

// Complete facet list of a full-dimensional point configuration.
std::vector<Facet> facets_of_points(const std::vector<RatVec>& pts, size_t n) {
  std::vector<Facet> out;
  if (n == 0 || pts.size() < n) return out;
  std::set<std::pair<IntVec, Rat>> seen;
  std::vector<size_t> comb(n);
  for (size_t i = 0; i < n; ++i) comb[i] = i;
  while (true) {
    std::vector<RatVec> sub;
    for (size_t i : comb) sub.push_back(pts[i]);
    auto hp = hyperplane_through(sub);
    if (hp) {
      IntVec a = hp->first;
      Rat b = hp->second;
      bool pos = false, neg = false;
      for (const RatVec& p : pts) {
        Rat s = dot(p, a) - b;
        if (s > 0) pos = true;
        if (s < 0) neg = true;
        if (pos && neg) break;
      }
      if (!(pos && neg)) {
        if (pos) {
          a = vec_neg(std::move(a));
          b = -b;
        }
        if (seen.insert({a, b}).second) {
          Facet f;
          f.normal = a;
          f.level = b;
          for (size_t i = 0; i < pts.size(); ++i)
            if (dot(pts[i], a) == b) f.vertex_indices.push_back(i);
          out.push_back(std::move(f));
        }
      }
    }
    // next combination
    size_t i = n;
    while (i > 0) {
      --i;
      if (comb[i] + (n - i) < pts.size()) {
        ++comb[i];
        for (size_t j = i + 1; j < n; ++j) comb[j] = comb[j - 1] + 1;
        break;
      }
      if (i == 0) return out;
    }
  }
  return out;
}

// Indices of the extreme points of a full-dimensional configuration.
std::vector<size_t> extreme_of_full_dim(const std::vector<RatVec>& pts, size_t n) {
  std::vector<Facet> fs = facets_of_points(pts, n);
  std::vector<size_t> result;
  for (size_t i = 0; i < pts.size(); ++i) {
    std::vector<IntVec> tight;
    for (const Facet& f : fs)
      if (dot(pts[i], f.normal) == f.level) tight.push_back(f.normal);
    if (rank_of_rows(tight) == n) result.push_back(i);
  }
  return result;
}

std::vector<size_t> extreme_indices(const std::vector<RatVec>& pts, size_t ambient) {
  // Deduplicate, keeping the first occurrence.
  std::vector<size_t> kept;
  std::set<RatVec> dedupe;
  for (size_t i = 0; i < pts.size(); ++i)
    if (dedupe.insert(pts[i]).second) kept.push_back(i);
  std::vector<RatVec> uniq;
  for (size_t i : kept) uniq.push_back(pts[i]);

  if (uniq.size() == 1) return {kept[0]};
  AffineChart chart = make_chart(uniq);
  size_t d = chart.dim();
  if (d == 0) return {kept[0]};

  std::vector<size_t> ext_local;
  if (d == ambient) {
    ext_local = extreme_of_full_dim(uniq, ambient);
  } else {
    std::vector<RatVec> proj;
    for (const RatVec& p : uniq) proj.push_back(chart.project(p));
    if (d == 1) {
      size_t lo = 0, hi = 0;
      for (size_t i = 1; i < proj.size(); ++i) {
        if (proj[i][0] < proj[lo][0]) lo = i;
        if (proj[i][0] > proj[hi][0]) hi = i;
      }
      ext_local = {lo, hi};
      if (lo == hi) ext_local = {lo};
    } else {
      ext_local = extreme_of_full_dim(proj, d);
    }
  }
  std::vector<size_t> result;
  for (size_t i : ext_local) result.push_back(kept[i]);
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

int affine_dim_of(const std::vector<RatVec>& pts) {
  if (pts.empty()) return -1;
  std::vector<RatVec> diffs;
  for (size_t i = 1; i < pts.size(); ++i) {
    RatVec d(pts[i].size());
    for (size_t j = 0; j < d.size(); ++j) d[j] = pts[i][j] - pts[0][j];
    diffs.push_back(d);
  }
  return static_cast<int>(rank_of_rows(diffs));
}

}  // namespace

RationalPolytope RationalPolytope::from_points(size_t ambient_dim, std::vector<RatVec> points) {
  RationalPolytope p(ambient_dim);
  if (points.empty()) return p;
  for (const RatVec& pt : points)
    if (pt.size() != ambient_dim) throw std::invalid_argument("point dimension mismatch");
  std::vector<size_t> ext = extreme_indices(points, ambient_dim);
  for (size_t i : ext) p.vertices_.push_back(points[i]);
  std::sort(p.vertices_.begin(), p.vertices_.end(), lex_less);
  p.dim_ = affine_dim_of(p.vertices_);
  return p;
}

RationalPolytope LatticePolytope::rational() const {
  RationalPolytope p(ambient_);
  std::vector<RatVec> pts;
  for (const IntVec& v : vertices_) pts.push_back(to_rat(v));
  return RationalPolytope::from_points(ambient_, pts);
}

LatticePolytope hull(const std::vector<IntVec>& points) {
  if (points.empty()) throw std::invalid_argument("hull of an empty point set");
  size_t n = points[0].size();
  for (const IntVec& p : points)
    if (p.size() != n) throw std::invalid_argument("point dimension mismatch");
  std::vector<RatVec> pts;
  for (const IntVec& p : points) pts.push_back(to_rat(p));
  std::vector<size_t> ext = extreme_indices(pts, n);
  LatticePolytope q;
  q.ambient_ = n;
  for (size_t i : ext) q.vertices_.push_back(points[i]);
  std::sort(q.vertices_.begin(), q.vertices_.end(), lex_less);
  q.vertices_.erase(std::unique(q.vertices_.begin(), q.vertices_.end()), q.vertices_.end());
  std::vector<RatVec> vrat;
  for (const IntVec& v : q.vertices_) vrat.push_back(to_rat(v));
  q.dim_ = affine_dim_of(vrat);
  return q;
}

std::vector<Facet> facets(const RationalPolytope& p) {
  if (!p.is_full_dim()) throw std::invalid_argument("facets: polytope not full-dimensional");
  std::vector<Facet> fs = facets_of_points(p.vertices(), p.ambient_dim());
  std::sort(fs.begin(), fs.end(), [](const Facet& a, const Facet& b) {
    if (a.normal != b.normal) return lex_less(a.normal, b.normal);
    return a.level < b.level;
  });
  return fs;
}

std::vector<Facet> facets(const LatticePolytope& p) { return facets(p.rational()); }

RationalPolytope polar(const RationalPolytope& p) {
  if (!p.is_full_dim()) throw std::invalid_argument("polar: polytope not full-dimensional");
  std::vector<Facet> fs = facets(p);
  for (const Facet& f : fs)
    if (f.level <= 0) throw std::invalid_argument("polar: origin not interior");
  std::vector<RatVec> verts;
  for (const Facet& f : fs) {
    RatVec v(p.ambient_dim());
    for (size_t j = 0; j < v.size(); ++j) v[j] = Rat(f.normal[j]) / f.level;
    verts.push_back(v);
  }
  return RationalPolytope::from_points(p.ambient_dim(), verts);
}

RationalPolytope polar(const LatticePolytope& p) { return polar(p.rational()); }

std::vector<IntVec> lattice_points(const RationalPolytope& p) {
  std::vector<IntVec> result;
  if (p.empty()) return result;
  size_t n = p.ambient_dim();
  std::vector<Int> lo(n), hi(n);
  for (size_t j = 0; j < n; ++j) {
    Rat mn = p.vertices()[0][j], mx = mn;
    for (const RatVec& v : p.vertices()) {
      mn = std::min(mn, v[j]);
      mx = std::max(mx, v[j]);
    }
    lo[j] = rat_ceil(mn);
    hi[j] = rat_floor(mx);
    if (lo[j] > hi[j]) return result;
  }

  std::vector<Facet> fs;
  bool full = p.is_full_dim();
  if (full) fs = facets(p);

  IntVec x = lo;
  while (true) {
    bool inside = true;
    RatVec xr = to_rat(x);
    if (full) {
      for (const Facet& f : fs)
        if (dot(xr, f.normal) > f.level) {
          inside = false;
          break;
        }
    } else {
      inside = contains(p, xr);
    }
    if (inside) result.push_back(x);
    size_t j = 0;
    while (j < n) {
      if (x[j] < hi[j]) {
        ++x[j];
        for (size_t k = 0; k < j; ++k) x[k] = lo[k];
        break;
      }
      ++j;
    }
    if (j == n) break;
  }
  std::sort(result.begin(), result.end(), lex_less);
  return result;
}

std::vector<IntVec> lattice_points(const LatticePolytope& p) { return lattice_points(p.rational()); }

namespace {

// Boundary triangulation by recursive coning from the first vertex.
// Simplices are returned as vertex index tuples into `verts`.
std::vector<std::vector<size_t>> triangulate_rec(const std::vector<RatVec>& verts,
                                                 const std::vector<size_t>& subset, size_t dim) {
  if (subset.size() == dim + 1) return {subset};
  std::vector<RatVec> pts;
  for (size_t i : subset) pts.push_back(verts[i]);
  std::vector<Facet> fs;
  if (dim == pts[0].size()) {
    fs = facets_of_points(pts, dim);
  } else {
    AffineChart chart = make_chart(pts);
    if (chart.dim() != dim) throw std::logic_error("triangulation dimension mismatch");
    std::vector<RatVec> proj;
    for (const RatVec& q : pts) proj.push_back(chart.project(q));
    if (dim == 1) {
      // A segment; its two extreme points were already the subset when
      // subset.size()==2, so here there are collinear interior points.
      size_t lo = 0, hi = 0;
      for (size_t i = 1; i < proj.size(); ++i) {
        if (proj[i][0] < proj[lo][0]) lo = i;
        if (proj[i][0] > proj[hi][0]) hi = i;
      }
      return {{subset[lo], subset[hi]}};
    }
    fs = facets_of_points(proj, dim);
  }
  size_t apex = 0;  // subset is sorted; vertex subset[0] is lex-min
  std::vector<std::vector<size_t>> result;
  for (const Facet& f : fs) {
    bool contains_apex =
        std::find(f.vertex_indices.begin(), f.vertex_indices.end(), apex) != f.vertex_indices.end();
    if (contains_apex) continue;
    std::vector<size_t> fsubset;
    for (size_t i : f.vertex_indices) fsubset.push_back(subset[i]);
    for (auto& s : triangulate_rec(verts, fsubset, dim - 1)) {
      s.push_back(subset[apex]);
      result.push_back(std::move(s));
    }
  }
  return result;
}

std::vector<std::vector<size_t>> triangulate(const RationalPolytope& p) {
  std::vector<size_t> all(p.vertices().size());
  for (size_t i = 0; i < all.size(); ++i) all[i] = i;
  return triangulate_rec(p.vertices(), all, p.ambient_dim());
}

}  // namespace

Rat normalized_volume(const RationalPolytope& p) {
  if (!p.is_full_dim())
    throw std::invalid_argument("normalized_volume: polytope not full-dimensional");
  Rat total = 0;
  size_t n = p.ambient_dim();
  for (const auto& simplex : triangulate(p)) {
    std::vector<RatVec> rows;
    for (size_t i = 0; i + 1 < simplex.size(); ++i) {
      RatVec d(n);
      for (size_t j = 0; j < n; ++j)
        d[j] = p.vertices()[simplex[i]][j] - p.vertices()[simplex.back()][j];
      rows.push_back(d);
    }
    Rat dt = rat_det(rows);
    total += dt < 0 ? -dt : dt;
  }
  return total;
}

Rat normalized_volume(const LatticePolytope& p) { return normalized_volume(p.rational()); }

RatVec barycentre(const RationalPolytope& p) {
  if (!p.is_full_dim()) throw std::invalid_argument("barycentre: polytope not full-dimensional");
  size_t n = p.ambient_dim();
  Rat total = 0;
  RatVec acc(n, Rat(0));
  for (const auto& simplex : triangulate(p)) {
    std::vector<RatVec> rows;
    for (size_t i = 0; i + 1 < simplex.size(); ++i) {
      RatVec d(n);
      for (size_t j = 0; j < n; ++j)
        d[j] = p.vertices()[simplex[i]][j] - p.vertices()[simplex.back()][j];
      rows.push_back(d);
    }
    Rat dt = rat_det(rows);
    if (dt < 0) dt = -dt;
    if (dt == 0) continue;
    total += dt;
    for (size_t j = 0; j < n; ++j) {
      Rat c = 0;
      for (size_t i : simplex) c += p.vertices()[i][j];
      acc[j] += dt * c / Rat(simplex.size());
    }
  }
  for (size_t j = 0; j < n; ++j) acc[j] /= total;
  return acc;
}

RatVec barycentre(const LatticePolytope& p) { return barycentre(p.rational()); }

bool contains(const RationalPolytope& p, const RatVec& x) {
  if (p.empty()) return false;
  if (p.vertices().size() == 1) return p.vertices()[0] == x;
  if (p.is_full_dim()) {
    for (const Facet& f : facets(p))
      if (dot(x, f.normal) > f.level) return false;
    return true;
  }
  AffineChart chart = make_chart(p.vertices());
  if (!chart.in_affine_hull(x)) return false;
  std::vector<RatVec> proj;
  for (const RatVec& v : p.vertices()) proj.push_back(chart.project(v));
  RatVec xp = chart.project(x);
  size_t d = chart.dim();
  if (d == 1) {
    Rat mn = proj[0][0], mx = proj[0][0];
    for (const RatVec& q : proj) {
      mn = std::min(mn, q[0]);
      mx = std::max(mx, q[0]);
    }
    return mn <= xp[0] && xp[0] <= mx;
  }
  for (const Facet& f : facets_of_points(proj, d))
    if (dot(xp, f.normal) > f.level) return false;
  return true;
}

bool contains(const LatticePolytope& p, const RatVec& x) { return contains(p.rational(), x); }

FanoReport fano_classify(const LatticePolytope& p) {
  FanoReport r;
  if (!p.is_full_dim()) return r;
  std::vector<Facet> fs = facets(p);
  bool origin_interior = true;
  for (const Facet& f : fs)
    if (f.level <= 0) origin_interior = false;
  bool primitive_vertices = true;
  for (const IntVec& v : p.vertices())
    if (content(v) != 1) primitive_vertices = false;
  r.fano = origin_interior && primitive_vertices;
  if (!r.fano) return r;

  std::vector<IntVec> pts = lattice_points(p);
  size_t interior_count = 0;
  for (const IntVec& x : pts) {
    bool interior = true;
    RatVec xr = to_rat(x);
    for (const Facet& f : fs)
      if (dot(xr, f.normal) == f.level) {
        interior = false;
        break;
      }
    if (interior) ++interior_count;
  }
  r.canonical = interior_count == 1;
  r.terminal = pts.size() == p.vertices().size() + 1;

  RationalPolytope q = polar(p);
  r.reflexive = true;
  for (const RatVec& v : q.vertices())
    if (!is_integral(v)) r.reflexive = false;

  std::set<IntVec> vset(p.vertices().begin(), p.vertices().end());
  r.centrally_symmetric = true;
  for (const IntVec& v : p.vertices())
    if (!vset.count(vec_neg(v))) r.centrally_symmetric = false;
  return r;
}

KPolystabilityCertificate k_polystable_toric(const LatticePolytope& p) {
  KPolystabilityCertificate c;
  c.polar_barycentre = barycentre(polar(p));
  c.polystable = true;
  for (const Rat& q : c.polar_barycentre)
    if (q != 0) c.polystable = false;
  return c;
}

MatrixGroup automorphisms(const LatticePolytope& p) {
  if (!p.is_full_dim()) throw std::invalid_argument("automorphisms: polytope not full-dimensional");
  size_t n = p.ambient_dim();
  const std::vector<IntVec>& verts = p.vertices();

  // Pick a linearly independent vertex tuple.
  std::vector<size_t> base;
  std::vector<IntVec> base_rows;
  for (size_t i = 0; i < verts.size() && base.size() < n; ++i) {
    base_rows.push_back(verts[i]);
    if (rank_of_rows(base_rows) == base_rows.size())
      base.push_back(i);
    else
      base_rows.pop_back();
  }
  if (base.size() < n)
    throw std::logic_error("full-dimensional polytope without spanning vertices");

  RatMat bmat(n, n);  // columns are the base vertices
  for (size_t k = 0; k < n; ++k)
    for (size_t i = 0; i < n; ++i) bmat.at(i, k) = Rat(verts[base[k]][i]);

  std::set<IntVec> vset(verts.begin(), verts.end());
  std::set<std::vector<Int>> found;
  MatrixGroup g;

  std::vector<size_t> image(n, 0);
  while (true) {
    // Solve candidate * base_k = image_k for all k at once: each row of the
    // candidate solves bmat^T y = target row.
    RatMat bt(n, n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) bt.at(i, j) = bmat.at(j, i);
    bool ok = true;
    IntMat cand(n, n);
    for (size_t r = 0; r < n && ok; ++r) {
      RatVec rhs(n);
      for (size_t k = 0; k < n; ++k) rhs[k] = Rat(verts[image[k]][r]);
      auto y = solve_unique(bt, rhs);
      if (!y || !is_integral(*y)) {
        ok = false;
        break;
      }
      IntVec yi = to_int(*y);
      for (size_t j = 0; j < n; ++j) cand.at(r, j) = yi[j];
    }
    if (ok && is_unimodular(cand)) {
      bool preserves = true;
      for (const IntVec& v : verts)
        if (!vset.count(cand.mul(v))) {
          preserves = false;
          break;
        }
      if (preserves) {
        std::vector<Int> key;
        for (size_t i = 0; i < n; ++i)
          for (size_t j = 0; j < n; ++j) key.push_back(cand.at(i, j));
        if (found.insert(key).second) g.elements.push_back(cand);
      }
    }
    size_t j = 0;
    while (j < n) {
      if (image[j] + 1 < verts.size()) {
        ++image[j];
        for (size_t k = 0; k < j; ++k) image[k] = 0;
        break;
      }
      ++j;
    }
    if (j == n) break;
  }

  std::sort(g.elements.begin(), g.elements.end(), [n](const IntMat& a, const IntMat& b) {
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        if (a.at(i, j) != b.at(i, j)) return a.at(i, j) < b.at(i, j);
    return false;
  });
  return g;
}

RationalPolytope slice(const RationalPolytope& p, size_t axis, const Rat& level) {
  if (axis >= p.ambient_dim()) throw std::invalid_argument("slice: axis out of range");
  std::vector<RatVec> pts;
  for (const RatVec& v : p.vertices())
    if (v[axis] == level) pts.push_back(v);
  if (p.dim() >= 1) {
    for (auto [i, j] : edges(p)) {
      const RatVec& u = p.vertices()[i];
      const RatVec& v = p.vertices()[j];
      Rat a = u[axis], b = v[axis];
      if ((a < level && b > level) || (a > level && b < level)) {
        Rat t = (level - a) / (b - a);
        RatVec x(p.ambient_dim());
        for (size_t k = 0; k < x.size(); ++k) x[k] = u[k] + t * (v[k] - u[k]);
        pts.push_back(x);
      }
    }
  }
  if (pts.empty()) return RationalPolytope(p.ambient_dim());
  return RationalPolytope::from_points(p.ambient_dim(), pts);
}

RationalPolytope slice(const LatticePolytope& p, size_t axis, const Rat& level) {
  return slice(p.rational(), axis, level);
}

namespace {

// Edge index pairs from a facet structure; works for any ordered extreme
// point list together with the facets of its configuration.
std::vector<std::pair<size_t, size_t>> edges_from_facets(size_t nverts,
                                                         const std::vector<Facet>& fs) {
  if (fs.size() > 64) throw std::invalid_argument("edge enumeration limited to 64 facets");
  std::vector<uint64_t> tight(nverts, 0);
  for (size_t f = 0; f < fs.size(); ++f)
    for (size_t i : fs[f].vertex_indices) tight[i] |= uint64_t(1) << f;
  std::vector<std::pair<size_t, size_t>> result;
  for (size_t i = 0; i < nverts; ++i)
    for (size_t j = i + 1; j < nverts; ++j) {
      uint64_t common = tight[i] & tight[j];
      size_t members = 0;
      bool minimal = true;
      for (size_t v = 0; v < nverts && minimal; ++v)
        if ((tight[v] & common) == common) {
          ++members;
          if (v != i && v != j) minimal = false;
        }
      if (minimal && members == 2) result.emplace_back(i, j);
    }
  return result;
}

}  // namespace

std::vector<std::pair<size_t, size_t>> edges(const RationalPolytope& p) {
  if (p.dim() < 1) return {};
  if (p.dim() == 1) return {{0, 1}};
  if (p.is_full_dim()) return edges_from_facets(p.vertices().size(), facets(p));
  AffineChart chart = make_chart(p.vertices());
  std::vector<RatVec> proj;
  for (const RatVec& v : p.vertices()) proj.push_back(chart.project(v));
  return edges_from_facets(proj.size(), facets_of_points(proj, chart.dim()));
}

std::vector<std::pair<size_t, size_t>> edges(const LatticePolytope& p) {
  return edges(p.rational());
}

std::map<std::pair<size_t, size_t>, Int> edge_lattice_lengths(const LatticePolytope& p) {
  std::map<std::pair<size_t, size_t>, Int> result;
  for (auto e : edges(p))
    result[e] = content(vec_sub(p.vertices()[e.second], p.vertices()[e.first]));
  return result;
}

bool is_face(const RationalPolytope& p, const std::vector<size_t>& vertex_set) {
  if (vertex_set.empty()) return false;
  if (!p.is_full_dim()) throw std::invalid_argument("is_face: polytope not full-dimensional");
  std::vector<Facet> fs = facets(p);
  size_t k = p.vertices().size();
  for (size_t i : vertex_set)
    if (i >= k) return false;
  // The minimal face containing the set is cut out by the facets tight on
  // all of it; the set is a face iff it matches that face's vertex set.
  std::vector<size_t> common;
  for (size_t f = 0; f < fs.size(); ++f) {
    bool all = true;
    for (size_t i : vertex_set)
      if (std::find(fs[f].vertex_indices.begin(), fs[f].vertex_indices.end(), i) ==
          fs[f].vertex_indices.end()) {
        all = false;
        break;
      }
    if (all) common.push_back(f);
  }
  if (common.empty()) return false;  // only the whole polytope, not proper
  std::vector<size_t> members;
  for (size_t v = 0; v < k; ++v) {
    bool in_all = true;
    for (size_t f : common)
      if (std::find(fs[f].vertex_indices.begin(), fs[f].vertex_indices.end(), v) ==
          fs[f].vertex_indices.end()) {
        in_all = false;
        break;
      }
    if (in_all) members.push_back(v);
  }
  std::vector<size_t> sorted = vertex_set;
  std::sort(sorted.begin(), sorted.end());
  return members == sorted;
}

bool is_face(const LatticePolytope& p, const std::vector<size_t>& vertex_set) {
  return is_face(p.rational(), vertex_set);
}

}  // namespace fanohull
