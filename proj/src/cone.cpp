#include "fanohull/cone.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace fanohull {

namespace {

IntMat int_inverse(const IntMat& m) {
  size_t n = m.rows();
  if (!is_unimodular(m)) throw std::invalid_argument("inverse of non-unimodular matrix");
  RatMat a(m);
  IntMat inv(n, n);
  for (size_t c = 0; c < n; ++c) {
    RatVec e(n, Rat(0));
    e[c] = 1;
    auto x = solve_unique(a, e);
    IntVec xi = to_int(*x);
    for (size_t i = 0; i < n; ++i) inv.at(i, c) = xi[i];
  }
  return inv;
}

// gcd of the entries together with cofactors: sum u_i * a_i = g.
Int ext_gcd_vec(const std::vector<Int>& u, std::vector<Int>& a) {
  a.assign(u.size(), Int(0));
  Int g = 0;
  for (size_t i = 0; i < u.size(); ++i) {
    Int x, y;
    Int g2 = ext_gcd(g, u[i], x, y);
    for (size_t j = 0; j < i; ++j) a[j] *= x;
    a[i] = y;
    g = g2;
  }
  return g;
}

// Basis (rows) of the saturated lattice spanned by the given vectors.
std::vector<IntVec> span_lattice_basis(size_t ambient, const std::vector<IntVec>& vecs) {
  if (vecs.empty()) return {};
  IntMat r(vecs);
  IntMat k = kernel_basis(r);
  if (k.rows() == 0) return IntMat::identity(ambient).row_list();
  return kernel_basis(k).row_list();
}

// Coordinates of v in a saturated lattice basis given as rows.
IntVec local_coords(const std::vector<IntVec>& basis, const IntVec& v) {
  size_t n = v.size(), d = basis.size();
  RatMat m(n, d);
  for (size_t j = 0; j < d; ++j)
    for (size_t i = 0; i < n; ++i) m.at(i, j) = Rat(basis[j][i]);
  auto sol = solve_unique(m, to_rat(v));
  if (!sol) throw std::logic_error("vector outside span in local_coords");
  return to_int(*sol);
}

IntVec lift_coords(const std::vector<IntVec>& basis, size_t ambient, const IntVec& x) {
  IntVec v(ambient, Int(0));
  for (size_t j = 0; j < basis.size(); ++j)
    for (size_t i = 0; i < ambient; ++i) v[i] += x[j] * basis[j][i];
  return v;
}

// Facet normals of a full-dimensional cone through the origin.
std::vector<IntVec> cone_facet_normals(const std::vector<IntVec>& rays, size_t d) {
  if (d == 1) {
    // Half-line; the single supporting normal is the ray direction itself.
    return {primitive(rays[0])};
  }
  std::set<IntVec> seen;
  std::vector<IntVec> normals;
  std::vector<size_t> comb(d - 1);
  for (size_t i = 0; i < d - 1; ++i) comb[i] = i;
  if (rays.size() < d - 1) return normals;
  while (true) {
    RatMat m(d - 1, d);
    for (size_t i = 0; i < d - 1; ++i)
      for (size_t j = 0; j < d; ++j) m.at(i, j) = Rat(rays[comb[i]][j]);
    auto kern = rat_kernel(m);
    if (kern.size() == 1) {
      IntVec a = primitive_integer_direction(kern[0]);
      bool pos = false, neg = false;
      for (const IntVec& r : rays) {
        Int s = dot(a, r);
        if (s > 0) pos = true;
        if (s < 0) neg = true;
        if (pos && neg) break;
      }
      if (!(pos && neg)) {
        if (neg) a = vec_neg(std::move(a));
        if (seen.insert(a).second) normals.push_back(a);
      }
    }
    size_t i = d - 1;
    bool done = false;
    while (i > 0) {
      --i;
      if (comb[i] + (d - 1 - i) < rays.size()) {
        ++comb[i];
        for (size_t j = i + 1; j < d - 1; ++j) comb[j] = comb[j - 1] + 1;
        break;
      }
      if (i == 0) done = true;
    }
    if (done) break;
  }
  return normals;
}

struct LocalCone {
  std::vector<IntVec> basis;    // rows; saturated lattice basis of the span
  std::vector<IntVec> rays;     // in local coordinates, full-dimensional there
  std::vector<IntVec> normals;  // facet normals in local coordinates
  size_t d = 0;
};

LocalCone localize(const Cone& c) {
  LocalCone lc;
  lc.basis = span_lattice_basis(c.ambient, c.rays);
  lc.d = lc.basis.size();
  for (const IntVec& r : c.rays) lc.rays.push_back(local_coords(lc.basis, r));
  lc.normals = cone_facet_normals(lc.rays, lc.d);
  return lc;
}

bool local_contains(const LocalCone& lc, const IntVec& x) {
  if (lc.d == 1) return lc.rays[0][0] * x[0] >= 0;
  for (const IntVec& a : lc.normals)
    if (dot(a, x) < 0) return false;
  return true;
}

}  // namespace

size_t Cone::dim() const {
  if (rays.empty()) return 0;
  return rank_of_rows(rays);
}

Cone make_cone(size_t ambient, std::vector<IntVec> generators) {
  Cone c;
  c.ambient = ambient;
  std::set<IntVec> uniq;
  for (IntVec& g : generators) {
    if (g.size() != ambient) throw std::invalid_argument("ray dimension mismatch");
    if (is_zero(g)) continue;
    uniq.insert(primitive(std::move(g)));
  }
  std::vector<IntVec> rays(uniq.begin(), uniq.end());
  if (rays.empty()) return c;

  std::vector<IntVec> basis = span_lattice_basis(ambient, rays);
  size_t d = basis.size();
  std::vector<IntVec> local;
  for (const IntVec& r : rays) local.push_back(local_coords(basis, r));

  if (d == 1) {
    for (size_t i = 1; i < local.size(); ++i)
      if ((local[i][0] > 0) != (local[0][0] > 0))
        throw std::invalid_argument("cone is not pointed");
    c.rays = {rays[0]};
    return c;
  }

  std::vector<IntVec> normals = cone_facet_normals(local, d);
  if (rank_of_rows(normals) != d) throw std::invalid_argument("cone is not pointed");

  for (size_t i = 0; i < rays.size(); ++i) {
    std::vector<IntVec> tight;
    for (const IntVec& a : normals)
      if (dot(a, local[i]) == 0) tight.push_back(a);
    if (rank_of_rows(tight) == d - 1) c.rays.push_back(rays[i]);
  }
  std::sort(c.rays.begin(), c.rays.end(), lex_less);
  return c;
}

Cone cone_over_face(const LatticePolytope& p, const std::vector<size_t>& face) {
  if (!is_face(p, face)) throw std::invalid_argument("cone_over_face: not a face");
  std::vector<IntVec> gens;
  for (size_t i : face) gens.push_back(p.vertices()[i]);
  return make_cone(p.ambient_dim(), std::move(gens));
}

Cone dual_cone(const Cone& c) {
  if (c.dim() != c.ambient) throw std::invalid_argument("dual_cone: cone not full-dimensional");
  std::vector<IntVec> normals = cone_facet_normals(c.rays, c.ambient);
  return make_cone(c.ambient, std::move(normals));
}

bool cone_contains(const Cone& c, const IntVec& x) {
  if (is_zero(x)) return true;
  if (c.rays.empty()) return false;
  LocalCone lc = localize(c);
  // Membership requires x to lie in the span first.
  IntMat k = kernel_basis(IntMat(c.rays));
  for (size_t i = 0; i < k.rows(); ++i)
    if (dot(k.row(i), x) != 0) return false;
  return local_contains(lc, local_coords(lc.basis, x));
}

std::vector<IntVec> hilbert_basis(const Cone& c) {
  if (c.rays.empty()) return {};
  LocalCone lc = localize(c);
  size_t d = lc.d;

  // Every irreducible element lies in the zonotope of the extreme rays;
  // scan its bounding box and keep the cone's lattice points.
  IntVec lo(d, Int(0)), hi(d, Int(0));
  for (const IntVec& r : lc.rays)
    for (size_t j = 0; j < d; ++j) {
      if (r[j] < 0) lo[j] += r[j];
      if (r[j] > 0) hi[j] += r[j];
    }

  std::vector<IntVec> cand;
  IntVec x = lo;
  while (true) {
    if (!is_zero(x) && local_contains(lc, x)) cand.push_back(x);
    size_t j = 0;
    while (j < d) {
      if (x[j] < hi[j]) {
        ++x[j];
        for (size_t k = 0; k < j; ++k) x[k] = lo[k];
        break;
      }
      ++j;
    }
    if (j == d) break;
  }

  std::vector<IntVec> result;
  for (const IntVec& v : cand) {
    bool reducible = false;
    for (const IntVec& y : cand) {
      if (y == v) continue;
      IntVec z = vec_sub(v, y);
      if (!is_zero(z) && local_contains(lc, z)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) result.push_back(lift_coords(lc.basis, c.ambient, v));
  }
  std::sort(result.begin(), result.end(), lex_less);
  return result;
}

std::string QuotientType::str() const {
  std::ostringstream os;
  os << "1/" << r << '(';
  for (size_t i = 0; i < weights.size(); ++i) {
    if (i) os << ',';
    os << weights[i];
  }
  os << ')';
  return os.str();
}

QuotientType quotient_type(const Cone& c) {
  size_t n = c.ambient;
  if (c.rays.size() != n || c.dim() != n)
    throw std::invalid_argument("quotient_type: cone not simplicial and full-dimensional");
  IntMat r(c.rays);
  SmithResult snf = smith_normal_form(r);
  std::vector<Int> factors = snf.invariant_factors();
  Int order = 1;
  for (const Int& f : factors) order *= f;

  QuotientType qt;
  qt.r = order;
  qt.weights.assign(n, Int(0));
  if (order == 1) return qt;

  size_t big = 0;
  for (size_t i = 0; i < factors.size(); ++i)
    if (factors[i] > 1) ++big;
  if (big > 1)
    throw std::invalid_argument("quotient_type: non-cyclic quotient group unsupported");

  IntMat w = int_inverse(snf.v);
  IntVec g = w.row(n - 1);  // generator of the cyclic quotient
  RatMat rt(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) rt.at(i, j) = Rat(c.rays[j][i]);
  auto q = solve_unique(rt, to_rat(g));
  if (!q) throw std::logic_error("quotient_type: ray matrix not invertible");
  std::vector<Int> base(n);
  for (size_t i = 0; i < n; ++i) {
    Rat s = (*q)[i] * Rat(order);
    if (den(s) != 1) throw std::logic_error("quotient_type: non-integral weight");
    base[i] = ((num(s) % order) + order) % order;
  }

  // Canonical form: lexicographically least sorted weights over all
  // generator rescalings by units mod r.
  std::vector<Int> best;
  for (Int u = 1; u < order; ++u) {
    if (int_gcd(u, order) != 1) continue;
    std::vector<Int> wts(n);
    for (size_t i = 0; i < n; ++i) wts[i] = (base[i] * u) % order;
    std::sort(wts.begin(), wts.end());
    if (best.empty() || wts < best) best = wts;
  }
  qt.weights = best;
  return qt;
}

GorensteinData gorenstein_data(const Cone& c) {
  GorensteinData gd;
  size_t n = c.ambient, k = c.rays.size();
  if (k == 0) throw std::invalid_argument("gorenstein_data: empty cone");

  // Solve m * rays^T = 1 over Q with canonical free coordinates, reading
  // off the least multiple of the right side that admits an integer
  // solution from the forced entries of the echelonized system.
  IntMat b(k, n);
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < n; ++j) b.at(i, j) = c.rays[i][j];
  HermiteResult hr = hermite_normal_form(b.transpose());  // u * rays^T-cols = h
  const IntMat& h = hr.h;                                 // n x k staircase
  RatVec z(n, Rat(0));
  std::vector<size_t> pivot_col(n, k);
  {
    size_t col = 0;
    for (size_t i = 0; i < n; ++i) {
      while (col < k && h.at(i, col) == 0) ++col;
      if (col >= k) break;
      pivot_col[i] = col;
    }
  }
  for (size_t i = 0; i < n; ++i) {
    if (pivot_col[i] == k) continue;
    Rat acc = 1;
    for (size_t j = 0; j < i; ++j) acc -= z[j] * Rat(h.at(j, pivot_col[i]));
    z[i] = acc / Rat(h.at(i, pivot_col[i]));
  }
  for (size_t col = 0; col < k; ++col) {
    Rat acc = 0;
    for (size_t i = 0; i < n; ++i) acc += z[i] * Rat(h.at(i, col));
    if (acc != 1) {
      gd.q_gorenstein = false;
      return gd;
    }
  }
  gd.q_gorenstein = true;
  Int idx = 1;
  for (size_t i = 0; i < n; ++i) idx = int_lcm(idx, den(z[i]));
  gd.index = idx;
  gd.gorenstein = idx == 1;
  gd.degree.assign(n, Rat(0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) gd.degree[j] += z[i] * Rat(hr.u.at(i, j));
  if (gd.gorenstein) gd.int_degree = to_int(gd.degree);
  return gd;
}

IntVec ChartPresentation::relation_degree() const {
  IntVec deg(variables.empty() ? 0 : variables[0].degree.size(), Int(0));
  for (size_t i = 0; i < variables.size(); ++i)
    deg = vec_add(deg, vec_scale(variables[i].degree, relation_plus[i]));
  return deg;
}

size_t ChartPresentation::noninvertible_count() const {
  size_t k = 0;
  for (const auto& v : variables)
    if (!v.invertible) ++k;
  return k;
}

namespace {

std::string monomial_string(const std::vector<std::string>& names, const std::vector<Int>& exp) {
  std::ostringstream os;
  bool any = false;
  for (size_t i = 0; i < exp.size(); ++i) {
    if (exp[i] == 0) continue;
    any = true;
    os << names[i];
    if (exp[i] != 1) os << '^' << exp[i];
  }
  if (!any) os << '1';
  return os.str();
}

}  // namespace

std::string ChartPresentation::display() const {
  std::vector<std::string> names;
  for (const auto& v : variables) names.push_back(v.name);
  return monomial_string(names, relation_plus) + " - " + monomial_string(names, relation_minus);
}

std::string ChartPresentation::type_string() const {
  // Normalized letters: the side with more variables first, ties broken
  // towards the larger maximal exponent.
  std::vector<Int> a, b;
  for (size_t i = 0; i < variables.size(); ++i) {
    if (relation_plus[i] > 0) a.push_back(relation_plus[i]);
    if (relation_minus[i] > 0) b.push_back(relation_minus[i]);
  }
  std::sort(a.rbegin(), a.rend());
  std::sort(b.rbegin(), b.rend());
  auto key = [](const std::vector<Int>& side) {
    return std::make_pair(side.size(), side.empty() ? Int(0) : side[0]);
  };
  if (key(b) > key(a)) std::swap(a, b);
  static const char* letters[] = {"x", "y", "z", "w", "u", "v", "s", "t"};
  std::ostringstream os;
  size_t li = 0;
  for (const Int& e : a) {
    os << (li < 8 ? letters[li] : "?");
    ++li;
    if (e != 1) os << '^' << e;
  }
  os << " - ";
  for (const Int& e : b) {
    os << (li < 8 ? letters[li] : "?");
    ++li;
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

ChartPresentation binomial_presentation(const Cone& c,
                                        const std::vector<IntVec>& invertible_directions) {
  std::string chart_id = "cone" + [&] {
    std::string s;
    for (const IntVec& r : c.rays) s += to_string(r);
    return s;
  }();
  size_t n = c.ambient;
  if (c.rays.empty()) throw UnsupportedChartError(chart_id, "presentation unsupported: empty cone");

  // Lineality of the dual cone: characters invertible on the chart.
  IntMat lin = kernel_basis(IntMat(c.rays));
  size_t ell = lin.rows();
  if (!invertible_directions.empty()) {
    // Caller-specified unit directions must match the dual lineality.
    if (invertible_directions.size() != ell)
      throw UnsupportedChartError(chart_id, "invertible directions do not match dual lineality");
    for (const IntVec& v : invertible_directions)
      if (!is_zero(IntMat(c.rays).mul(v)))
        throw UnsupportedChartError(chart_id, "invertible direction not orthogonal to the cone");
  }

  std::vector<IntVec> hb_down;   // Hilbert basis downstairs
  std::vector<IntVec> lifts;     // corresponding degrees in M
  std::vector<IntVec> unit_dirs; // invertible variable degrees
  size_t d = n - ell;

  if (ell == 0) {
    hb_down = hilbert_basis(dual_cone(c));
    lifts = hb_down;
  } else {
    SmithResult snf = smith_normal_form(lin.transpose());  // u * lin^T * v = [I; 0]
    for (const Int& f : snf.invariant_factors())
      if (f != 1) throw std::logic_error("dual lineality basis not saturated");
    IntMat uinv = int_inverse(snf.u);
    IntMat uinv_t = uinv.transpose();
    std::vector<IntVec> proj_rays;
    for (const IntVec& r : c.rays) {
      IntVec w = uinv_t.mul(r);
      proj_rays.push_back(IntVec(w.begin() + ell, w.end()));
    }
    Cone image = make_cone(d, proj_rays);
    if (image.dim() != d)
      throw UnsupportedChartError(chart_id, "projected cone not full-dimensional");
    hb_down = hilbert_basis(dual_cone(image));
    for (const IntVec& hv : hb_down) {
      IntVec padded(n, Int(0));
      for (size_t i = 0; i < d; ++i) padded[ell + i] = hv[i];
      lifts.push_back(uinv.mul(padded));
    }
    for (size_t i = 0; i < ell; ++i) unit_dirs.push_back(lin.row(i));
  }

  if (hb_down.size() != d + 1)
    throw UnsupportedChartError(chart_id, "presentation unsupported: chart is not a hypersurface");

  // The unique relation among the semigroup generators downstairs.
  IntMat degmat(hb_down);
  IntMat ker = kernel_basis(degmat.transpose());
  if (ker.rows() != 1)
    throw UnsupportedChartError(chart_id, "presentation unsupported: no unique binomial relation");
  std::vector<Int> u = ker.row(0);
  {
    size_t i0 = 0;
    while (i0 < u.size() && u[i0] == 0) ++i0;
    if (i0 == u.size()) throw std::logic_error("zero relation vector");
    if (u[i0] < 0)
      for (Int& x : u) x = -x;
  }

  // Adjust lifts by unit directions so the two relation monomials carry
  // the same degree in M, not merely modulo the lineality.
  if (ell > 0) {
    IntVec delta(n, Int(0));
    for (size_t i = 0; i < lifts.size(); ++i) delta = vec_add(delta, vec_scale(lifts[i], u[i]));
    if (!is_zero(delta)) {
      std::vector<Int> coeff;
      Int g = ext_gcd_vec(u, coeff);
      if (g != 1) throw std::logic_error("relation vector not primitive");
      for (size_t i = 0; i < lifts.size(); ++i)
        lifts[i] = vec_sub(lifts[i], vec_scale(delta, coeff[i]));
    }
  }

  // Canonical variable order: non-invertible by degree, then units.
  std::vector<size_t> order(lifts.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return lex_less(lifts[a], lifts[b]); });

  static const char* letters[] = {"x", "y", "z", "w", "u", "v", "s", "t", "p", "q"};
  ChartPresentation pres;
  size_t li = 0;
  for (size_t i : order) {
    ChartVariable var;
    var.name = li < 10 ? letters[li] : "g" + std::to_string(li);
    ++li;
    var.degree = lifts[i];
    var.invertible = false;
    pres.variables.push_back(var);
    pres.relation_plus.push_back(u[i] > 0 ? u[i] : Int(0));
    pres.relation_minus.push_back(u[i] < 0 ? -u[i] : Int(0));
  }
  for (const IntVec& l : unit_dirs) {
    ChartVariable var;
    var.name = li < 10 ? letters[li] : "g" + std::to_string(li);
    ++li;
    var.degree = l;
    var.invertible = true;
    pres.variables.push_back(var);
    pres.relation_plus.push_back(0);
    pres.relation_minus.push_back(0);
  }

  IntVec dplus(n, Int(0)), dminus(n, Int(0));
  for (size_t i = 0; i < pres.variables.size(); ++i) {
    dplus = vec_add(dplus, vec_scale(pres.variables[i].degree, pres.relation_plus[i]));
    dminus = vec_add(dminus, vec_scale(pres.variables[i].degree, pres.relation_minus[i]));
  }
  if (dplus != dminus) throw std::logic_error("binomial relation degrees differ");
  return pres;
}

bool has_isolated_singularity(const Cone& c) {
  size_t n = c.rays.size();
  // Every proper face of a simplicial cone is spanned by a ray subset.
  for (size_t sz = 2; sz < n; ++sz) {
    std::vector<size_t> comb(sz);
    for (size_t i = 0; i < sz; ++i) comb[i] = i;
    while (true) {
      std::vector<IntVec> sub;
      for (size_t i : comb) sub.push_back(c.rays[i]);
      SmithResult snf = smith_normal_form(IntMat(sub));
      for (const Int& f : snf.invariant_factors())
        if (f != 1) return false;
      size_t i = sz;
      bool done = false;
      while (i > 0) {
        --i;
        if (comb[i] + (sz - i) < n) {
          ++comb[i];
          for (size_t j = i + 1; j < sz; ++j) comb[j] = comb[j - 1] + 1;
          break;
        }
        if (i == 0) done = true;
      }
      if (done) break;
    }
  }
  return true;
}

bool is_terminal_cone(const Cone& c) {
  std::vector<IntVec> pts = c.rays;
  pts.push_back(IntVec(c.ambient, Int(0)));
  LatticePolytope simplex = hull(pts);
  std::vector<IntVec> lp = lattice_points(simplex.rational());
  std::set<IntVec> expected(pts.begin(), pts.end());
  for (const IntVec& x : lp)
    if (!expected.count(x)) return false;
  return true;
}

namespace {

std::string face_id(const std::vector<size_t>& face) {
  std::ostringstream os;
  os << "U[";
  for (size_t i = 0; i < face.size(); ++i) {
    if (i) os << ',';
    os << 'v' << face[i];
  }
  os << ']';
  return os.str();
}

}  // namespace

ChartAtlas chart_atlas(const LatticePolytope& p) {
  FanoReport fr = fano_classify(p);
  if (!fr.fano || !fr.canonical)
    throw std::invalid_argument("chart_atlas: polytope is not a canonical Fano polytope");

  ChartAtlas atlas;
  atlas.polytope = p;
  atlas.facet_list = facets(p);
  size_t n = p.ambient_dim();

  for (const Facet& f : atlas.facet_list) {
    ChartReport rep;
    rep.face = f.vertex_indices;
    rep.id = face_id(rep.face);
    rep.cone = cone_over_face(p, rep.face);

    GorensteinData gd = gorenstein_data(rep.cone);
    rep.gorenstein = gd.gorenstein;
    rep.gorenstein_index = gd.index;
    rep.gorenstein_degree = gd.int_degree;
    rep.gorenstein_degree_rat = gd.degree;

    bool simplicial = rep.cone.rays.size() == n;
    if (simplicial) rep.quotient = quotient_type(rep.cone);
    rep.smooth = simplicial && rep.quotient->smooth();

    rep.hilbert_basis_size = hilbert_basis(dual_cone(rep.cone)).size();
    if (rep.hilbert_basis_size == n + 1) {
      try {
        rep.presentation = binomial_presentation(rep.cone);
      } catch (const UnsupportedChartError&) {
      }
    }
    rep.qg_rigid = rep.smooth || (simplicial && !rep.cone.rays.empty() &&
                                  has_isolated_singularity(rep.cone) &&
                                  is_terminal_cone(rep.cone));

    // Edge lengths of the facet polygon (3-dimensional ambient case).
    if (n == 3) {
      std::vector<RatVec> fverts;
      for (size_t i : rep.face) fverts.push_back(to_rat(p.vertices()[i]));
      RationalPolytope poly = RationalPolytope::from_points(n, fverts);
      for (auto [a, b] : edges(poly)) {
        RatVec diff(n);
        for (size_t j = 0; j < n; ++j) diff[j] = poly.vertices()[b][j] - poly.vertices()[a][j];
        rep.polygon_edge_lengths.push_back(content(to_int(diff)));
      }
      std::sort(rep.polygon_edge_lengths.begin(), rep.polygon_edge_lengths.end());
    }
    atlas.facet_charts.push_back(std::move(rep));
  }

  // Double intersections: singular faces shared by two facet charts.
  for (size_t i = 0; i < atlas.facet_list.size(); ++i)
    for (size_t j = i + 1; j < atlas.facet_list.size(); ++j) {
      std::vector<size_t> common;
      std::set_intersection(atlas.facet_list[i].vertex_indices.begin(),
                            atlas.facet_list[i].vertex_indices.end(),
                            atlas.facet_list[j].vertex_indices.begin(),
                            atlas.facet_list[j].vertex_indices.end(), std::back_inserter(common));
      if (common.size() < 2) continue;  // vertex or empty: smooth chart
      Cone edge_cone = cone_over_face(p, common);
      SmithResult snf = smith_normal_form(IntMat(edge_cone.rays));
      bool singular = false;
      for (const Int& ff : snf.invariant_factors())
        if (ff != 1) singular = true;
      if (!singular) continue;

      ChartReport rep;
      rep.face = common;
      rep.id = face_id(common);
      rep.cone = edge_cone;
      GorensteinData gd = gorenstein_data(edge_cone);
      rep.gorenstein = gd.gorenstein;
      rep.gorenstein_index = gd.index;
      rep.gorenstein_degree = gd.int_degree;
      rep.gorenstein_degree_rat = gd.degree;
      rep.smooth = false;
      try {
        rep.presentation = binomial_presentation(edge_cone);
        rep.hilbert_basis_size = rep.presentation->noninvertible_count();
      } catch (const UnsupportedChartError&) {
      }
      atlas.singular_pairs.emplace_back(i, j);
      atlas.intersection_charts.push_back(std::move(rep));
    }
  return atlas;
}

}  // namespace fanohull
