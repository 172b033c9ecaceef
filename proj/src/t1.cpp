#include "fanohull/t1.hpp"

#include <algorithm>
#include <sstream>

namespace fanohull {

namespace {

std::string exp_string(const std::vector<Int>& e) {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < e.size(); ++i) {
    if (i) os << ',';
    os << e[i];
  }
  os << ']';
  return os.str();
}

}  // namespace

RayFamilyModule t1_binomial_hypersurface(const ChartPresentation& pres,
                                         const std::string& chart_id) {
  std::vector<size_t> reg, inv;
  for (size_t i = 0; i < pres.variables.size(); ++i)
    (pres.variables[i].invertible ? inv : reg).push_back(i);
  if (inv.size() >= 2)
    throw UnsupportedChartError(chart_id, "unsupported chart: two or more invertible directions");
  for (size_t i : inv)
    if (pres.relation_plus[i] != 0 || pres.relation_minus[i] != 0)
      throw UnsupportedChartError(chart_id, "unsupported chart: unit appears in the relation");

  size_t k = reg.size();
  size_t ambient = pres.variables.empty() ? 0 : pres.variables[0].degree.size();

  std::vector<Int> uplus(k), uminus(k);
  for (size_t a = 0; a < k; ++a) {
    uplus[a] = pres.relation_plus[reg[a]];
    uminus[a] = pres.relation_minus[reg[a]];
  }

  // Jacobian ideal: for disjoint-support binomials every partial
  // derivative is a single monomial, so the ideal is monomial once the
  // relation itself reduces, which it does by divisibility.
  std::vector<std::vector<Int>> gens;
  for (size_t a = 0; a < k; ++a) {
    if (uplus[a] > 0) {
      std::vector<Int> g = uplus;
      --g[a];
      gens.push_back(g);
    }
    if (uminus[a] > 0) {
      std::vector<Int> g = uminus;
      --g[a];
      gens.push_back(g);
    }
  }
  if (gens.empty()) throw UnsupportedChartError(chart_id, "unsupported chart: empty relation");
  auto divides = [&](const std::vector<Int>& g, const std::vector<Int>& w) {
    for (size_t a = 0; a < k; ++a)
      if (g[a] > w[a]) return false;
    return true;
  };
  // Ideal membership of the relation monomials themselves.
  auto in_ideal = [&](const std::vector<Int>& w) {
    for (const auto& g : gens)
      if (divides(g, w)) return true;
    return false;
  };
  if (!in_ideal(uplus) || !in_ideal(uminus))
    throw UnsupportedChartError(chart_id, "unsupported chart: ideal not monomializable");

  IntVec deg_f(ambient, Int(0));
  for (size_t a = 0; a < k; ++a)
    deg_f = vec_add(deg_f, vec_scale(pres.variables[reg[a]].degree, uplus[a]));

  std::vector<Int> bound(k, Int(0));
  for (const auto& g : gens)
    for (size_t a = 0; a < k; ++a) bound[a] = std::max(bound[a], g[a]);

  RayFamilyModule mod;
  mod.ambient = ambient;

  // Standard monomials depend only on the exponent vector truncated at
  // the generator bounds; walk the truncation box and classify each
  // profile as a sporadic degree or the start of a ray.
  std::vector<Int> w(k, Int(0));
  while (true) {
    if (!in_ideal(w)) {
      std::vector<size_t> free_dirs;
      for (size_t a = 0; a < k; ++a)
        if (w[a] == bound[a]) free_dirs.push_back(a);
      if (free_dirs.size() + inv.size() >= 2)
        throw UnsupportedChartError(chart_id, "unsupported chart: module is not a ray family");

      IntVec deg = vec_neg(deg_f);
      for (size_t a = 0; a < k; ++a)
        deg = vec_add(deg, vec_scale(pres.variables[reg[a]].degree, w[a]));
      std::string label = chart_id + " monomial " + exp_string(w);

      if (!free_dirs.empty()) {
        const IntVec& dir = pres.variables[reg[free_dirs[0]]].degree;
        mod.rays.push_back({deg, primitive(dir), false, label});
        if (primitive(dir) != dir)
          throw UnsupportedChartError(chart_id, "unsupported chart: non-primitive ray step");
      } else if (!inv.empty()) {
        IntVec dir = pres.variables[inv[0]].degree;
        mod.rays.push_back({deg, primitive(dir), true, label});
        if (primitive(dir) != dir)
          throw UnsupportedChartError(chart_id, "unsupported chart: non-primitive ray step");
      } else {
        mod.sporadic.push_back({deg, 1, label});
      }
    }
    size_t a = 0;
    while (a < k) {
      if (w[a] < bound[a]) {
        ++w[a];
        for (size_t b = 0; b < a; ++b) w[b] = 0;
        break;
      }
      ++a;
    }
    if (a == k) break;
  }
  return mod.normalized();
}

RayFamilyModule t1_polygon_cone(const Cone& c, const std::string& chart_id) {
  if (c.ambient != 3 || c.dim() != 3)
    throw UnsupportedChartError(chart_id,
                                "unsupported: general polygon hull formula out of scope");
  GorensteinData gd = gorenstein_data(c);
  if (!gd.gorenstein)
    throw UnsupportedChartError(chart_id,
                                "unsupported: general polygon hull formula out of scope");
  size_t k = c.rays.size();
  if (k < 3) throw UnsupportedChartError(chart_id, "unsupported: not a cone over a polygon");

  // Polygon edges are the 2-dimensional faces of the cone; each must
  // have lattice length 1.
  Cone dual = dual_cone(c);
  for (const IntVec& normal : dual.rays) {
    std::vector<const IntVec*> tight;
    for (const IntVec& r : c.rays)
      if (dot(normal, r) == 0) tight.push_back(&r);
    if (tight.size() != 2)
      throw UnsupportedChartError(chart_id, "unsupported: non-polygonal cone facet");
    Int len = content(vec_sub(*tight[1], *tight[0]));
    if (len != 1)
      throw UnsupportedChartError(chart_id,
                                  "unsupported: general polygon hull formula out of scope");
  }

  RayFamilyModule mod;
  mod.ambient = c.ambient;
  if (k > 3) {
    IntVec deg = vec_neg(*gd.int_degree);
    mod.sporadic.push_back({deg, static_cast<int>(k - 3), chart_id + " vertex count rule"});
  }
  return mod.normalized();
}

RayFamilyModule t1_qg_quotient(const Cone& c, const std::string& chart_id) {
  if (c.rays.size() != c.ambient || c.dim() != c.ambient)
    throw UnsupportedChartError(chart_id, "unsupported: not a simplicial full-dimensional cone");
  if (!has_isolated_singularity(c))
    throw UnsupportedChartError(chart_id, "unsupported: singularity is not isolated");
  if (!is_terminal_cone(c))
    throw UnsupportedChartError(chart_id, "unsupported: quotient is not terminal");
  RayFamilyModule mod;
  mod.ambient = c.ambient;
  return mod;
}

ChartModule t1_of_chart(const ChartReport& report) {
  ChartModule cm;
  if (report.smooth) {
    cm.rule = T1Rule::Smooth;
    cm.module.ambient = report.cone.ambient;
    return cm;
  }
  if (report.qg_rigid) {
    cm.rule = T1Rule::RigidQuotient;
    cm.module = t1_qg_quotient(report.cone, report.id);
    return cm;
  }
  if (report.presentation) {
    cm.rule = T1Rule::Hypersurface;
    cm.module = t1_binomial_hypersurface(*report.presentation, report.id);
    return cm;
  }
  cm.rule = T1Rule::PolygonCone;
  cm.module = t1_polygon_cone(report.cone, report.id);  // throws when inapplicable
  return cm;
}

GlobalT1 global_t1(const ChartAtlas& atlas) {
  GlobalT1 g;
  g.atlas = atlas;
  g.cech.ambient = atlas.polytope.ambient_dim();

  for (const ChartReport& rep : atlas.facet_charts) {
    ChartModule cm = t1_of_chart(rep);
    g.facet_modules.push_back(cm);
    g.cech.charts.push_back({rep.id, cm.module});
  }

  for (size_t e = 0; e < atlas.singular_pairs.size(); ++e) {
    const ChartReport& rep = atlas.intersection_charts[e];
    if (!rep.presentation)
      throw UnsupportedChartError(rep.id, "unsupported chart: intersection not a hypersurface");
    RayFamilyModule m = t1_binomial_hypersurface(*rep.presentation, rep.id);
    auto [i, j] = atlas.singular_pairs[e];
    g.cech.intersections.push_back({i, j, m});
    size_t t_idx = g.cech.intersections.size() - 1;
    g.cech.restrictions[{i, t_idx}] = restriction(g.cech.charts[i].second, m);
    g.cech.restrictions[{j, t_idx}] = restriction(g.cech.charts[j].second, m);
  }

  g.result = cech_h0_h1(g.cech);

  if (!g.result.h0.rays.empty())
    throw UnsupportedChartError("global", "global sections are infinite-dimensional");
  g.weight_list = g.result.h0.degree_multiset();
  canonical_weight_sort(g.weight_list);
  return g;
}

GlobalT1 global_t1(const LatticePolytope& p) { return global_t1(chart_atlas(p)); }

}  // namespace fanohull
