#include "fanohull/hull.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace fanohull {

bool HullPresentation::in_ideal(const std::vector<Int>& e) const {
  for (const auto& g : ideal) {
    bool div = true;
    for (size_t i = 0; i < e.size(); ++i)
      if (g[i] > e[i]) {
        div = false;
        break;
      }
    if (div) return true;
  }
  return false;
}

std::string HullPresentation::ideal_string() const {
  std::ostringstream os;
  os << '(';
  for (size_t k = 0; k < ideal.size(); ++k) {
    if (k) os << ", ";
    bool any = false;
    for (size_t i = 0; i < ideal[k].size(); ++i) {
      if (ideal[k][i] == 0) continue;
      any = true;
      os << vars[i].name;
      if (ideal[k][i] != 1) os << '^' << ideal[k][i];
    }
    if (!any) os << '1';
  }
  os << ')';
  return os.str();
}

std::optional<LocalHull> local_hull_registry(const ChartReport& report) {
  // Single entry: the cone over a pentagon with unit edges.
  if (!report.gorenstein || !report.gorenstein_degree) return std::nullopt;
  if (report.cone.rays.size() != 5) return std::nullopt;
  if (report.polygon_edge_lengths != std::vector<Int>(5, Int(1))) return std::nullopt;
  LocalHull lh;
  lh.var_names = {"u", "v"};
  lh.ideal = {{2, 0}, {1, 1}};
  IntVec deg = vec_neg(*report.gorenstein_degree);
  lh.degrees = {deg, deg};
  return lh;
}

HullPresentation assemble_hull(std::vector<IntVec> global_weights,
                               const std::vector<ObstructedChart>& obstructed,
                               const VanishingAssumptions& flags) {
  if (!flags.h1_t1_zero)
    throw std::invalid_argument(
        "assemble_hull refused: first Cech cohomology of the graded module is not known to vanish");
  if (!flags.h2_t0_zero)
    throw std::invalid_argument(
        "assemble_hull refused: vanishing of second cohomology of the tangent sheaf must be "
        "declared");

  // Local degrees of distinct obstructed charts must not collide, else
  // matching by degree is ambiguous.
  for (size_t a = 0; a < obstructed.size(); ++a)
    for (size_t b = a + 1; b < obstructed.size(); ++b)
      for (const IntVec& da : obstructed[a].hull.degrees)
        for (const IntVec& db : obstructed[b].hull.degrees)
          if (da == db)
            throw std::invalid_argument(
                "assemble_hull: obstructed charts share a degree; explicit matching required");

  HullPresentation h;
  std::vector<IntVec> pool = global_weights;

  auto take = [&](const IntVec& deg) {
    auto it = std::find(pool.begin(), pool.end(), deg);
    if (it == pool.end())
      throw std::invalid_argument("assemble_hull: local degree missing from global weights");
    pool.erase(it);
  };

  std::vector<std::vector<size_t>> local_to_global;
  for (const ObstructedChart& oc : obstructed) {
    std::vector<size_t> idx;
    for (const IntVec& deg : oc.hull.degrees) {
      take(deg);
      idx.push_back(h.vars.size());
      h.vars.push_back({"", deg, 1});
    }
    local_to_global.push_back(idx);
  }
  canonical_weight_sort(pool);
  for (const IntVec& deg : pool) h.vars.push_back({"", deg, 1});
  for (size_t i = 0; i < h.vars.size(); ++i) h.vars[i].name = "t" + std::to_string(i + 1);

  for (size_t c = 0; c < obstructed.size(); ++c)
    for (const auto& lg : obstructed[c].hull.ideal) {
      std::vector<Int> e(h.vars.size(), Int(0));
      for (size_t i = 0; i < lg.size(); ++i) e[local_to_global[c][i]] = lg[i];
      h.ideal.push_back(e);
    }
  return h;
}

HullPresentation hull_from_global_t1(const GlobalT1& g) {
  std::vector<ObstructedChart> obstructed;
  for (size_t i = 0; i < g.atlas.facet_charts.size(); ++i) {
    const ChartModule& cm = g.facet_modules[i];
    if (cm.rule != T1Rule::PolygonCone || cm.module.is_zero()) continue;
    auto lh = local_hull_registry(g.atlas.facet_charts[i]);
    if (!lh)
      throw UnsupportedChartError(g.atlas.facet_charts[i].id,
                                  "unsupported chart: no local hull registry entry");
    obstructed.push_back({g.atlas.facet_charts[i].id, *lh});
  }
  VanishingAssumptions flags;
  flags.h1_t1_zero = g.result.h1.is_zero();
  flags.h2_t0_zero = true;  // declared assumption for toric Fano threefolds
  return assemble_hull(g.weight_list, obstructed, flags);
}

namespace {

std::vector<size_t> compose(const std::vector<size_t>& f, const std::vector<size_t>& g) {
  // (f after g): variable i goes to f[g[i]].
  std::vector<size_t> r(f.size());
  for (size_t i = 0; i < f.size(); ++i) r[i] = f[g[i]];
  return r;
}

std::vector<Int> permute_exponent(const std::vector<Int>& e, const std::vector<size_t>& perm) {
  std::vector<Int> r(e.size(), Int(0));
  for (size_t i = 0; i < e.size(); ++i) r[perm[i]] = e[i];
  return r;
}

IntMat contragredient(const IntMat& g) {
  size_t n = g.rows();
  RatMat a(g);
  IntMat inv(n, n);
  for (size_t c = 0; c < n; ++c) {
    RatVec e(n, Rat(0));
    e[c] = 1;
    auto x = solve_unique(a, e);
    if (!x || !is_integral(*x)) throw std::invalid_argument("group matrix is not unimodular");
    IntVec xi = to_int(*x);
    for (size_t i = 0; i < n; ++i) inv.at(i, c) = xi[i];
  }
  return inv.transpose();
}

}  // namespace

GroupAction build_group_action(
    const HullPresentation& hull,
    const std::vector<std::pair<IntMat, std::vector<size_t>>>& generators) {
  size_t n = hull.nvars();
  for (const auto& [mat, perm] : generators) {
    if (perm.size() != n) throw std::invalid_argument("group action: permutation size mismatch");
    std::vector<bool> seen(n, false);
    for (size_t i : perm) {
      if (i >= n || seen[i]) throw std::invalid_argument("group action: not a permutation");
      seen[i] = true;
    }
    IntMat dual = contragredient(mat);
    for (size_t i = 0; i < n; ++i)
      if (hull.vars[perm[i]].weight != dual.mul(hull.vars[i].weight))
        throw std::invalid_argument("group action: permutation incompatible with torus weights");
    for (const auto& gen : hull.ideal)
      if (!hull.in_ideal(permute_exponent(gen, perm)))
        throw std::invalid_argument("group action: ideal not preserved");
  }

  GroupAction act;
  std::vector<size_t> id(n);
  for (size_t i = 0; i < n; ++i) id[i] = i;
  std::set<std::vector<size_t>> seen;
  seen.insert(id);
  act.perms.push_back(id);
  act.matrices.push_back(IntMat::identity(generators.empty() ? 0 : generators[0].first.rows()));
  if (generators.empty()) return act;

  size_t cursor = 0;
  while (cursor < act.perms.size()) {
    std::vector<size_t> base = act.perms[cursor];
    IntMat base_mat = act.matrices[cursor];
    ++cursor;
    for (const auto& [mat, perm] : generators) {
      std::vector<size_t> comp = compose(perm, base);
      if (seen.insert(comp).second) {
        act.perms.push_back(comp);
        act.matrices.push_back(mat.mul(base_mat));
        if (act.perms.size() > 40320)
          throw std::invalid_argument("group action: group too large");
      }
    }
  }
  return act;
}

GroupAction action_from_automorphisms(const HullPresentation& hull, const MatrixGroup& aut) {
  std::vector<std::pair<IntMat, std::vector<size_t>>> gens;
  size_t n = hull.nvars();
  for (const IntMat& g : aut.elements) {
    IntMat dual = contragredient(g);
    // Weight blocks in variable order; match order-preservingly.
    std::vector<size_t> perm(n, n);
    std::vector<bool> used(n, false);
    for (size_t i = 0; i < n; ++i) {
      IntVec target = dual.mul(hull.vars[i].weight);
      size_t slot = n;
      for (size_t j = 0; j < n; ++j)
        if (!used[j] && hull.vars[j].weight == target) {
          slot = j;
          break;
        }
      if (slot == n)
        throw std::invalid_argument("automorphism does not permute the weight multiset");
      used[slot] = true;
      perm[i] = slot;
    }
    gens.push_back({g, perm});
  }
  return build_group_action(hull, gens);
}

std::vector<std::vector<Int>> torus_invariant_basis(const HullPresentation& hull, int t_degree) {
  std::vector<std::vector<Int>> out;
  size_t n = hull.nvars();
  if (t_degree < 0) return out;
  std::vector<Int> e(n, Int(0));
  // Enumerate weighted-degree compositions recursively.
  std::function<void(size_t, int)> rec = [&](size_t i, int remaining) {
    if (i == n) {
      if (remaining != 0) return;
      if (hull.in_ideal(e)) return;
      IntVec w(hull.vars.empty() ? 0 : hull.vars[0].weight.size(), Int(0));
      for (size_t k = 0; k < n; ++k) w = vec_add(w, vec_scale(hull.vars[k].weight, e[k]));
      if (!is_zero(w)) return;
      out.push_back(e);
      return;
    }
    int step = hull.vars[i].tdeg;
    for (int c = 0; c * step <= remaining; ++c) {
      e[i] = c;
      rec(i + 1, remaining - c * step);
    }
    e[i] = 0;
  };
  rec(0, t_degree);
  std::sort(out.begin(), out.end(), [](const std::vector<Int>& a, const std::vector<Int>& b) {
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
  });
  return out;
}

std::vector<Int> invariant_hilbert_function(const HullPresentation& hull, const GroupAction& action,
                                            int max_degree) {
  std::vector<Int> seq;
  for (int d = 0; d <= max_degree; ++d) {
    std::vector<std::vector<Int>> basis = torus_invariant_basis(hull, d);
    std::map<std::vector<Int>, size_t> index;
    for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
    size_t m = basis.size();
    if (m == 0) {
      seq.push_back(0);
      continue;
    }
    // Averaging operator of the permutation action; its exact rank is
    // the invariant dimension.
    RatMat avg(m, m);
    Rat inv_order = Rat(1) / Rat(Int(action.order()));
    for (const auto& perm : action.perms)
      for (size_t c = 0; c < m; ++c) {
        auto img = permute_exponent(basis[c], perm);
        auto it = index.find(img);
        if (it == index.end())
          throw std::logic_error("group action does not preserve the invariant basis");
        avg.at(it->second, c) += inv_order;
      }
    seq.push_back(Int(avg.rank()));
  }
  return seq;
}

std::vector<Int> hilbert_function_of_presentation(const HullPresentation& pres, int max_degree) {
  std::vector<Int> seq;
  for (int d = 0; d <= max_degree; ++d) {
    Int count = 0;
    size_t n = pres.nvars();
    std::vector<Int> e(n, Int(0));
    std::function<void(size_t, int)> rec = [&](size_t i, int remaining) {
      if (i == n) {
        if (remaining == 0 && !pres.in_ideal(e)) ++count;
        return;
      }
      int step = pres.vars[i].tdeg;
      for (int c = 0; c * step <= remaining; ++c) {
        e[i] = c;
        rec(i + 1, remaining - c * step);
      }
      e[i] = 0;
    };
    rec(0, d);
    seq.push_back(count);
  }
  return seq;
}

InvariantCertificate verify_invariant_presentation(const HullPresentation& hull,
                                                   const GroupAction& action,
                                                   const HullPresentation& claimed,
                                                   int max_degree) {
  InvariantCertificate cert;
  cert.invariant_sequence = invariant_hilbert_function(hull, action, max_degree);
  cert.presentation_sequence = hilbert_function_of_presentation(claimed, max_degree);
  cert.match = cert.invariant_sequence == cert.presentation_sequence;
  return cert;
}

std::vector<std::pair<int, size_t>> invariant_generators(const HullPresentation& hull,
                                                         const GroupAction& action,
                                                         int max_degree) {
  using Poly = std::map<std::vector<Int>, Rat>;

  // Orbit-sum bases of the invariant spaces per degree.
  std::vector<std::vector<Poly>> inv_basis(max_degree + 1);
  for (int d = 0; d <= max_degree; ++d) {
    std::vector<std::vector<Int>> basis = torus_invariant_basis(hull, d);
    std::set<std::vector<Int>> done;
    for (const auto& mono : basis) {
      if (done.count(mono)) continue;
      Poly orbit_sum;
      for (const auto& perm : action.perms) {
        auto img = permute_exponent(mono, perm);
        done.insert(img);
        orbit_sum[img] += 1;
      }
      inv_basis[d].push_back(orbit_sum);
    }
  }

  std::vector<std::pair<int, size_t>> out;
  for (int d = 1; d <= max_degree; ++d) {
    std::vector<std::vector<Int>> basis = torus_invariant_basis(hull, d);
    std::map<std::vector<Int>, size_t> index;
    for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;

    std::vector<RatVec> products;
    for (int e = 1; e <= d - 1; ++e)
      for (const Poly& p : inv_basis[e])
        for (const Poly& q : inv_basis[d - e]) {
          RatVec vec(basis.size(), Rat(0));
          for (const auto& [pe, pc] : p)
            for (const auto& [qe, qc] : q) {
              std::vector<Int> sum(pe.size());
              for (size_t i = 0; i < pe.size(); ++i) sum[i] = pe[i] + qe[i];
              if (hull.in_ideal(sum)) continue;
              vec[index.at(sum)] += pc * qc;
            }
          products.push_back(vec);
        }
    size_t prod_rank = 0;
    if (!products.empty() && !basis.empty()) {
      RatMat m(products.size(), basis.size());
      for (size_t i = 0; i < products.size(); ++i)
        for (size_t j = 0; j < basis.size(); ++j) m.at(i, j) = products[i][j];
      prod_rank = m.rank();
    }
    size_t inv_dim = inv_basis[d].size();
    if (inv_dim > prod_rank) out.push_back({d, inv_dim - prod_rank});
  }
  return out;
}

}  // namespace fanohull
