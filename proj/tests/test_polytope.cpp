#include <doctest.h>

#include "test_helpers.hpp"

using namespace fanohull;
using namespace fanohull::testutil;

TEST_CASE("hull of the ten pentagon points") {
  LatticePolytope p = fixtures::paper_p();
  CHECK(p.vertices().size() == 10);
  CHECK(p.is_full_dim());
  CHECK(vertex_set(p).count(pa()));
  CHECK(vertex_set(p).count(vec_neg(pe())));
}

TEST_CASE("hull discards interior points") {
  std::vector<IntVec> pts;
  for (int a : {-1, 1})
    for (int b : {-1, 1})
      for (int c : {-1, 1}) pts.push_back({a, b, c});
  pts.push_back({0, 0, 0});
  LatticePolytope p = hull(pts);
  CHECK(p.vertices().size() == 8);
}

TEST_CASE("hull of a single point") {
  LatticePolytope p = hull({{3, -2, 5}});
  CHECK(p.vertices().size() == 1);
  CHECK(p.dim() == 0);
}

TEST_CASE("facets of the pentagon polytope") {
  LatticePolytope p = fixtures::paper_p();
  std::vector<Facet> fs = facets(p);
  CHECK(fs.size() == 10);

  const Facet& pentagon = facet_with_vertices(p, fs, {pa(), pb(), pc(), pd(), pe()});
  CHECK(pentagon.normal == IntVec{0, 0, 1});
  CHECK(pentagon.level == 1);

  const Facet& rect = facet_with_vertices(p, fs, {pa(), pe(), vec_neg(pc()), vec_neg(pd())});
  CHECK(rect.vertex_indices.size() == 4);
}

TEST_CASE("facets of the cube") {
  std::vector<Facet> fs = facets(fixtures::cube());
  CHECK(fs.size() == 6);
  for (const Facet& f : fs) {
    CHECK(f.level == 1);
    Int nonzero = 0;
    for (const Int& x : f.normal) nonzero += abs(x);
    CHECK(nonzero == 1);
  }
}

TEST_CASE("polar of the pentagon polytope") {
  RationalPolytope q = polar(fixtures::paper_p());
  CHECK(q.vertices().size() == 10);
  std::set<RatVec> vs(q.vertices().begin(), q.vertices().end());
  CHECK(vs.count(rat_point({"2/3", "2/3", "-1/3"})));
  CHECK(vs.count(rat_point({"-2/3", "-2/3", "1/3"})));
  CHECK(vs.count(rat_point({"1", "0", "0"})));
  CHECK(vs.count(rat_point({"0", "0", "1"})));
  CHECK(vs.count(rat_point({"1", "-1", "0"})));
}

TEST_CASE("polar of the cube is the octahedron") {
  RationalPolytope oct = polar(fixtures::cube());
  CHECK(oct.vertices().size() == 6);
  for (const RatVec& v : oct.vertices()) {
    Rat sum = 0;
    for (const Rat& x : v) sum += (x < 0 ? -x : x);
    CHECK(sum == 1);
  }
}

TEST_CASE("bipolar involution on the pentagon polytope") {
  LatticePolytope p = fixtures::paper_p();
  CHECK(polar(polar(p)) == p.rational());
}

TEST_CASE("lattice points of the polar") {
  RationalPolytope q = polar(fixtures::paper_p());
  std::vector<IntVec> pts = lattice_points(q);
  CHECK(pts.size() == 9);
  std::set<IntVec> ps(pts.begin(), pts.end());
  CHECK(ps.count({0, 0, 0}));
  CHECK(ps.count({1, 0, 0}));
  CHECK(ps.count({-1, 0, 0}));
  CHECK(ps.count({0, 1, 0}));
  CHECK(ps.count({0, -1, 0}));
  CHECK(ps.count({0, 0, 1}));
  CHECK(ps.count({0, 0, -1}));
  CHECK(ps.count({1, -1, 0}));
  CHECK(ps.count({-1, 1, 0}));
}

TEST_CASE("lattice points of the polytope itself") {
  LatticePolytope p = fixtures::paper_p();
  std::vector<IntVec> pts = lattice_points(p);

  // Oracle: scan the bounding box and test every facet inequality.
  std::vector<Facet> fs = facets(p);
  std::vector<IntVec> oracle;
  for (int x = -1; x <= 1; ++x)
    for (int y = -1; y <= 1; ++y)
      for (int z = -1; z <= 1; ++z) {
        RatVec v = {Rat(x), Rat(y), Rat(z)};
        bool inside = true;
        for (const Facet& f : fs)
          if (dot(v, f.normal) > f.level) inside = false;
        if (inside) oracle.push_back({x, y, z});
      }
  std::sort(oracle.begin(), oracle.end(), lex_less);
  CHECK(pts == oracle);
  CHECK(pts.size() == 17);
}

TEST_CASE("lattice points of the unit simplex") {
  LatticePolytope s = hull({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(lattice_points(s).size() == 4);
}

TEST_CASE("normalized volumes") {
  CHECK(normalized_volume(polar(fixtures::paper_p())) == Rat(40, 3));
  LatticePolytope s = hull({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(normalized_volume(s) == 1);
  CHECK(normalized_volume(fixtures::cube()) == 48);
}

TEST_CASE("barycentres") {
  RatVec b = barycentre(polar(fixtures::paper_p()));
  CHECK(b == RatVec{0, 0, 0});

  LatticePolytope t = hull({{0, 0}, {1, 0}, {0, 1}});
  CHECK(barycentre(t) == RatVec{Rat(1, 3), Rat(1, 3)});

  // Equivariance under a lattice translate.
  LatticePolytope t2 = hull({{2, -1}, {3, -1}, {2, 0}});
  RatVec b2 = barycentre(t2);
  CHECK(b2 == RatVec{Rat(1, 3) + 2, Rat(1, 3) - 1});
}

TEST_CASE("fano classification of the pentagon polytope") {
  FanoReport r = fano_classify(fixtures::paper_p());
  CHECK(r.fano);
  CHECK(r.canonical);
  CHECK(r.centrally_symmetric);
  CHECK_FALSE(r.reflexive);  // the polar has a non-integral vertex
  CHECK_FALSE(r.terminal);   // (1,0,0) is a non-vertex boundary point
}

TEST_CASE("fano classification of the cube and octahedron") {
  CHECK(fano_classify(fixtures::cube()).reflexive);
  LatticePolytope oct = hull({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}});
  CHECK(fano_classify(oct).terminal);
}

TEST_CASE("K-polystability certificates") {
  KPolystabilityCertificate c = k_polystable_toric(fixtures::paper_p());
  CHECK(c.polystable);
  CHECK(c.polar_barycentre == RatVec{0, 0, 0});

  // Two-dimensional check with a hand triangulation oracle: the polar of
  // conv((1,0),(0,1),(-1,-1)) is conv((1,1),(-2,1),(1,-2)), one simplex,
  // so its barycentre is the vertex average (0,0).
  LatticePolytope t = hull({{1, 0}, {0, 1}, {-1, -1}});
  RationalPolytope pol = polar(t);
  CHECK(pol.vertices().size() == 3);
  RatVec avg(2, Rat(0));
  for (const RatVec& v : pol.vertices())
    for (size_t i = 0; i < 2; ++i) avg[i] += v[i] / 3;
  CHECK(avg == RatVec{0, 0});
  CHECK(k_polystable_toric(t).polystable);
}

TEST_CASE("automorphism groups") {
  MatrixGroup g = automorphisms(fixtures::paper_p());
  CHECK(g.order() == 4);

  IntMat minus_id(3, 3), swap_xy(3, 3);
  for (size_t i = 0; i < 3; ++i) minus_id.at(i, i) = -1;
  swap_xy.at(0, 1) = 1;
  swap_xy.at(1, 0) = 1;
  swap_xy.at(2, 2) = 1;
  bool has_sigma = false, has_tau = false, has_id = false;
  for (const IntMat& m : g.elements) {
    if (m == minus_id) has_sigma = true;
    if (m == swap_xy) has_tau = true;
    if (m == IntMat::identity(3)) has_id = true;
  }
  CHECK(has_sigma);
  CHECK(has_tau);
  CHECK(has_id);

  CHECK(automorphisms(fixtures::cube()).order() == 48);
}

TEST_CASE("asymmetric simplex has trivial automorphisms") {
  LatticePolytope s = hull({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -2, -3}});
  MatrixGroup g = automorphisms(s);

  // Oracle: try all vertex bijections directly.
  size_t count = 0;
  const auto& vs = s.vertices();
  std::vector<size_t> perm = {0, 1, 2, 3};
  do {
    RatMat m(3, 3);
    for (size_t k = 0; k < 3; ++k)
      for (size_t i = 0; i < 3; ++i) m.at(i, k) = Rat(vs[k][i]);
    bool ok = true;
    IntMat cand(3, 3);
    for (size_t r = 0; r < 3 && ok; ++r) {
      RatMat mt(3, 3);
      for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) mt.at(i, j) = m.at(j, i);
      RatVec rhs(3);
      for (size_t k = 0; k < 3; ++k) rhs[k] = Rat(vs[perm[k]][r]);
      auto y = solve_unique(mt, rhs);
      if (!y || !is_integral(*y)) {
        ok = false;
        break;
      }
      IntVec yi = to_int(*y);
      for (size_t j = 0; j < 3; ++j) cand.at(r, j) = yi[j];
    }
    if (ok && is_unimodular(cand) && cand.mul(vs[3]) == vs[perm[3]]) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));

  CHECK(g.order() == 1);
  CHECK(count == 1);
}

TEST_CASE("slices") {
  LatticePolytope p = fixtures::paper_p();
  RationalPolytope q = polar(p);

  RationalPolytope hexagon = slice(q, 2, Rat(0));
  CHECK(hexagon.vertices().size() == 6);
  std::set<RatVec> hv(hexagon.vertices().begin(), hexagon.vertices().end());
  CHECK(hv.count(rat_point({"1", "0", "0"})));
  CHECK(hv.count(rat_point({"-1", "0", "0"})));
  CHECK(hv.count(rat_point({"0", "1", "0"})));
  CHECK(hv.count(rat_point({"0", "-1", "0"})));
  CHECK(hv.count(rat_point({"-1", "1", "0"})));
  CHECK(hv.count(rat_point({"1", "-1", "0"})));

  RationalPolytope pentagon = slice(p, 2, Rat(1));
  CHECK(pentagon.vertices().size() == 5);

  RationalPolytope top = slice(fixtures::cube(), 2, Rat(1));
  CHECK(top.vertices().size() == 4);

  RationalPolytope none = slice(p, 2, Rat(7));
  CHECK(none.empty());
}

TEST_CASE("edge lattice lengths") {
  LatticePolytope p = fixtures::paper_p();
  auto lengths = edge_lattice_lengths(p);

  auto length_of = [&](const IntVec& u, const IntVec& v) {
    auto iu = std::find(p.vertices().begin(), p.vertices().end(), u) - p.vertices().begin();
    auto iv = std::find(p.vertices().begin(), p.vertices().end(), v) - p.vertices().begin();
    auto key = std::make_pair(std::min<size_t>(iu, iv), std::max<size_t>(iu, iv));
    REQUIRE(lengths.count(key));
    return lengths.at(key);
  };

  CHECK(length_of(pa(), vec_neg(pd())) == 2);
  CHECK(length_of(pe(), vec_neg(pc())) == 2);

  // All pentagon facet edges have lattice length one; the coordinate
  // differences of the five listed points have coprime entries.
  CHECK(length_of(pa(), pb()) == 1);
  CHECK(length_of(pb(), pc()) == 1);
  CHECK(length_of(pc(), pd()) == 1);
  CHECK(length_of(pd(), pe()) == 1);
  CHECK(length_of(pe(), pa()) == 1);

  auto cube_lengths = edge_lattice_lengths(fixtures::cube());
  for (const auto& [e, len] : cube_lengths) CHECK(len == 2);
  CHECK(cube_lengths.size() == 12);
}
