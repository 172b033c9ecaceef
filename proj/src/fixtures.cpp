#include "fanohull/fixtures.hpp"

namespace fanohull {
namespace fixtures {

LatticePolytope paper_p() {
  std::vector<IntVec> pts = {
      {1, 0, 1}, {1, 1, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 1},
  };
  std::vector<IntVec> all = pts;
  for (const IntVec& p : pts) all.push_back(vec_neg(p));
  return hull(all);
}

LaurentPolynomial paper_f() {
  // (x + y + xy)(1 + 1/(xy)) z + (1/x + 1/y + 1/(xy))(1 + xy) / z,
  // expanded: one term of coefficient 1 per supporting lattice point.
  LaurentPolynomial f;
  f.ambient = 3;
  std::vector<std::vector<long long>> top = {{0, 0, 1},  {1, 0, 1},  {0, 1, 1},
                                             {1, 1, 1},  {-1, 0, 1}, {0, -1, 1}};
  for (const auto& e : top) {
    f.add_term(e, 1);
    f.add_term({-e[0], -e[1], -e[2]}, 1);
  }
  return f;
}

HullPresentation paper_a() {
  HullPresentation h;
  std::vector<IntVec> weights = {{0, 0, 1},  {0, 0, 1},  {0, 0, -1}, {0, 0, -1},
                                 {-1, 1, 0}, {-2, 2, 0}, {1, -1, 0}, {2, -2, 0}};
  for (size_t i = 0; i < weights.size(); ++i)
    h.vars.push_back({"t" + std::to_string(i + 1), weights[i], 1});
  h.ideal = {
      {2, 0, 0, 0, 0, 0, 0, 0},
      {1, 1, 0, 0, 0, 0, 0, 0},
      {0, 0, 2, 0, 0, 0, 0, 0},
      {0, 0, 1, 1, 0, 0, 0, 0},
  };
  return h;
}

std::vector<std::pair<IntMat, std::vector<size_t>>> paper_g_action() {
  IntMat sigma(3, 3), tau(3, 3);
  for (size_t i = 0; i < 3; ++i) sigma.at(i, i) = -1;
  tau.at(0, 1) = 1;
  tau.at(1, 0) = 1;
  tau.at(2, 2) = 1;
  // sigma: t1<->t3, t2<->t4, t5<->t7, t6<->t8; tau fixes t1..t4, swaps the rest.
  std::vector<size_t> sigma_perm = {2, 3, 0, 1, 6, 7, 4, 5};
  std::vector<size_t> tau_perm = {0, 1, 2, 3, 6, 7, 4, 5};
  return {{sigma, sigma_perm}, {tau, tau_perm}};
}

HullPresentation paper_ag_claimed() {
  HullPresentation h;
  IntVec zero3(3, Int(0));
  std::vector<int> tdegs = {2, 2, 2, 3, 2, 2};
  for (size_t i = 0; i < 6; ++i)
    h.vars.push_back({"u" + std::to_string(i + 1), zero3, tdegs[i]});
  h.ideal = {
      {2, 0, 0, 0, 0, 0}, {0, 2, 0, 0, 0, 0}, {1, 1, 0, 0, 0, 0},
      {1, 0, 1, 0, 0, 0}, {0, 1, 1, 0, 0, 0},
  };
  return h;
}

LatticePolytope cube() {
  std::vector<IntVec> pts;
  for (int a : {-1, 1})
    for (int b : {-1, 1})
      for (int c : {-1, 1}) pts.push_back({a, b, c});
  return hull(pts);
}

LaurentPolynomial x_plus_xinv() {
  LaurentPolynomial f;
  f.ambient = 1;
  f.add_term({1}, 1);
  f.add_term({-1}, 1);
  return f;
}

LaurentPolynomial three_term_multinomial() {
  LaurentPolynomial f;
  f.ambient = 2;
  f.add_term({1, 0}, 1);
  f.add_term({0, 1}, 1);
  f.add_term({-1, -1}, 1);
  return f;
}

}  // namespace fixtures
}  // namespace fanohull
