#include <doctest.h>

#include "fanohull/linalg.hpp"

using namespace fanohull;

namespace {

IntMat from_rows(std::vector<IntVec> rows) { return IntMat(std::move(rows)); }

// Membership of v in the row lattice of a saturated basis k: rational
// solvability suffices because the lattice is saturated.
bool in_row_lattice(const IntMat& k, const IntVec& v) {
  RatMat kt(k.cols(), k.rows());
  for (size_t i = 0; i < k.rows(); ++i)
    for (size_t j = 0; j < k.cols(); ++j) kt.at(j, i) = Rat(k.at(i, j));
  return solve_any(kt, to_rat(v)).has_value();
}

}  // namespace

TEST_CASE("smith normal form on the identity") {
  SmithResult s = smith_normal_form(IntMat::identity(3));
  CHECK(s.d == IntMat::identity(3));
  CHECK(s.invariant_factors() == std::vector<Int>{1, 1, 1});
}

TEST_CASE("smith normal form fixes the divisibility chain") {
  IntMat a(2, 2);
  a.at(0, 0) = 4;
  a.at(1, 1) = 2;
  SmithResult s = smith_normal_form(a);
  CHECK(s.invariant_factors() == std::vector<Int>{2, 4});
  CHECK(s.u.mul(a).mul(s.v) == s.d);
}

TEST_CASE("smith normal form of the order-three chart rays") {
  IntMat a = from_rows({{-1, -1, -1}, {-1, 0, 1}, {0, -1, 1}});
  // Independent oracle: the determinant direct and the gcd of entries/minors.
  Int d = det(a);
  CHECK(abs(d) == 3);
  Int g1 = 0;
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) g1 = int_gcd(g1, a.at(i, j));
  CHECK(g1 == 1);  // first invariant factor
  SmithResult s = smith_normal_form(a);
  CHECK(s.invariant_factors() == std::vector<Int>{1, 1, 3});
  CHECK(s.u.mul(a).mul(s.v) == s.d);
  CHECK(is_unimodular(s.u));
  CHECK(is_unimodular(s.v));
}

TEST_CASE("hermite normal form basics") {
  CHECK(hermite_normal_form(IntMat::identity(4)).h == IntMat::identity(4));

  HermiteResult r = hermite_normal_form(from_rows({{2, 4, 6}}));
  CHECK(r.h == from_rows({{2, 4, 6}}));
  CHECK(r.u == IntMat::identity(1));
  // The pivot of a single-row form is the extended gcd of the entries.
  Int x, y;
  CHECK(r.h.at(0, 0) == ext_gcd(Int(2), ext_gcd(Int(4), Int(6), x, y), x, y));

  HermiteResult swap = hermite_normal_form(from_rows({{0, 1}, {1, 0}}));
  CHECK(swap.h == from_rows({{1, 0}, {0, 1}}));
}

TEST_CASE("kernel of the all-ones row") {
  IntMat k = kernel_basis(from_rows({{1, 1, 1}}));
  CHECK(k.rows() == 2);
  CHECK(in_row_lattice(k, {1, -1, 0}));
  CHECK(in_row_lattice(k, {0, 1, -1}));
  for (size_t i = 0; i < k.rows(); ++i) CHECK(dot(k.row(i), {1, 1, 1}) == 0);
}

TEST_CASE("kernel of the weight row") {
  IntMat a = from_rows({{1, 2, -1, -2}});
  IntMat k = kernel_basis(a);
  CHECK(k.rows() == 3);

  // Oracle: brute-force enumeration of small solutions.
  std::vector<IntVec> small;
  for (int x1 = -2; x1 <= 2; ++x1)
    for (int x2 = -2; x2 <= 2; ++x2)
      for (int x3 = -2; x3 <= 2; ++x3)
        for (int x4 = -2; x4 <= 2; ++x4)
          if (x1 + 2 * x2 - x3 - 2 * x4 == 0) small.push_back({x1, x2, x3, x4});
  for (const IntVec& v : small) CHECK(in_row_lattice(k, v));

  CHECK(in_row_lattice(k, {1, 0, 1, 0}));
  CHECK(in_row_lattice(k, {0, 1, 0, 1}));
  CHECK(in_row_lattice(k, {2, 0, 0, 1}));
}

TEST_CASE("kernel of the identity is empty") {
  CHECK(kernel_basis(IntMat::identity(3)).rows() == 0);
}

TEST_CASE("rank and determinant") {
  auto [r1, d1] = rank_and_det(IntMat::identity(3));
  CHECK(r1 == 3);
  CHECK(*d1 == 1);

  auto [r2, d2] = rank_and_det(from_rows({{1, -1, 0}, {1, 0, -1}}));
  CHECK(r2 == 2);
  CHECK_FALSE(d2.has_value());

  auto [r3, d3] = rank_and_det(IntMat(2, 2));
  CHECK(r3 == 0);
  CHECK(*d3 == 0);
}

TEST_CASE("empty matrices have rank zero") {
  CHECK(rank_and_det(IntMat(0, 3)).first == 0);
  CHECK(kernel_basis(IntMat(0, 3)).rows() == 3);
}
