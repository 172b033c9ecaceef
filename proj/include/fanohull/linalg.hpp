#ifndef FANOHULL_LINALG_HPP
#define FANOHULL_LINALG_HPP

#include <optional>
#include <utility>

#include "fanohull/numeric.hpp"

namespace fanohull {

// Dense integer matrix, row major. Empty matrices (0 rows or 0 columns)
// are allowed and have rank 0.
class IntMat {
 public:
  IntMat() = default;
  IntMat(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Int(0)) {}
  explicit IntMat(std::vector<IntVec> rows);

  static IntMat identity(size_t n);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  Int& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const Int& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  IntVec row(size_t i) const;
  std::vector<IntVec> row_list() const;
  IntMat transpose() const;
  IntMat mul(const IntMat& other) const;
  IntVec mul(const IntVec& v) const;  // matrix * column vector

  bool operator==(const IntMat& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && a_ == other.a_;
  }

  void swap_rows(size_t i, size_t j);
  void swap_cols(size_t i, size_t j);

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

struct SmithResult {
  IntMat u, d, v;  // u*a*v = d, u and v unimodular, d diagonal with d1 | d2 | ...
  std::vector<Int> invariant_factors() const;
};

struct HermiteResult {
  IntMat h, u;  // u*a = h, u unimodular, h in row Hermite normal form
};

SmithResult smith_normal_form(const IntMat& a);
HermiteResult hermite_normal_form(const IntMat& a);

// Rows form a basis of the saturated integer kernel {x : a x = 0}.
IntMat kernel_basis(const IntMat& a);

// Exact rank; determinant present iff the matrix is square.
std::pair<size_t, std::optional<Int>> rank_and_det(const IntMat& a);

Int det(const IntMat& a);  // square matrices only
bool is_unimodular(const IntMat& a);

// Rational matrix utilities for exact linear solves.
class RatMat {
 public:
  RatMat() = default;
  RatMat(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}
  explicit RatMat(const IntMat& m);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  Rat& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const Rat& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  size_t rank() const;

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

// Unique solution of a x = b over Q, or nullopt when the system is
// inconsistent or underdetermined.
std::optional<RatVec> solve_unique(const RatMat& a, const RatVec& b);

// Any particular solution of a x = b over Q, or nullopt when inconsistent.
std::optional<RatVec> solve_any(const RatMat& a, const RatVec& b);

// Basis of {x : a x = 0} over Q.
std::vector<RatVec> rat_kernel(const RatMat& a);

size_t rank_of_rows(const std::vector<IntVec>& rows);
size_t rank_of_rows(const std::vector<RatVec>& rows);

// Scale a rational vector to a primitive integer vector pointing the
// same way. Zero vectors are rejected.
IntVec primitive_integer_direction(const RatVec& v);

bool lex_less(const RatVec& a, const RatVec& b);
bool lex_less(const IntVec& a, const IntVec& b);

}  // namespace fanohull

#endif
