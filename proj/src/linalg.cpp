#include "fanohull/linalg.hpp"

#include <algorithm>
#include <cstdlib>

namespace fanohull {

IntMat::IntMat(std::vector<IntVec> rows) {
  rows_ = rows.size();
  cols_ = rows.empty() ? 0 : rows[0].size();
  a_.reserve(rows_ * cols_);
  for (const IntVec& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix rows");
    for (const Int& x : r) a_.push_back(x);
  }
}

IntMat IntMat::identity(size_t n) {
  IntMat m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntVec IntMat::row(size_t i) const {
  IntVec r(cols_);
  for (size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

std::vector<IntVec> IntMat::row_list() const {
  std::vector<IntVec> rs;
  rs.reserve(rows_);
  for (size_t i = 0; i < rows_; ++i) rs.push_back(row(i));
  return rs;
}

IntMat IntMat::transpose() const {
  IntMat t(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMat IntMat::mul(const IntMat& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("matrix product shape mismatch");
  IntMat r(rows_, other.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      const Int& x = at(i, k);
      if (x == 0) continue;
      for (size_t j = 0; j < other.cols_; ++j) r.at(i, j) += x * other.at(k, j);
    }
  return r;
}

IntVec IntMat::mul(const IntVec& v) const {
  if (cols_ != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
  IntVec r(rows_, Int(0));
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
  return r;
}

void IntMat::swap_rows(size_t i, size_t j) {
  if (i == j) return;
  for (size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMat::swap_cols(size_t i, size_t j) {
  if (i == j) return;
  for (size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

std::vector<Int> SmithResult::invariant_factors() const {
  std::vector<Int> f;
  size_t n = std::min(d.rows(), d.cols());
  for (size_t i = 0; i < n; ++i)
    if (d.at(i, i) != 0) f.push_back(d.at(i, i));
  return f;
}

namespace {

void add_row_multiple(IntMat& m, size_t dst, size_t src, const Int& c) {
  if (c == 0) return;
  for (size_t j = 0; j < m.cols(); ++j) m.at(dst, j) += c * m.at(src, j);
}

void add_col_multiple(IntMat& m, size_t dst, size_t src, const Int& c) {
  if (c == 0) return;
  for (size_t i = 0; i < m.rows(); ++i) m.at(i, dst) += c * m.at(i, src);
}

}  // namespace

SmithResult smith_normal_form(const IntMat& a) {
  size_t m = a.rows(), n = a.cols();
  SmithResult res{IntMat::identity(m), a, IntMat::identity(n)};
  IntMat& d = res.d;
  IntMat& u = res.u;
  IntMat& v = res.v;

  size_t t = 0;
  while (t < m && t < n) {
    // Find a pivot of minimal absolute value in the trailing block.
    size_t pi = t, pj = t;
    bool found = false;
    for (size_t i = t; i < m; ++i)
      for (size_t j = t; j < n; ++j)
        if (d.at(i, j) != 0 &&
            (!found || abs(d.at(i, j)) < abs(d.at(pi, pj)))) {
          pi = i;
          pj = j;
          found = true;
        }
    if (!found) break;
    d.swap_rows(t, pi);
    u.swap_rows(t, pi);
    d.swap_cols(t, pj);
    v.swap_cols(t, pj);

    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (size_t i = t + 1; i < m; ++i) {
        if (d.at(i, t) == 0) continue;
        Int q = d.at(i, t) / d.at(t, t);
        add_row_multiple(d, i, t, -q);
        add_row_multiple(u, i, t, -q);
        if (d.at(i, t) != 0) {
          d.swap_rows(t, i);
          u.swap_rows(t, i);
          dirty = true;
        }
      }
      for (size_t j = t + 1; j < n; ++j) {
        if (d.at(t, j) == 0) continue;
        Int q = d.at(t, j) / d.at(t, t);
        add_col_multiple(d, j, t, -q);
        add_col_multiple(v, j, t, -q);
        if (d.at(t, j) != 0) {
          d.swap_cols(t, j);
          v.swap_cols(t, j);
          dirty = true;
        }
      }
    }

    // Pivot must divide every entry of the trailing block.
    bool divides = true;
    for (size_t i = t + 1; i < m && divides; ++i)
      for (size_t j = t + 1; j < n && divides; ++j)
        if (d.at(i, j) % d.at(t, t) != 0) {
          add_row_multiple(d, t, i, Int(1));
          add_row_multiple(u, t, i, Int(1));
          divides = false;
        }
    if (divides) ++t;
  }

  for (size_t i = 0; i < std::min(m, n); ++i)
    if (d.at(i, i) < 0) {
      for (size_t j = 0; j < n; ++j) d.at(i, j) = -d.at(i, j);
      for (size_t j = 0; j < m; ++j) u.at(i, j) = -u.at(i, j);
    }
  return res;
}

HermiteResult hermite_normal_form(const IntMat& a) {
  size_t m = a.rows(), n = a.cols();
  HermiteResult res{a, IntMat::identity(m)};
  IntMat& h = res.h;
  IntMat& u = res.u;

  size_t r = 0;
  for (size_t c = 0; c < n && r < m; ++c) {
    // Reduce column c below row r to a single nonzero pivot by gcd steps.
    while (true) {
      size_t best = m;
      for (size_t i = r; i < m; ++i)
        if (h.at(i, c) != 0 && (best == m || abs(h.at(i, c)) < abs(h.at(best, c)))) best = i;
      if (best == m) break;
      h.swap_rows(r, best);
      u.swap_rows(r, best);
      bool clean = true;
      for (size_t i = r + 1; i < m; ++i) {
        if (h.at(i, c) == 0) continue;
        Int q = h.at(i, c) / h.at(r, c);
        add_row_multiple(h, i, r, -q);
        add_row_multiple(u, i, r, -q);
        if (h.at(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h.at(r, c) == 0) continue;
    if (h.at(r, c) < 0) {
      for (size_t j = 0; j < n; ++j) h.at(r, j) = -h.at(r, j);
      for (size_t j = 0; j < m; ++j) u.at(r, j) = -u.at(r, j);
    }
    for (size_t i = 0; i < r; ++i) {
      Int q = floor_div(h.at(i, c), h.at(r, c));
      add_row_multiple(h, i, r, -q);
      add_row_multiple(u, i, r, -q);
    }
    ++r;
  }
  return res;
}

IntMat kernel_basis(const IntMat& a) {
  // Row-reduce a^T; rows of the transform aligned with zero rows of the
  // echelon form are a basis of {x : a x = 0}, automatically saturated.
  HermiteResult hr = hermite_normal_form(a.transpose());
  std::vector<IntVec> rows;
  for (size_t i = 0; i < hr.h.rows(); ++i) {
    bool zero = true;
    for (size_t j = 0; j < hr.h.cols(); ++j)
      if (hr.h.at(i, j) != 0) {
        zero = false;
        break;
      }
    if (zero) rows.push_back(hr.u.row(i));
  }
  if (rows.empty()) return IntMat(0, a.cols());
  return IntMat(rows);
}

std::pair<size_t, std::optional<Int>> rank_and_det(const IntMat& a) {
  HermiteResult hr = hermite_normal_form(a);
  size_t rank = 0;
  for (size_t i = 0; i < hr.h.rows(); ++i)
    for (size_t j = 0; j < hr.h.cols(); ++j)
      if (hr.h.at(i, j) != 0) {
        ++rank;
        break;
      }
  std::optional<Int> dt;
  if (a.rows() == a.cols()) dt = det(a);
  return {rank, dt};
}

Int det(const IntMat& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of non-square matrix");
  size_t n = a.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntMat m = a;
  Int sign = 1, prev = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      size_t p = k + 1;
      while (p < n && m.at(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
    prev = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

bool is_unimodular(const IntMat& a) {
  if (a.rows() != a.cols()) return false;
  Int d = det(a);
  return d == 1 || d == -1;
}

RatMat::RatMat(const IntMat& m) : rows_(m.rows()), cols_(m.cols()), a_(m.rows() * m.cols()) {
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) at(i, j) = Rat(m.at(i, j));
}

namespace {

// Reduce in place to row echelon form, returning pivot columns.
std::vector<size_t> rref(RatMat& m) {
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    size_t p = r;
    while (p < m.rows() && m.at(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(r, j), m.at(p, j));
    Rat inv = Rat(1) / m.at(r, c);
    for (size_t j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      Rat f = m.at(i, c);
      for (size_t j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

size_t RatMat::rank() const {
  RatMat m = *this;
  return rref(m).size();
}

std::optional<RatVec> solve_any(const RatMat& a, const RatVec& b) {
  RatMat aug(a.rows(), a.cols() + 1);
  for (size_t i = 0; i < a.rows(); ++i) {
    for (size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  std::vector<size_t> pivots = rref(aug);
  for (size_t p : pivots)
    if (p == a.cols()) return std::nullopt;  // inconsistent
  RatVec x(a.cols(), Rat(0));
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, a.cols());
  return x;
}

std::optional<RatVec> solve_unique(const RatMat& a, const RatVec& b) {
  auto x = solve_any(a, b);
  if (!x) return std::nullopt;
  RatMat m = a;
  if (rref(m).size() != a.cols()) return std::nullopt;
  return x;
}

std::vector<RatVec> rat_kernel(const RatMat& a) {
  RatMat m = a;
  std::vector<size_t> pivots = rref(m);
  std::vector<bool> is_pivot(a.cols(), false);
  for (size_t p : pivots) is_pivot[p] = true;
  std::vector<RatVec> basis;
  for (size_t c = 0; c < a.cols(); ++c) {
    if (is_pivot[c]) continue;
    RatVec v(a.cols(), Rat(0));
    v[c] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, c);
    basis.push_back(v);
  }
  return basis;
}

size_t rank_of_rows(const std::vector<IntVec>& rows) {
  if (rows.empty()) return 0;
  return rank_and_det(IntMat(rows)).first;
}

size_t rank_of_rows(const std::vector<RatVec>& rows) {
  if (rows.empty()) return 0;
  RatMat m(rows.size(), rows[0].size());
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
  return m.rank();
}

bool lex_less(const RatVec& a, const RatVec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool lex_less(const IntVec& a, const IntVec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

IntVec primitive_integer_direction(const RatVec& v) {
  Int l = 1;
  for (const Rat& q : v) l = int_lcm(l, den(q));
  IntVec w(v.size());
  bool zero = true;
  for (size_t i = 0; i < v.size(); ++i) {
    Rat s = v[i] * Rat(l);
    w[i] = num(s);
    if (w[i] != 0) zero = false;
  }
  if (zero) throw std::invalid_argument("no direction for the zero vector");
  return primitive(std::move(w));
}

}  // namespace fanohull
