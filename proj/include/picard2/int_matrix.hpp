#pragma once

// Exact integer matrices and the lattice algorithms everything else sits on:
// Smith normal form, nullspace bases, and Diophantine linear solving.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace picard2 {

using Int = boost::multiprecision::cpp_int;

// Malformed or out-of-contract input (bad dimensions, failed axioms, ...).
struct invalid_input : std::runtime_error {
  explicit invalid_input(const std::string& what) : std::runtime_error(what) {}
};

// Enumeration budget exceeded in a brute-force search.
struct search_overflow : std::runtime_error {
  explicit search_overflow(const std::string& what) : std::runtime_error(what) {}
};

inline Int int_abs(const Int& x) { return x < 0 ? Int(-x) : x; }

// Dense row-major matrix over Int.  Dimensions may be zero; a 0xN or Nx0
// matrix is a legitimate value (empty presentations, trivial groups).
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * size_t(cols)) {
    if (rows < 0 || cols < 0) throw invalid_input("IntMatrix: negative dimension");
  }
  IntMatrix(int rows, int cols, std::vector<Int> data)
      : rows_(rows), cols_(cols), a_(std::move(data)) {
    if (rows < 0 || cols < 0 || a_.size() != size_t(rows) * size_t(cols))
      throw invalid_input("IntMatrix: data size mismatch");
  }
  IntMatrix(std::initializer_list<std::initializer_list<Int>> rows) {
    rows_ = int(rows.size());
    cols_ = rows_ == 0 ? 0 : int(rows.begin()->size());
    a_.reserve(size_t(rows_) * size_t(cols_));
    for (const auto& r : rows) {
      if (int(r.size()) != cols_) throw invalid_input("IntMatrix: ragged rows");
      for (const auto& x : r) a_.push_back(x);
    }
  }

  static IntMatrix zero(int rows, int cols) { return IntMatrix(rows, cols); }
  static IntMatrix identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }
  static IntMatrix column(std::vector<Int> v) {
    int n = int(v.size());
    return IntMatrix(n, 1, std::move(v));
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& at(int i, int j) { return a_[size_t(i) * size_t(cols_) + size_t(j)]; }
  const Int& at(int i, int j) const { return a_[size_t(i) * size_t(cols_) + size_t(j)]; }

  bool is_zero() const {
    for (const auto& x : a_)
      if (x != 0) return false;
    return true;
  }

  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const IntMatrix& o) const { return !(*this == o); }

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
  }
  // row i -= q * row j
  void row_axpy(int i, int j, const Int& q) {
    if (q == 0) return;
    for (int k = 0; k < cols_; ++k) at(i, k) -= q * at(j, k);
  }
  // col i -= q * col j
  void col_axpy(int i, int j, const Int& q) {
    if (q == 0) return;
    for (int k = 0; k < rows_; ++k) at(k, i) -= q * at(k, j);
  }
  void negate_row(int i) {
    for (int k = 0; k < cols_; ++k) at(i, k) = -at(i, k);
  }

  IntMatrix transposed() const {
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  IntMatrix col(int j) const {
    IntMatrix c(rows_, 1);
    for (int i = 0; i < rows_; ++i) c.at(i, 0) = at(i, j);
    return c;
  }
  IntMatrix top_rows(int n) const {
    IntMatrix r(n, cols_);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    return r;
  }
  IntMatrix bottom_rows(int n) const {
    IntMatrix r(n, cols_);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < cols_; ++j) r.at(i, j) = at(rows_ - n + i, j);
    return r;
  }

  std::string str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
      os << (i ? "; " : "");
      for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j);
    }
    os << "]";
    return os.str();
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

inline IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw invalid_input("matrix product: dimension mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Int& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

inline IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw invalid_input("matrix sum: dimension mismatch");
  IntMatrix c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) + b.at(i, j);
  return c;
}

inline IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw invalid_input("matrix difference: dimension mismatch");
  IntMatrix c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) - b.at(i, j);
  return c;
}

inline IntMatrix operator-(const IntMatrix& a) {
  IntMatrix c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c.at(i, j) = -a.at(i, j);
  return c;
}

inline IntMatrix operator*(const Int& s, const IntMatrix& a) {
  IntMatrix c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c.at(i, j) = s * a.at(i, j);
  return c;
}

inline IntMatrix hstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw invalid_input("hstack: row count mismatch");
  IntMatrix c(a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols(); ++j) c.at(i, a.cols() + j) = b.at(i, j);
  }
  return c;
}

inline IntMatrix vstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.cols()) throw invalid_input("vstack: column count mismatch");
  IntMatrix c(a.rows() + b.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c.at(a.rows() + i, j) = b.at(i, j);
  return c;
}

// Block diagonal of two matrices.
inline IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix c(a.rows() + b.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) c.at(a.rows() + i, a.cols() + j) = b.at(i, j);
  return c;
}

// Fraction-free Gaussian elimination (Bareiss).  Exact determinant of a
// square matrix; the empty matrix has determinant 1.
inline Int determinant(IntMatrix m) {
  if (m.rows() != m.cols()) throw invalid_input("determinant: matrix not square");
  int n = m.rows();
  if (n == 0) return 1;
  Int sign = 1, prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (m.at(i, k) != 0) { p = i; break; }
      if (p < 0) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
    prev = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

struct SmithResult {
  IntMatrix u;  // rows x rows, unimodular
  IntMatrix d;  // diagonal, nonnegative, d[i] | d[i+1]
  IntMatrix v;  // cols x cols, unimodular
  int rank = 0;
  std::vector<Int> diag;  // full diagonal, length min(rows, cols)
};

// Smith normal form u*a*v = d.  Pivot selection: smallest nonzero absolute
// value in the working submatrix, ties broken by lowest row then lowest
// column index.  Each pivot round clears its row and column (row sweep first),
// restarting whenever a remainder shrinks below the pivot, then enforces
// divisibility of the trailing block by folding an offending row into the
// pivot row.
inline SmithResult smith_normal_form(const IntMatrix& a) {
  int m = a.rows(), n = a.cols();
  SmithResult res;
  res.u = IntMatrix::identity(m);
  res.v = IntMatrix::identity(n);
  res.d = a;
  IntMatrix& d = res.d;
  IntMatrix& u = res.u;
  IntMatrix& v = res.v;

  int t = 0;
  int lim = std::min(m, n);
  while (t < lim) {
    // Locate pivot.
    int pi = -1, pj = -1;
    for (int i = t; i < m; ++i)
      for (int j = t; j < n; ++j) {
        if (d.at(i, j) == 0) continue;
        if (pi < 0 || int_abs(d.at(i, j)) < int_abs(d.at(pi, pj))) { pi = i; pj = j; }
      }
    if (pi < 0) break;  // remaining block is zero
    if (pi != t) { d.swap_rows(t, pi); u.swap_rows(t, pi); }
    if (pj != t) { d.swap_cols(t, pj); v.swap_cols(t, pj); }

    bool dirty = false;
    // Row sweep: clear column t below the pivot.
    for (int i = t + 1; i < m; ++i) {
      if (d.at(i, t) == 0) continue;
      Int q = d.at(i, t) / d.at(t, t);
      d.row_axpy(i, t, q);
      u.row_axpy(i, t, q);
      if (d.at(i, t) != 0) dirty = true;
    }
    // Column sweep: clear row t to the right of the pivot.
    for (int j = t + 1; j < n; ++j) {
      if (d.at(t, j) == 0) continue;
      Int q = d.at(t, j) / d.at(t, t);
      d.col_axpy(j, t, q);
      v.col_axpy(j, t, q);
      if (d.at(t, j) != 0) dirty = true;
    }
    if (dirty) continue;  // leftover remainders are smaller; re-pick pivot

    // Divisibility: pivot must divide the whole trailing block.
    int bi = -1, bj = -1;
    for (int i = t + 1; i < m && bi < 0; ++i)
      for (int j = t + 1; j < n; ++j)
        if (d.at(i, j) % d.at(t, t) != 0) { bi = i; bj = j; break; }
    if (bi >= 0) {
      d.row_axpy(t, bi, Int(-1));  // row t += row bi
      u.row_axpy(t, bi, Int(-1));
      continue;
    }

    if (d.at(t, t) < 0) { d.negate_row(t); u.negate_row(t); }
    ++t;
  }

  res.rank = t;
  res.diag.resize(lim);
  for (int i = 0; i < lim; ++i) res.diag[i] = d.at(i, i);
  return res;
}

// Solve a*x = b exactly over the integers for each column of b.  Returns the
// minimal solution through the Smith form: free coordinates are set to zero.
// nullopt when any column has no integer solution.
inline std::optional<IntMatrix> solve_mat(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw invalid_input("solve_mat: row count mismatch");
  SmithResult s = smith_normal_form(a);
  IntMatrix c = s.u * b;
  int lim = std::min(a.rows(), a.cols());
  IntMatrix y(a.cols(), b.cols());
  for (int col = 0; col < b.cols(); ++col) {
    for (int i = 0; i < lim; ++i) {
      if (s.diag[i] != 0) {
        if (c.at(i, col) % s.diag[i] != 0) return std::nullopt;
        y.at(i, col) = c.at(i, col) / s.diag[i];
      } else if (c.at(i, col) != 0) {
        return std::nullopt;
      }
    }
    for (int i = lim; i < a.rows(); ++i)
      if (c.at(i, col) != 0) return std::nullopt;
  }
  return s.v * y;
}

inline std::optional<IntMatrix> solve(const IntMatrix& a, const IntMatrix& b) {
  if (b.cols() != 1) throw invalid_input("solve: right side must be a column");
  return solve_mat(a, b);
}

// Basis for the integer nullspace of a, as columns of an n x (n - rank)
// matrix.  Every integer solution of a*x = 0 is an integer combination of
// these columns.
inline IntMatrix kernel_basis(const IntMatrix& a) {
  SmithResult s = smith_normal_form(a);
  int n = a.cols();
  int free = n - s.rank;
  IntMatrix k(n, free);
  for (int j = 0; j < free; ++j)
    for (int i = 0; i < n; ++i) k.at(i, j) = s.v.at(i, s.rank + j);
  return k;
}

// Inverse of a unimodular integer matrix.
inline IntMatrix unimodular_inverse(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw invalid_input("unimodular_inverse: not square");
  auto x = solve_mat(a, IntMatrix::identity(a.rows()));
  if (!x) throw invalid_input("unimodular_inverse: matrix is singular over Z");
  return *x;
}

}  // namespace picard2
