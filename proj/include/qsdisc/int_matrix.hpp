#pragma once

#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "qsdisc/numeric.hpp"

namespace qsdisc {

// Dense integer matrix with arbitrary-precision entries. Dimensions are
// fixed at construction; all mutation happens through row/column operations
// used by the normal-form routines below.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}

  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) raise(Errc::InvalidInput, "ragged matrix literal");
      for (long long x : r) data_.emplace_back(x);
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static IntMatrix from_columns(const std::vector<Vec>& cols) {
    std::size_t k = cols.empty() ? 0 : cols.front().size();
    IntMatrix m(k, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != k) raise(Errc::InvalidInput, "ragged column list");
      for (std::size_t i = 0; i < k; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  static IntMatrix from_rows(const std::vector<Vec>& rows) {
    std::size_t n = rows.empty() ? 0 : rows.front().size();
    IntMatrix m(rows.size(), n);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != n) raise(Errc::InvalidInput, "ragged row list");
      for (std::size_t j = 0; j < n; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec row(std::size_t i) const {
    Vec r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
  }

  Vec column(std::size_t j) const {
    Vec c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  IntMatrix transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t l = 0; l < a.cols_; ++l) {
        if (a(i, l) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, l) * b(l, j);
      }
    return c;
  }

  Vec apply(const Vec& v) const {
    Vec out(rows_, Int(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  // row/column elementary operations
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  void add_row(std::size_t dst, std::size_t src, const Int& factor) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
  }
  void add_col(std::size_t dst, std::size_t src, const Int& factor) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
  }
  void negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Int> data_;
};

struct SmithForm {
  IntMatrix S;  // diagonal, nonnegative, d1 | d2 | ...
  IntMatrix U;  // rows() x rows(), det +-1
  IntMatrix V;  // cols() x cols(), det +-1
};

// U * M * V = S. Pivot choice: smallest nonzero magnitude, ties broken by
// row-major position, which keeps the routine deterministic.
inline SmithForm smith_normal_form(const IntMatrix& m) {
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  IntMatrix v = IntMatrix::identity(m.cols());
  const std::size_t r = m.rows(), c = m.cols();

  auto find_pivot = [&](std::size_t t) -> std::optional<std::pair<std::size_t, std::size_t>> {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = t; i < r; ++i)
      for (std::size_t j = t; j < c; ++j) {
        if (a(i, j) == 0) continue;
        if (!best || abs(a(i, j)) < abs(a(best->first, best->second))) best = {{i, j}};
      }
    return best;
  };

  std::size_t t = 0;
  while (t < r && t < c) {
    auto piv = find_pivot(t);
    if (!piv) break;
    a.swap_rows(t, piv->first);
    u.swap_rows(t, piv->first);
    a.swap_cols(t, piv->second);
    v.swap_cols(t, piv->second);

    bool dirty = false;
    for (std::size_t i = t + 1; i < r; ++i) {
      if (a(i, t) == 0) continue;
      Int q = a(i, t) / a(t, t);
      if (q != 0) {
        a.add_row(i, t, -q);
        u.add_row(i, t, -q);
      }
      if (a(i, t) != 0) dirty = true;
    }
    for (std::size_t j = t + 1; j < c; ++j) {
      if (a(t, j) == 0) continue;
      Int q = a(t, j) / a(t, t);
      if (q != 0) {
        a.add_col(j, t, -q);
        v.add_col(j, t, -q);
      }
      if (a(t, j) != 0) dirty = true;
    }
    if (dirty) continue;  // smaller remainders exist; re-pick the pivot

    // pivot must divide the remaining block for the invariant-factor chain
    bool absorbed = false;
    for (std::size_t i = t + 1; i < r && !absorbed; ++i)
      for (std::size_t j = t + 1; j < c && !absorbed; ++j)
        if (a(i, j) % a(t, t) != 0) {
          a.add_row(t, i, 1);
          u.add_row(t, i, 1);
          absorbed = true;
        }
    if (absorbed) continue;
    ++t;
  }

  for (std::size_t i = 0; i < r && i < c; ++i)
    if (a(i, i) < 0) {
      a.negate_row(i);
      u.negate_row(i);
    }
  return {a, u, v};
}

inline std::vector<Int> invariant_factors(const IntMatrix& m) {
  SmithForm snf = smith_normal_form(m);
  std::vector<Int> out;
  for (std::size_t i = 0; i < m.rows() && i < m.cols(); ++i) {
    if (snf.S(i, i) == 0) break;
    out.push_back(snf.S(i, i));
  }
  return out;
}

inline std::size_t rank(const IntMatrix& m) { return invariant_factors(m).size(); }

// Columns form a Z-basis of the saturated lattice {v : M v = 0}.
inline IntMatrix kernel_basis(const IntMatrix& m) {
  SmithForm snf = smith_normal_form(m);
  std::size_t r = 0;
  while (r < m.rows() && r < m.cols() && snf.S(r, r) != 0) ++r;
  IntMatrix k(m.cols(), m.cols() - r);
  for (std::size_t j = r; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.cols(); ++i) k(i, j - r) = snf.V(i, j);
  return k;
}

// Integer solution of M x = b, if one exists.
inline std::optional<Vec> solve(const IntMatrix& m, const Vec& b) {
  SmithForm snf = smith_normal_form(m);
  Vec ub = snf.U.apply(b);
  Vec y(m.cols(), Int(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Int d = (i < m.cols()) ? snf.S(i, i) : Int(0);
    if (d == 0) {
      if (ub[i] != 0) return std::nullopt;
    } else {
      if (ub[i] % d != 0) return std::nullopt;
      y[i] = ub[i] / d;
    }
  }
  return snf.V.apply(y);
}

// Inverse of a square matrix with det = +-1 (integer entries guaranteed).
inline IntMatrix unimodular_inverse(const IntMatrix& m) {
  if (m.rows() != m.cols()) raise(Errc::InvalidInput, "inverse of non-square matrix");
  SmithForm snf = smith_normal_form(m);
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (snf.S(i, i) != 1) raise(Errc::InvalidInput, "matrix is not unimodular");
  return snf.V * snf.U;  // U m V = 1  =>  m^-1 = V U
}

// Fraction-free determinant (Bareiss).
inline Int det(const IntMatrix& m) {
  if (m.rows() != m.cols()) raise(Errc::InvalidInput, "determinant of non-square matrix");
  std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int prev = 1, sign = 1;
  for (std::size_t t = 0; t + 1 < n; ++t) {
    if (a(t, t) == 0) {
      std::size_t p = t + 1;
      while (p < n && a(p, t) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(t, p);
      sign = -sign;
    }
    for (std::size_t i = t + 1; i < n; ++i)
      for (std::size_t j = t + 1; j < n; ++j)
        a(i, j) = (a(t, t) * a(i, j) - a(i, t) * a(t, j)) / prev;
    prev = a(t, t);
  }
  return sign * a(n - 1, n - 1);
}

// v / gcd(entries), sign-normalized so the first nonzero entry is positive.
inline Vec primitive(const Vec& v) {
  if (is_zero(v)) raise(Errc::ZeroVector, "primitive of the zero vector");
  Int g = 0;
  for (const Int& x : v) g = gcd(g, x);
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  for (const Int& x : out) {
    if (x == 0) continue;
    if (x < 0) out = negated(std::move(out));
    break;
  }
  return out;
}

inline bool is_primitive(const Vec& v) {
  if (is_zero(v)) return false;
  Int g = 0;
  for (const Int& x : v) g = gcd(g, x);
  return g == 1;
}

}  // namespace qsdisc
