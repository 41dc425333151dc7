#pragma once

// Dense matrices over exact rings plus the exact linear algebra the rest of
// the library needs: determinants (Bareiss), rational inverses and solves,
// quadratic values K^T Q^{-1} K, Sylvester definiteness and signature.

#include "hfseifert/exact/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace hfs {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw domain_error("ragged matrix initializer");
      for (const auto& x : row) data_.push_back(x);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  static Matrix diagonal(const std::vector<T>& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  /// Principal submatrix on the index set `idx` (in the given order).
  Matrix principal(const std::vector<std::size_t>& idx) const {
    Matrix m(idx.size(), idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = 0; j < idx.size(); ++j) m(i, j) = (*this)(idx[i], idx[j]);
    return m;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw domain_error("matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
      os << (i ? ",[" : "[");
      for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j);
      os << ']';
    }
    os << ']';
    return os.str();
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;
using IntVector = std::vector<Integer>;

inline RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

inline IntVector mat_vec(const IntMatrix& a, const IntVector& x) {
  if (a.cols() != x.size()) throw domain_error("matrix-vector shape mismatch");
  IntVector y(a.rows(), Integer(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
  return y;
}

/// Determinant by fraction-free Bareiss elimination.
inline Integer determinant(IntMatrix a) {
  if (!a.is_square()) throw domain_error("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

/// Exact inverse over Q; throws domain_error when singular.
inline RatMatrix inverse(const IntMatrix& m) {
  if (!m.is_square()) throw domain_error("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix a = to_rational(m);
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).sign() == 0) ++p;
    if (p == n) throw domain_error("matrix is singular");
    a.swap_rows(c, p);
    inv.swap_rows(c, p);
    const Rational pivot = a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) /= pivot;
      inv(c, j) /= pivot;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c).sign() == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

/// x^T A y for a rational matrix and integer vectors.
inline Rational bilinear(const RatMatrix& a, const IntVector& x, const IntVector& y) {
  Rational s;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (x[i] == 0) continue;
    Rational row;
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (y[j] != 0) row += a(i, j) * Rational(y[j]);
    s += Rational(x[i]) * row;
  }
  return s;
}

/// K^T Q^{-1} K for invertible symmetric Q.
inline Rational quad_value(const IntMatrix& q, const IntVector& k) {
  if (!q.is_square() || q.rows() != k.size()) throw domain_error("quad_value shape mismatch");
  return bilinear(inverse(q), k, k);
}

/// Sylvester's criterion: (-1)^j det(Q_{1..j}) > 0 for every leading minor.
inline bool is_negative_definite(const IntMatrix& q) {
  if (!q.is_symmetric()) return false;
  for (std::size_t j = 1; j <= q.rows(); ++j) {
    std::vector<std::size_t> idx(j);
    for (std::size_t i = 0; i < j; ++i) idx[i] = i;
    Integer d = determinant(q.principal(idx));
    if ((j % 2 == 1 && d >= 0) || (j % 2 == 0 && d <= 0)) return false;
  }
  return true;
}

struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
  std::int64_t signature() const {
    return static_cast<std::int64_t>(positive) - static_cast<std::int64_t>(negative);
  }
};

/// Inertia of a symmetric matrix by rational congruence diagonalization.
inline Inertia inertia(const IntMatrix& q) {
  if (!q.is_symmetric()) throw domain_error("inertia of a non-symmetric matrix");
  RatMatrix a = to_rational(q);
  std::size_t n = a.rows();
  Inertia out;
  std::vector<bool> done(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t piv = n;
    for (std::size_t i = 0; i < n && piv == n; ++i)
      if (!done[i] && a(i, i).sign() != 0) piv = i;
    if (piv == n) {
      // All remaining diagonal entries vanish: find an off-diagonal entry and
      // replace row/col i by row/col i + row/col j (a congruence).
      std::size_t pi = n, pj = n;
      for (std::size_t i = 0; i < n && pi == n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (!done[i] && !done[j] && i != j && a(i, j).sign() != 0) {
            pi = i;
            pj = j;
            break;
          }
      if (pi == n) break;  // the rest is the zero form
      for (std::size_t k = 0; k < n; ++k) a(pi, k) += a(pj, k);
      for (std::size_t k = 0; k < n; ++k) a(k, pi) += a(k, pj);
      piv = pi;
    }
    const Rational p = a(piv, piv);
    done[piv] = true;
    (p.sign() > 0 ? out.positive : out.negative) += 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || a(i, piv).sign() == 0) continue;
      const Rational f = a(i, piv) / p;
      for (std::size_t j = 0; j < n; ++j) a(i, j) -= f * a(piv, j);
      for (std::size_t j = 0; j < n; ++j) a(j, i) -= f * a(j, piv);
    }
  }
  out.zero = n - out.positive - out.negative;
  return out;
}

inline std::int64_t signature(const IntMatrix& q) { return inertia(q).signature(); }

}  // namespace hfs
