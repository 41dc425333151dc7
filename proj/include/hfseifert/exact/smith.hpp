#pragma once

#include "hfseifert/exact/matrix.hpp"

#include <algorithm>

namespace hfs {

/// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ..., d_i >= 0.
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;

  std::vector<Integer> invariant_factors() const {
    std::vector<Integer> d;
    for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
    return d;
  }
};

namespace detail {

// Row operation r_dst += f * r_src on both the working matrix and U.
inline void add_row(IntMatrix& a, IntMatrix& u, std::size_t dst, std::size_t src, const Integer& f) {
  for (std::size_t j = 0; j < a.cols(); ++j) a(dst, j) += f * a(src, j);
  for (std::size_t j = 0; j < u.cols(); ++j) u(dst, j) += f * u(src, j);
}

inline void add_col(IntMatrix& a, IntMatrix& v, std::size_t dst, std::size_t src, const Integer& f) {
  for (std::size_t i = 0; i < a.rows(); ++i) a(i, dst) += f * a(i, src);
  for (std::size_t i = 0; i < v.rows(); ++i) v(i, dst) += f * v(i, src);
}

}  // namespace detail

/// Smith normal form with pivots of minimal absolute value.
inline SmithForm smith_form(const IntMatrix& input) {
  IntMatrix a = input;
  const std::size_t m = a.rows(), n = a.cols();
  IntMatrix u = IntMatrix::identity(m);
  IntMatrix v = IntMatrix::identity(n);
  const std::size_t r = std::min(m, n);

  for (std::size_t s = 0; s < r; ++s) {
    for (;;) {
      // Pivot: nonzero entry of least absolute value in the trailing block.
      std::size_t pi = m, pj = n;
      Integer best;
      for (std::size_t i = s; i < m; ++i)
        for (std::size_t j = s; j < n; ++j)
          if (a(i, j) != 0 && (pi == m || abs(a(i, j)) < best)) {
            best = abs(a(i, j));
            pi = i;
            pj = j;
          }
      if (pi == m) break;  // trailing block is zero
      a.swap_rows(s, pi);
      u.swap_rows(s, pi);
      a.swap_cols(s, pj);
      v.swap_cols(s, pj);

      bool clean = true;
      for (std::size_t i = s + 1; i < m; ++i) {
        if (a(i, s) == 0) continue;
        Integer q = floor_div(a(i, s), a(s, s));
        detail::add_row(a, u, i, s, -q);
        if (a(i, s) != 0) clean = false;
      }
      for (std::size_t j = s + 1; j < n; ++j) {
        if (a(s, j) == 0) continue;
        Integer q = floor_div(a(s, j), a(s, s));
        detail::add_col(a, v, j, s, -q);
        if (a(s, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Row and column are cleared; enforce divisibility into the rest.
      std::size_t bad_i = m;
      for (std::size_t i = s + 1; i < m && bad_i == m; ++i)
        for (std::size_t j = s + 1; j < n; ++j)
          if (a(i, j) % a(s, s) != 0) {
            bad_i = i;
            break;
          }
      if (bad_i == m) break;
      detail::add_row(a, u, s, bad_i, Integer(1));
    }
    if (a(s, s) < 0) {
      for (std::size_t j = 0; j < n; ++j) a(s, j) = -a(s, j);
      for (std::size_t j = 0; j < m; ++j) u(s, j) = -u(s, j);
    }
  }
  return {std::move(u), std::move(a), std::move(v)};
}

}  // namespace hfs
