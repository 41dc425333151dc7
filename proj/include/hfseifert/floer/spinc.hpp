#pragma once

// Spin^c structures on the boundary of a plumbing (or any 2-handlebody with
// invertible intersection form Q) as characteristic covectors modulo
// 2 * im(Q). Labels are coordinates in the Smith decomposition
// coker(Q) = (+)_i Z/d_i, restricted to the nontrivial factors.

#include "hfseifert/exact/smith.hpp"

#include <cmath>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace hfs {

/// coker(Q) for invertible Q, with coordinates taken from the Smith form.
class Cokernel {
 public:
  Cokernel() = default;
  explicit Cokernel(const IntMatrix& q) {
    if (!q.is_square()) throw domain_error("cokernel of a non-square matrix");
    const SmithForm snf = smith_form(q);
    for (std::size_t i = 0; i < q.rows(); ++i) {
      const Integer& d = snf.D(i, i);
      if (d == 0) throw domain_error("matrix is singular");
      if (d == 1) continue;
      rows_.push_back(i);
      moduli_.push_back(to_int64(d));
    }
    u_ = snf.U;
    const RatMatrix uinv = inverse(snf.U);
    uinv_ = IntMatrix(uinv.rows(), uinv.cols());
    for (std::size_t i = 0; i < uinv.rows(); ++i)
      for (std::size_t j = 0; j < uinv.cols(); ++j) uinv_(i, j) = uinv(i, j).numerator();
    order_ = 1;
    for (auto d : moduli_) order_ *= d;
  }

  std::size_t rank() const { return u_.rows(); }
  const std::vector<std::int64_t>& moduli() const { return moduli_; }
  std::int64_t order() const { return order_; }

  /// Smith coordinates of the class of x in Z^n / im(Q).
  std::vector<std::int64_t> coords(const IntVector& x) const {
    std::vector<std::int64_t> c(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      Integer s = 0;
      for (std::size_t j = 0; j < x.size(); ++j) s += u_(rows_[i], j) * x[j];
      c[i] = static_cast<std::int64_t>(mod(s, Integer(moduli_[i])));
    }
    return c;
  }

  /// A vector of Z^n whose class has the given coordinates.
  IntVector lift(const std::vector<std::int64_t>& c) const {
    IntVector e(rank(), Integer(0));
    for (std::size_t i = 0; i < rows_.size(); ++i) e[rows_[i]] = c[i];
    return mat_vec(uinv_, e);
  }

  /// Generator images of the cyclic summands as vectors of Z^n.
  IntVector generator(std::size_t i) const {
    std::vector<std::int64_t> c(rows_.size(), 0);
    c[i] = 1;
    return lift(c);
  }

  std::size_t index_of(const std::vector<std::int64_t>& c) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < c.size(); ++i)
      idx = idx * static_cast<std::size_t>(moduli_[i]) + static_cast<std::size_t>(c[i]);
    return idx;
  }

  std::vector<std::int64_t> coords_of_index(std::size_t idx) const {
    std::vector<std::int64_t> c(moduli_.size());
    for (std::size_t i = moduli_.size(); i-- > 0;) {
      c[i] = static_cast<std::int64_t>(idx % static_cast<std::size_t>(moduli_[i]));
      idx /= static_cast<std::size_t>(moduli_[i]);
    }
    return c;
  }

  /// Row i of U restricted to the nontrivial summands (used by hot loops).
  const IntMatrix& U() const { return u_; }
  const std::vector<std::size_t>& rows() const { return rows_; }

 private:
  IntMatrix u_, uinv_;
  std::vector<std::size_t> rows_;
  std::vector<std::int64_t> moduli_;
  std::int64_t order_ = 1;
};

struct SpincLabel {
  std::vector<std::int64_t> coords;

  friend bool operator==(const SpincLabel&, const SpincLabel&) = default;
  friend auto operator<=>(const SpincLabel&, const SpincLabel&) = default;

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords.size(); ++i) s += (i ? "," : "") + std::to_string(coords[i]);
    return s + ")";
  }
};

/// Moves K into the box w_v <= K_v <= -w_v with the local moves
/// K -> K +- 2 Q e_v, each of which strictly increases K^T Q^{-1} K.
/// Terminates for negative definite Q.
inline void reduce_to_box(const IntMatrix& q, IntVector& k) {
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t v = 0; v < k.size(); ++v) {
      const Integer& w = q(v, v);
      int dir = 0;
      if (k[v] > -w) dir = 1;
      else if (k[v] < w) dir = -1;
      if (dir == 0) continue;
      for (std::size_t i = 0; i < k.size(); ++i) k[i] += 2 * dir * q(i, v);
      moved = true;
    }
  }
}

class SpincSpace {
 public:
  SpincSpace() = default;
  explicit SpincSpace(IntMatrix q) : q_(std::move(q)), cok_(q_) {
    if (!q_.is_symmetric()) throw domain_error("spin^c labels need a symmetric form");
    definite_ = is_negative_definite(q_);
    if (definite_) {
      const RatMatrix inv = inverse(q_);
      approx_inv_.assign(q_.rows() * q_.rows(), 0.0L);
      for (std::size_t i = 0; i < q_.rows(); ++i)
        for (std::size_t j = 0; j < q_.rows(); ++j)
          approx_inv_[i * q_.rows() + j] = inv(i, j).numerator().convert_to<long double>() /
                                           inv(i, j).denominator().convert_to<long double>();
    }
    ref_.resize(q_.rows());
    for (std::size_t v = 0; v < q_.rows(); ++v) ref_[v] = mod(q_(v, v), Integer(2));
  }

  const IntMatrix& form() const { return q_; }
  const Cokernel& cokernel() const { return cok_; }
  std::size_t size() const { return static_cast<std::size_t>(cok_.order()); }

  bool is_characteristic(const IntVector& k) const {
    if (k.size() != q_.rows()) return false;
    for (std::size_t v = 0; v < k.size(); ++v)
      if (mod(k[v] - q_(v, v), Integer(2)) != 0) return false;
    return true;
  }

  SpincLabel label_of(const IntVector& k) const {
    if (!is_characteristic(k)) throw domain_error("covector is not characteristic");
    IntVector half(k.size());
    for (std::size_t v = 0; v < k.size(); ++v) half[v] = (k[v] - ref_[v]) / 2;
    return {cok_.coords(half)};
  }

  SpincLabel label_at(std::size_t index) const { return {cok_.coords_of_index(index)}; }
  std::size_t index_of(const SpincLabel& t) const { return cok_.index_of(t.coords); }

  std::vector<SpincLabel> labels() const {
    std::vector<SpincLabel> out;
    out.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) out.push_back(label_at(i));
    return out;
  }

  /// Canonical characteristic representative (box-reduced when Q < 0).
  IntVector representative(const SpincLabel& t) const {
    IntVector k = cok_.lift(t.coords);
    for (std::size_t v = 0; v < k.size(); ++v) k[v] = ref_[v] + 2 * k[v];
    if (definite_) {
      // Lifts can be of size |det|; jump near the minimum of -K^2 first so
      // the local moves only have a little left to do.
      const std::size_t n = k.size();
      std::vector<long double> kd(n);
      for (std::size_t v = 0; v < n; ++v) kd[v] = k[v].convert_to<long double>();
      IntVector x(n);
      bool any = false;
      for (std::size_t i = 0; i < n; ++i) {
        long double y = 0;
        for (std::size_t j = 0; j < n; ++j) y -= approx_inv_[i * n + j] * kd[j];
        if (!(std::fabs(y) < 1e17L)) y = 0;
        x[i] = Integer(static_cast<long long>(std::llround(y / 2)));
        any = any || x[i] != 0;
      }
      if (any)
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) k[i] += 2 * q_(i, j) * x[j];
      reduce_to_box(q_, k);
    }
    return k;
  }

  SpincLabel conjugate(const SpincLabel& t) const {
    IntVector k = representative(t);
    for (auto& x : k) x = -x;
    return label_of(k);
  }

  bool is_self_conjugate(const SpincLabel& t) const { return conjugate(t) == t; }

  /// c_1(t) as a class of coker(Q), in Smith coordinates.
  std::vector<std::int64_t> c1(const SpincLabel& t) const { return cok_.coords(representative(t)); }

  /// Reference covector (w_v mod 2) used to anchor labels.
  const IntVector& reference() const { return ref_; }

 private:
  IntMatrix q_;
  Cokernel cok_;
  IntVector ref_;
  std::vector<long double> approx_inv_;
  bool definite_ = false;
};

/// All spin^c labels of an invertible symmetric form, in index order.
inline std::vector<SpincLabel> spinc_labels(const IntMatrix& q) { return SpincSpace(q).labels(); }

}  // namespace hfs
