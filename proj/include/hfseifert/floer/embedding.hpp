#pragma once

// Embedding of a negative definite form into the diagonal lattice -I_N.
// Searches for v_1..v_n in Z^N with sum_a v_i[a] v_j[a] = -Q_ij, one vertex
// at a time. Coordinates untouched by earlier vectors are interchangeable,
// so fresh coordinates are filled in order with positive, non-increasing
// entries.

#include "hfseifert/exact/matrix.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace hfs {

namespace detail {

class DiagonalEmbedder {
 public:
  DiagonalEmbedder(const IntMatrix& q, std::size_t rank, std::uint64_t budget)
      : n_(q.rows()), rank_(rank), budget_(budget) {
    // Visit vertices so that each (after the first) meets an earlier one
    // when possible; inner-product constraints then prune early.
    std::vector<bool> seen(n_, false);
    for (std::size_t start = 0; start < n_; ++start) {
      if (seen[start]) continue;
      std::vector<std::size_t> queue{start};
      seen[start] = true;
      for (std::size_t h = 0; h < queue.size(); ++h) {
        order_.push_back(queue[h]);
        for (std::size_t v = 0; v < n_; ++v)
          if (!seen[v] && q(queue[h], v) != 0) {
            seen[v] = true;
            queue.push_back(v);
          }
      }
    }
    norm_.resize(n_);
    target_.assign(n_, std::vector<std::int64_t>(n_));
    for (std::size_t i = 0; i < n_; ++i) {
      norm_[i] = to_int64(-q(order_[i], order_[i]));
      for (std::size_t j = 0; j < n_; ++j) target_[i][j] = to_int64(-q(order_[i], order_[j]));
    }
    vecs_.assign(n_, std::vector<std::int64_t>(rank_, 0));
  }

  /// true / false, or nullopt when the node budget ran out.
  std::optional<bool> run() {
    bool found = place(0, 0);
    if (exhausted_) return std::nullopt;
    return found;
  }

 private:
  bool place(std::size_t i, std::size_t used) {
    if (i == n_) return true;
    auto& v = vecs_[i];
    std::fill(v.begin(), v.end(), 0);
    return fill_used(i, used, 0, norm_[i]);
  }

  // Chooses entries on the already-used coordinates 0..used-1.
  bool fill_used(std::size_t i, std::size_t used, std::size_t a, std::int64_t left) {
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return false;
    }
    if (a == used) return consistent(i, used) && fill_fresh(i, used, left, left);
    auto& v = vecs_[i];
    for (std::int64_t x = 0; x * x <= left; x = x > 0 ? -x : -x + 1) {
      v[a] = x;
      if (fill_used(i, used, a + 1, left - x * x)) return true;
      if (exhausted_) return false;
    }
    v[a] = 0;
    return false;
  }

  // Fresh coordinates: positive, non-increasing values in order.
  bool fill_fresh(std::size_t i, std::size_t a, std::int64_t left, std::int64_t cap) {
    if (left == 0) return place(i + 1, a);
    if (a == rank_) return false;
    auto& v = vecs_[i];
    for (std::int64_t x = 1; x * x <= left && x * x <= cap; ++x) {
      v[a] = x;
      if (fill_fresh(i, a + 1, left - x * x, x * x)) return true;
      if (exhausted_) return false;
    }
    v[a] = 0;
    return false;
  }

  bool consistent(std::size_t i, std::size_t used) const {
    // Earlier vectors vanish on coordinates >= used.
    for (std::size_t j = 0; j < i; ++j) {
      std::int64_t s = 0;
      for (std::size_t a = 0; a < used; ++a) s += vecs_[i][a] * vecs_[j][a];
      if (s != target_[i][j]) return false;
    }
    return true;
  }

  std::size_t n_, rank_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  std::vector<std::size_t> order_;
  std::vector<std::int64_t> norm_;
  std::vector<std::vector<std::int64_t>> target_;
  std::vector<std::vector<std::int64_t>> vecs_;
};

}  // namespace detail

/// Decides embedding into -I_N within a node budget; nullopt if exceeded.
inline std::optional<bool> embeds_in_diagonal_bounded(const IntMatrix& q, std::size_t rank, std::uint64_t budget) {
  if (!q.is_symmetric() || !is_negative_definite(q))
    throw domain_error("diagonal embedding needs a negative definite symmetric form");
  return detail::DiagonalEmbedder(q, rank, budget).run();
}

/// Whether Q embeds into the negative diagonal lattice of rank N.
inline bool embeds_in_diagonal(const IntMatrix& q, std::size_t rank) {
  return *embeds_in_diagonal_bounded(q, rank, UINT64_MAX);
}

}  // namespace hfs
