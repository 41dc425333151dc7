#pragma once

// Correction terms of boundaries of negative definite plumbings with at
// most one bad vertex:
//
//   d(dW, t) = max { (K^T Q^{-1} K + n) / 4 : K characteristic, [K] = t }.
//
// A maximizer satisfies w_v <= K_v <= -w_v at every vertex (otherwise
// K -> K -+ 2 Q e_v increases K^2), so the search runs over that box. It is
// a depth-first enumeration with an exact lower bound on -K^2: for a fixed
// prefix K_A, min over real completions of K^T (-Q)^{-1} K equals
// K_A^T (-Q_AA)^{-1} K_A, updated one coordinate at a time through the
// leading principal minors of -Q. All arithmetic is integral.

#include "hfseifert/floer/spinc.hpp"
#include "hfseifert/seifert.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <type_traits>

namespace hfs {

/// Which manifold a table's values describe relative to its plumbing W.
enum class Orientation {
  plumbing_boundary,  // values are d(dW, t)
  reversed,           // values are d(-dW, t) = -d(dW, t)
};

inline const char* to_string(Orientation o) {
  return o == Orientation::plumbing_boundary ? "boundary" : "reversed";
}

struct DTable {
  PlumbingTree tree;
  SpincSpace space;
  Orientation orientation = Orientation::plumbing_boundary;
  /// The Seifert manifold the values belong to, when built from one.
  std::optional<SeifertData> manifold;
  std::vector<Rational> values;     // indexed by label index
  std::vector<IntVector> maximizers;  // lexicographically least maximizing K

  std::size_t size() const { return values.size(); }
  const Rational& d(const SpincLabel& t) const { return values.at(space.index_of(t)); }

  /// Same table describing the opposite orientation.
  DTable reversed() const {
    DTable r = *this;
    r.orientation = orientation == Orientation::plumbing_boundary ? Orientation::reversed
                                                                  : Orientation::plumbing_boundary;
    if (manifold) r.manifold = reverse_orientation(*manifold);
    for (auto& v : r.values) v = -v;
    return r;
  }
};

namespace detail {

using Wide = __int128;

inline bool lex_less(const IntVector& a, const IntVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Precomputed, order-permuted data for the box search.
struct BoxProblem {
  std::size_t n = 0;
  std::vector<std::size_t> order;        // search position -> vertex
  std::vector<Integer> delta;            // leading minors of -Q (permuted), delta[0] = 1
  std::vector<std::vector<Integer>> u;   // u[j][l], l < j
  std::vector<Integer> lo, hi;           // box per search position
  std::vector<Integer> ref;              // parity reference per search position
  std::vector<std::vector<std::int64_t>> label_rows;  // per summand, per position
  std::vector<std::int64_t> moduli;
};

inline BoxProblem make_problem(const SpincSpace& space, const Integer& scale) {
  const IntMatrix& q = space.form();
  BoxProblem p;
  p.n = q.rows();
  p.order.resize(p.n);
  std::iota(p.order.begin(), p.order.end(), std::size_t{0});
  std::stable_sort(p.order.begin(), p.order.end(),
                   [&](std::size_t a, std::size_t b) { return abs(q(a, a)) > abs(q(b, b)); });

  IntMatrix g(p.n, p.n);
  for (std::size_t i = 0; i < p.n; ++i)
    for (std::size_t j = 0; j < p.n; ++j) g(i, j) = -q(p.order[i], p.order[j]);

  p.delta.assign(p.n + 1, Integer(1));
  p.u.resize(p.n);
  for (std::size_t j = 0; j < p.n; ++j) {
    std::vector<std::size_t> prefix(j);
    std::iota(prefix.begin(), prefix.end(), std::size_t{0});
    std::vector<std::size_t> prefix1 = prefix;
    prefix1.push_back(j);
    p.delta[j + 1] = determinant(g.principal(prefix1));
    if (j == 0) continue;
    // u_j = g_{j,A} adj(G_AA) = delta_j * g_{j,A} G_AA^{-1}
    const RatMatrix inv = inverse(g.principal(prefix));
    p.u[j].resize(j);
    for (std::size_t l = 0; l < j; ++l) {
      Rational s;
      for (std::size_t m = 0; m < j; ++m) s += Rational(g(j, m)) * inv(m, l);
      s *= Rational(p.delta[j]);
      if (!s.is_integer()) throw invariant_violation("adjugate entry is not integral");
      p.u[j][l] = s.numerator();
    }
  }

  p.lo.resize(p.n);
  p.hi.resize(p.n);
  p.ref.resize(p.n);
  for (std::size_t j = 0; j < p.n; ++j) {
    const Integer w = q(p.order[j], p.order[j]);
    p.lo[j] = scale * w;
    p.hi[j] = -scale * w;
    p.ref[j] = space.reference()[p.order[j]];
  }

  const Cokernel& cok = space.cokernel();
  p.moduli = cok.moduli();
  p.label_rows.resize(p.moduli.size());
  for (std::size_t i = 0; i < p.moduli.size(); ++i) {
    p.label_rows[i].resize(p.n);
    for (std::size_t j = 0; j < p.n; ++j)
      p.label_rows[i][j] =
          static_cast<std::int64_t>(mod(cok.U()(cok.rows()[i], p.order[j]), Integer(p.moduli[i])));
  }
  return p;
}

template <class Int>
Int narrow(const Integer& x) {
  if constexpr (std::is_same_v<Int, Integer>) {
    return x;
  } else {
    // Callers have verified the magnitude bound.
    const bool neg = x < 0;
    Integer m = neg ? Integer(-x) : x;
    Int r = 0;
    Int base = 1;
    while (m != 0) {
      r += base * static_cast<Int>(static_cast<std::uint64_t>(m & Integer(0xFFFFFFFFu)));
      m >>= 32;
      base <<= 32;
    }
    return neg ? -r : r;
  }
}

template <class Int>
Integer widen(const Int& x) {
  if constexpr (std::is_same_v<Int, Integer>) {
    return x;
  } else {
    const bool neg = x < 0;
    unsigned __int128 m = neg ? static_cast<unsigned __int128>(-x) : static_cast<unsigned __int128>(x);
    Integer r = 0;
    int shift = 0;
    while (m != 0) {
      r += Integer(static_cast<std::uint64_t>(m & 0xFFFFFFFFu)) << shift;
      m >>= 32;
      shift += 32;
    }
    return neg ? Integer(-r) : r;
  }
}

template <class Int>
Int floor_div_t(const Int& a, const Int& b) {  // b > 0
  Int q = a / b;
  if (a % b != 0 && a < 0) q -= 1;
  return q;
}

template <class Int>
Int isqrt_t(const Int& x) {
  if constexpr (std::is_same_v<Int, Integer>) {
    return boost::multiprecision::sqrt(x);
  } else {
    Int r = static_cast<Int>(std::sqrt(static_cast<long double>(x)));
    while (r > 0 && r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
  }
}

template <class Int>
class BoxSearch {
 public:
  BoxSearch(const BoxProblem& p, std::vector<Integer> seed_n, std::vector<IntVector> seed_k)
      : p_(p), best_k_(std::move(seed_k)) {
    const std::size_t n = p.n;
    delta_.resize(n + 1);
    for (std::size_t j = 0; j <= n; ++j) delta_[j] = narrow<Int>(p.delta[j]);
    u_.resize(n);
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& x : p.u[j]) u_[j].push_back(narrow<Int>(x));
    lo_.resize(n);
    hi_.resize(n);
    ref_.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
      lo_[j] = narrow<Int>(p.lo[j]);
      hi_[j] = narrow<Int>(p.hi[j]);
      ref_[j] = narrow<Int>(p.ref[j]);
    }
    for (auto& x : seed_n) best_n_.push_back(narrow<Int>(x));
    k_.assign(n, Int(0));
    partial_.assign(n + 1, std::vector<std::int64_t>(p.moduli.size(), 0));
    refresh_threshold();
  }

  void run() { descend(0, Int(0)); }

  std::vector<Integer> best_n() const {
    std::vector<Integer> out;
    for (const auto& x : best_n_) out.push_back(widen(x));
    return out;
  }
  const std::vector<IntVector>& best_k() const { return best_k_; }
  std::uint64_t leaves() const { return leaves_; }

 private:
  void refresh_threshold() { threshold_ = *std::max_element(best_n_.begin(), best_n_.end()); }

  void descend(std::size_t j, const Int& n_prev) {
    const std::size_t n = p_.n;
    if (j == n) {
      leaf(n_prev);
      return;
    }
    Int c = 0;
    for (std::size_t l = 0; l < j; ++l) c += u_[j][l] * k_[l];
    const Int& dprev = delta_[j];
    const Int& dcur = delta_[j + 1];
    const Int& dlast = delta_[n];
    const std::size_t labels = p_.moduli.size();
    // n_next <= B is |s| <= sqrt(B dprev - n_prev dcur): only that window of
    // the box can beat the current threshold.
    const Int bound = floor_div_t<Int>(threshold_ * dcur, dlast);
    const Int room = bound * dprev - n_prev * dcur;
    if (room < 0) return;
    const Int r = isqrt_t<Int>(room);
    Int first = std::max(lo_[j], -floor_div_t<Int>(r - c, dprev));
    const Int last = std::min(hi_[j], floor_div_t<Int>(c + r, dprev));
    if ((first - lo_[j]) % 2 != 0) first += 1;
    for (Int kv = first; kv <= last; kv += 2) {
      const Int s = dprev * kv - c;
      const Int n_next = (n_prev * dcur + s * s) / dprev;
      // Lower bound n_next / dcur against the worst label's best threshold_ / dlast.
      if (n_next * dlast > threshold_ * dcur) continue;
      k_[j] = kv;
      const Int half = (kv - ref_[j]) / 2;
      for (std::size_t i = 0; i < labels; ++i) {
        const std::int64_t m = p_.moduli[i];
        std::int64_t h = static_cast<std::int64_t>(half % static_cast<Int>(m));
        std::int64_t t = (partial_[j][i] + (p_.label_rows[i][j] * h) % m) % m;
        if (t < 0) t += m;
        partial_[j + 1][i] = t;
      }
      descend(j + 1, n_next);
    }
  }

  void leaf(const Int& value) {
    ++leaves_;
    std::size_t idx = 0;
    for (std::size_t i = 0; i < p_.moduli.size(); ++i)
      idx = idx * static_cast<std::size_t>(p_.moduli[i]) + static_cast<std::size_t>(partial_[p_.n][i]);
    if (value > best_n_[idx]) return;
    IntVector k(p_.n);
    for (std::size_t j = 0; j < p_.n; ++j) k[p_.order[j]] = widen(k_[j]);
    if (value == best_n_[idx] && !lex_less(k, best_k_[idx])) return;
    const bool was_threshold = best_n_[idx] == threshold_;
    best_n_[idx] = value;
    best_k_[idx] = std::move(k);
    if (was_threshold) refresh_threshold();
  }

  const BoxProblem& p_;
  std::vector<Int> delta_;
  std::vector<std::vector<Int>> u_;
  std::vector<Int> lo_, hi_, ref_;
  std::vector<Int> best_n_;
  std::vector<IntVector> best_k_;
  std::vector<Int> k_;
  std::vector<std::vector<std::int64_t>> partial_;
  Int threshold_ = 0;
  std::uint64_t leaves_ = 0;
};

// Whether every intermediate of the search fits comfortably in 128 bits.
inline bool fits_wide(const BoxProblem& p, const Integer& max_seed_n) {
  const Integer limit = Integer(1) << 120;
  Integer worst = 0;
  const Integer& dlast = p.delta[p.n];
  for (std::size_t j = 0; j < p.n; ++j) {
    Integer bound_k = std::max(abs(p.lo[j]), abs(p.hi[j]));
    Integer c = 0;
    for (std::size_t l = 0; l < j; ++l) c += abs(p.u[j][l]) * std::max(abs(p.lo[l]), abs(p.hi[l]));
    Integer s = p.delta[j] * bound_k + c;
    Integer n_prev = max_seed_n * p.delta[j] / dlast + 1;
    Integer n_next = (n_prev * p.delta[j + 1] + s * s) / p.delta[j] + 1;
    for (const Integer& x : {Integer(s * s), Integer(n_prev * p.delta[j + 1]), Integer(n_next * dlast),
                             Integer(max_seed_n * p.delta[j + 1]), Integer(c * 2),
                             Integer((max_seed_n * p.delta[j + 1] / dlast + 1) * p.delta[j])})
      worst = std::max(worst, x);
  }
  return worst < limit;
}

}  // namespace detail

/// Table of max (K^2 + n)/4 over the box scale*w_v <= K_v <= -scale*w_v.
/// scale must be odd; scale = 1 is the standard (complete) box.
inline DTable d_invariants_in_box(const PlumbingTree& tree, const Integer& scale) {
  if (scale < 1 || scale % 2 == 0) throw domain_error("box scale must be a positive odd integer");
  const IntMatrix q = tree.intersection_matrix();
  if (!is_negative_definite(q)) throw domain_error("plumbing form is not negative definite");
  if (bad_vertex_count(tree) > 1)
    throw unsupported_input("plumbing has two or more bad vertices; the maximization formula is not applied");

  DTable table;
  table.tree = tree;
  table.space = SpincSpace(q);
  const std::size_t labels = table.space.size();
  if (labels > 2000000) throw unsupported_input("more than 2e6 spin^c structures");
  const std::size_t n = q.rows();

  if (n == 0) {
    table.values = {Rational(0)};
    table.maximizers = {IntVector{}};
    return table;
  }

  const Integer det = abs(determinant(q));
  const RatMatrix qinv = inverse(q);

  // Seeds: the box-reduced representative of every label.
  std::vector<Integer> seed_n(labels);
  std::vector<IntVector> seed_k(labels);
  for (std::size_t i = 0; i < labels; ++i) {
    IntVector k = table.space.representative(table.space.label_at(i));
    Rational f = -bilinear(qinv, k, k);  // K^T (-Q)^{-1} K
    Rational scaled = f * Rational(det);
    if (!scaled.is_integer()) throw invariant_violation("seed value is not integral after scaling");
    seed_n[i] = scaled.numerator();
    seed_k[i] = std::move(k);
  }
  const Integer max_seed = *std::max_element(seed_n.begin(), seed_n.end());

  const detail::BoxProblem problem = detail::make_problem(table.space, scale);
  if (problem.delta[n] != det) throw invariant_violation("leading minor mismatch");

  std::vector<Integer> best_n;
  if (detail::fits_wide(problem, max_seed)) {
    detail::BoxSearch<detail::Wide> search(problem, seed_n, seed_k);
    search.run();
    best_n = search.best_n();
    table.maximizers = search.best_k();
  } else {
    detail::BoxSearch<Integer> search(problem, seed_n, seed_k);
    search.run();
    best_n = search.best_n();
    table.maximizers = search.best_k();
  }

  table.values.resize(labels);
  for (std::size_t i = 0; i < labels; ++i) {
    // K^2 = -best/det
    table.values[i] = (Rational(Integer(n)) - Rational(best_n[i], det)) / Rational(4);
  }
  return table;
}

/// Correction terms of dW_T for a negative definite tree with <= 1 bad vertex.
inline DTable d_invariants(const PlumbingTree& tree) { return d_invariants_in_box(tree, 1); }

/// d(M, t) for every spin^c structure of M, computed on whichever of +-M
/// bounds a negative definite plumbing and negated when that is -M.
inline DTable correction_terms(const SeifertData& m) {
  const Rational e = euler_number(m);
  if (e.sign() == 0) throw domain_error("e(M) = 0: " + m.str() + " is not a rational homology sphere");
  if (e.sign() < 0) {
    DTable t = d_invariants(plumbing_tree(m));
    t.manifold = m;
    return t;
  }
  const SeifertData minus = reverse_orientation(m);
  DTable t = d_invariants(plumbing_tree(minus));
  t.manifold = minus;
  return t.reversed();
}

}  // namespace hfs
