#pragma once

// Seifert fibered rational homology spheres M(e0; r1, ..., rk): the
// normalized invariants, orientation reversal, |H1|, the star-shaped
// plumbing tree, and Seifert data for integral surgeries on torus knots.

#include "hfseifert/exact/continued_fraction.hpp"
#include "hfseifert/exact/matrix.hpp"

#include <algorithm>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hfs {

/// Normalized Seifert invariants: 0 < r_k <= ... <= r_1 < 1.
struct SeifertData {
  Integer e0 = 0;
  std::vector<Rational> r;

  std::size_t k() const { return r.size(); }

  friend bool operator==(const SeifertData&, const SeifertData&) = default;

  /// "e0;r1,r2,...,rk"
  std::string str() const {
    std::string s = e0.str() + ";";
    for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + r[i].str();
    return s;
  }
};

/// Reduces each slope mod 1 into (0,1), moving integer parts into e0;
/// integral slopes are dropped. Result sorted non-increasing.
inline SeifertData normalize(Integer e0, const std::vector<Rational>& slopes) {
  SeifertData m;
  for (const auto& s : slopes) {
    Integer fl = s.floor();
    e0 += fl;
    Rational rest = s - Rational(fl);
    if (rest.sign() != 0) m.r.push_back(rest);
  }
  m.e0 = std::move(e0);
  // Equal rationals have equal (p, q) in lowest terms, so value order is
  // already the canonical tie-break.
  std::sort(m.r.begin(), m.r.end(), [](const Rational& a, const Rational& b) { return a > b; });
  return m;
}

/// Parses "e0;r1,...,rk" (also "e0" or "e0;" for k = 0) and normalizes.
inline SeifertData parse_seifert(std::string_view text) {
  auto semi = text.find(';');
  std::string_view head = text.substr(0, semi);
  Integer e0 = parse_integer(head);
  std::vector<Rational> slopes;
  if (semi != std::string_view::npos) {
    std::string_view rest = text.substr(semi + 1);
    while (!rest.empty()) {
      auto comma = rest.find(',');
      std::string_view item = rest.substr(0, comma);
      if (item.empty()) throw parse_error("empty slope in '" + std::string(text) + "'");
      slopes.push_back(Rational::parse(item));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
      if (rest.empty()) throw parse_error("trailing comma in '" + std::string(text) + "'");
    }
  }
  return normalize(std::move(e0), slopes);
}

inline Rational euler_number(const SeifertData& m) {
  Rational e(m.e0);
  for (const auto& x : m.r) e += x;
  return e;
}

/// -M(e0; r1..rk) = M(-e0-k; 1-r1, ..., 1-rk).
inline SeifertData reverse_orientation(const SeifertData& m) {
  std::vector<Rational> s;
  s.reserve(m.k());
  for (const auto& x : m.r) s.push_back(Rational(1) - x);
  return normalize(-m.e0 - Integer(m.k()), s);
}

/// |H1(M)| = q1 ... qk |e(M)|.
inline Integer h1_order(const SeifertData& m) {
  Rational e = euler_number(m);
  if (e.sign() == 0) throw domain_error("e(M) = 0: " + m.str() + " is not a rational homology sphere");
  Rational order = abs(e);
  for (const auto& x : m.r) order *= Rational(x.denominator());
  if (!order.is_integer()) throw invariant_violation("non-integral |H1| for " + m.str());
  return order.numerator();
}

/// Star-shaped plumbing graph; vertex 0 is the center.
struct PlumbingTree {
  std::vector<Integer> weights;
  std::vector<std::vector<std::size_t>> legs;  // vertex indices, center outward

  std::size_t size() const { return weights.size(); }

  std::vector<std::pair<std::size_t, std::size_t>> edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (const auto& leg : legs) {
      std::size_t prev = 0;
      for (std::size_t v : leg) {
        e.emplace_back(prev, v);
        prev = v;
      }
    }
    return e;
  }

  std::vector<std::size_t> degrees() const {
    std::vector<std::size_t> deg(size(), 0);
    for (auto [a, b] : edges()) {
      ++deg[a];
      ++deg[b];
    }
    return deg;
  }

  IntMatrix intersection_matrix() const {
    IntMatrix q(size(), size());
    for (std::size_t v = 0; v < size(); ++v) q(v, v) = weights[v];
    for (auto [a, b] : edges()) q(a, b) = q(b, a) = 1;
    return q;
  }
};

inline PlumbingTree plumbing_tree(const SeifertData& m) {
  PlumbingTree t;
  t.weights.push_back(m.e0);
  for (const auto& x : m.r) {
    std::vector<std::size_t> leg;
    for (auto& a : neg_cf(-Rational(1) / x)) {
      leg.push_back(t.weights.size());
      t.weights.push_back(std::move(a));
    }
    t.legs.push_back(std::move(leg));
  }
  return t;
}

/// Vertices with weight > -degree.
inline std::size_t bad_vertex_count(const PlumbingTree& t) {
  auto deg = t.degrees();
  std::size_t bad = 0;
  for (std::size_t v = 0; v < t.size(); ++v)
    if (t.weights[v] > -Integer(deg[v])) ++bad;
  return bad;
}

namespace detail {

// Returns (x, y) with a x + b y = gcd(a, b) for a, b > 0.
inline std::pair<Integer, Integer> bezout(const Integer& a, const Integer& b) {
  Integer old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  return {old_s, old_t};
}

}  // namespace detail

/// Seifert data of S^3_n(T_{p,q}).
///
/// S^3 is M(0; b1/p, b2/q) with q b1 + p b2 = -1, the torus knot is a
/// regular fiber whose fibration framing is pq, and n-surgery adds the
/// fiber 1/(pq - n). The result is checked against |H1| = |n| and the
/// expected exceptional-fiber orders before it is returned.
inline SeifertData torus_surgery_seifert(const Integer& p, const Integer& q, const Integer& n) {
  if (p < 2 || q <= p) throw domain_error("torus knot needs 2 <= p < q");
  if (gcd(p, q) != 1) throw domain_error("torus knot parameters must be coprime");
  if (n == 0) throw domain_error("0-surgery on a torus knot is not a rational homology sphere");
  if (n == p * q) throw domain_error("pq-surgery on T(p,q) is reducible");

  auto [x, y] = detail::bezout(q, p);  // q x + p y = 1
  Rational b1(-x, p), b2(-y, q);
  SeifertData m = normalize(0, {b1, b2, Rational(Integer(1), p * q - n)});

  if (h1_order(m) != abs(n))
    throw invariant_violation("torus surgery: |H1| != |n| for " + m.str());
  if ((n == p * q + 1 || n == p * q - 1) && m.k() > 2)
    throw invariant_violation("torus surgery: pq +- 1 surgery is not a lens space");
  if (n == p * q - p - q) {
    std::vector<Integer> dens;
    for (const auto& r : m.r) dens.push_back(r.denominator());
    std::sort(dens.begin(), dens.end());
    std::vector<Integer> want{p, q, p + q};
    std::sort(want.begin(), want.end());
    if (dens != want) throw invariant_violation("torus surgery: unexpected fiber orders");
  }
  return m;
}

}  // namespace hfs
