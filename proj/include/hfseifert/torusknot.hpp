#pragma once

// Torus knot route to correction terms: symmetrized Alexander polynomial,
// torsion coefficients, and the closed forms for d of L(n,1) and of
// S^3_{p^2-p-1}(T_{p,p+1}).

#include "hfseifert/exact/rational.hpp"

#include <cstdint>
#include <numeric>
#include <vector>

namespace hfs {

/// Delta(t) = a_0 + sum_{i>=1} a_i (t^i + t^-i).
struct AlexanderData {
  std::int64_t p = 0, q = 0;
  std::int64_t n = 0;            // (p-1)(q-1)/2
  std::vector<std::int64_t> a;   // a_0 .. a_n

  std::int64_t at_one() const {
    std::int64_t s = a.empty() ? 0 : a[0];
    for (std::size_t i = 1; i < a.size(); ++i) s += 2 * a[i];
    return s;
  }
};

/// (1 - t^pq)(1 - t) / ((1 - t^p)(1 - t^q)), recentred.
inline AlexanderData alexander_torus(std::int64_t p, std::int64_t q) {
  if (p < 2 || q <= p) throw domain_error("alexander_torus needs 2 <= p < q");
  if (std::gcd(p, q) != 1) throw domain_error("alexander_torus needs coprime p, q");
  const std::int64_t pq = p * q;
  if (pq > 1000000) throw unsupported_input("torus knot too large for dense polynomial arithmetic");

  // numerator = 1 - t - t^pq + t^(pq+1)
  std::vector<std::int64_t> num(static_cast<std::size_t>(pq + 2), 0);
  num[0] = 1;
  num[1] = -1;
  num[pq] -= 1;
  num[pq + 1] += 1;
  // denominator = 1 - t^p - t^q + t^(p+q); constant term 1 so division is exact in Z
  std::vector<std::int64_t> den(static_cast<std::size_t>(p + q + 1), 0);
  den[0] = 1;
  den[p] -= 1;
  den[q] -= 1;
  den[p + q] += 1;

  const std::size_t deg = static_cast<std::size_t>(pq + 1 - p - q);
  std::vector<std::int64_t> quot(deg + 1, 0);
  std::vector<std::int64_t> rem = num;
  for (std::size_t i = 0; i <= deg; ++i) {
    const std::int64_t c = rem[i];
    quot[i] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < den.size(); ++j) rem[i + j] -= c * den[j];
  }
  for (auto x : rem)
    if (x != 0) throw invariant_violation("torus knot Alexander division left a remainder");

  AlexanderData out;
  out.p = p;
  out.q = q;
  out.n = (p - 1) * (q - 1) / 2;
  if (static_cast<std::int64_t>(deg) != 2 * out.n) throw invariant_violation("Alexander degree mismatch");
  for (std::int64_t i = 0; i < out.n; ++i)
    if (quot[static_cast<std::size_t>(i)] != quot[deg - static_cast<std::size_t>(i)])
      throw invariant_violation("Alexander polynomial is not symmetric");
  out.a.assign(quot.begin() + out.n, quot.end());
  return out;
}

/// r_j = sum_{i>=1} i a_{i+|j|}, for j = 0 .. n (zero beyond).
inline std::vector<Integer> torsion_coefficients(const AlexanderData& d) {
  std::vector<Integer> r(static_cast<std::size_t>(d.n + 1), 0);
  for (std::int64_t j = 0; j <= d.n; ++j)
    for (std::int64_t i = 1; i + j <= d.n; ++i) r[static_cast<std::size_t>(j)] += Integer(i * d.a[static_cast<std::size_t>(i + j)]);
  return r;
}

inline std::vector<Integer> torsion_coefficients(std::int64_t p, std::int64_t q) {
  return torsion_coefficients(alexander_torus(p, q));
}

inline Integer torsion_coefficient(const std::vector<Integer>& r, std::int64_t j) {
  const auto aj = static_cast<std::size_t>(j < 0 ? -j : j);
  return aj < r.size() ? r[aj] : Integer(0);
}

/// d(L(n,1), k) = ((n - 2j)^2 - n) / (4n), j = k mod n.
inline Rational d_lens_n1(const Integer& n, const Integer& k) {
  if (n < 1) throw domain_error("d_lens_n1 needs n >= 1");
  const Integer j = mod(k, n);
  const Integer m = n - 2 * j;
  return Rational(m * m - n, 4 * n);
}

/// d(S^3_{p^2-p-1}(T_{p,p+1}), t_k) for |k| <= (p^2-p-1)/2.
inline Rational d_critical_surgery(std::int64_t p, std::int64_t k) {
  if (p < 2) throw domain_error("d_critical_surgery needs p >= 2");
  const std::int64_t n = p * p - p - 1;
  if (2 * (k < 0 ? -k : k) > n) throw domain_error("label k outside |k| <= (p^2-p-1)/2");
  const auto r = torsion_coefficients(p, p + 1);
  return d_lens_n1(n, k) - Rational(2 * torsion_coefficient(r, k));
}

/// The whole table, k = -(n-1)/2 .. (n-1)/2 (n = p^2-p-1 is odd).
inline std::vector<Rational> d_critical_table(std::int64_t p) {
  if (p < 2) throw domain_error("d_critical_table needs p >= 2");
  const std::int64_t n = p * p - p - 1;
  const auto r = torsion_coefficients(p, p + 1);
  std::vector<Rational> out;
  for (std::int64_t k = -(n - 1) / 2; k <= (n - 1) / 2; ++k)
    out.push_back(d_lens_n1(n, k) - Rational(2 * torsion_coefficient(r, k)));
  return out;
}

/// d(S^3_n(T_{p,q}), t_k) for n >= 2g - 1, k = -(n-1)/2 .. n/2 (the
/// same large-surgery formula with the torsion of T_{p,q}).
inline std::vector<Rational> d_large_surgery_table(const AlexanderData& a, std::int64_t n) {
  if (n < 2 * a.n - 1 || n < 1) throw unsupported_input("surgery coefficient below 2g - 1");
  const auto r = torsion_coefficients(a);
  std::vector<Rational> out;
  for (std::int64_t k = -(n - 1) / 2; k <= n / 2; ++k)
    out.push_back(d_lens_n1(n, k) - Rational(2 * torsion_coefficient(r, k)));
  return out;
}

/// Correction term of M_p at its spin structure.
inline Rational spin_d(std::int64_t p) {
  if (p < 2) throw domain_error("spin_d needs p >= 2");
  return p % 2 == 0 ? Rational(-(3 * p + 2), 4) : Rational(-(p + 1), 4);
}

}  // namespace hfs
