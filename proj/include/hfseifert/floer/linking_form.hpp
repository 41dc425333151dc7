#pragma once

// Linking form of coker(Q): lambda(x, y) = -x^T Q^{-1} y mod Z, stored as
// integers modulo the exponent of the group so the isometry search runs on
// machine words.

#include "hfseifert/floer/spinc.hpp"

#include <functional>

namespace hfs {

class LinkingForm {
 public:
  LinkingForm() = default;
  explicit LinkingForm(const IntMatrix& q) : cok_(q) {
    const auto& mods = cok_.moduli();
    exponent_ = 1;
    for (auto d : mods) exponent_ = std::lcm(exponent_, d);
    const RatMatrix inv = inverse(q);
    const std::size_t r = mods.size();
    gens_.resize(r);
    for (std::size_t i = 0; i < r; ++i) gens_[i] = cok_.generator(i);
    table_.assign(r, std::vector<std::int64_t>(r, 0));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        Rational v = -bilinear(inv, gens_[i], gens_[j]) * Rational(exponent_);
        if (!v.is_integer()) throw invariant_violation("linking form value has unexpected denominator");
        table_[i][j] = static_cast<std::int64_t>(mod(v.numerator(), Integer(exponent_)));
      }
  }

  const Cokernel& group() const { return cok_; }
  const std::vector<std::int64_t>& moduli() const { return cok_.moduli(); }
  std::int64_t order() const { return cok_.order(); }
  std::int64_t exponent() const { return exponent_; }

  /// lambda(e_i, e_j) as a rational in [0,1).
  Rational value(std::size_t i, std::size_t j) const { return Rational(Integer(table_[i][j]), Integer(exponent_)); }

  /// lambda(x, y) * exponent mod exponent, for Smith coordinates x, y.
  std::int64_t pair(const std::vector<std::int64_t>& x, const std::vector<std::int64_t>& y) const {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < y.size(); ++j) {
        if (y[j] == 0) continue;
        s = (s + static_cast<std::int64_t>((static_cast<__int128>(x[i] * y[j] % exponent_) * table_[i][j]) %
                                           exponent_)) %
            exponent_;
      }
    }
    return s;
  }

  /// The same group with the negated pairing (the form of -Y).
  LinkingForm negated() const {
    LinkingForm f = *this;
    for (auto& row : f.table_)
      for (auto& v : row) v = (exponent_ - v) % exponent_;
    return f;
  }

 private:
  Cokernel cok_;
  std::int64_t exponent_ = 1;
  std::vector<IntVector> gens_;
  std::vector<std::vector<std::int64_t>> table_;
};

inline LinkingForm linking_form(const IntMatrix& q) { return LinkingForm(q); }

/// An isometry given by the images of the Smith generators of the source.
struct FormIsomorphism {
  std::vector<std::vector<std::int64_t>> images;

  std::vector<std::int64_t> apply(const LinkingForm& target, const std::vector<std::int64_t>& x) const {
    const auto& mods = target.moduli();
    std::vector<std::int64_t> y(mods.size(), 0);
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = 0; j < mods.size(); ++j) y[j] = (y[j] + x[i] % mods[j] * images[i][j]) % mods[j];
    return y;
  }
};

/// All isometries F1 -> F2. Nondegeneracy makes any form-preserving
/// homomorphism injective, so equal orders give bijections.
inline std::vector<FormIsomorphism> form_isomorphisms(const LinkingForm& f1, const LinkingForm& f2,
                                                      std::int64_t size_limit = 10000) {
  if (f1.order() != f2.order()) return {};
  if (f1.order() > size_limit) throw unsupported_input("linking form larger than the isometry search bound");
  // Compare pairings on a common scale.
  const std::int64_t e = std::lcm(f1.exponent(), f2.exponent());
  const std::int64_t s1 = e / f1.exponent(), s2 = e / f2.exponent();

  const auto& m1 = f1.moduli();
  const auto& m2 = f2.moduli();
  const Cokernel& g2 = f2.group();
  const auto n2 = static_cast<std::size_t>(f2.order());

  // Candidate images per source generator: elements of order dividing d_i
  // with the right self-pairing.
  std::vector<std::vector<std::vector<std::int64_t>>> options(m1.size());
  for (std::size_t i = 0; i < m1.size(); ++i) {
    std::vector<std::int64_t> ei(m1.size(), 0);
    ei[i] = 1;
    const std::int64_t self = f1.pair(ei, ei) * s1 % e;
    for (std::size_t idx = 0; idx < n2; ++idx) {
      auto y = g2.coords_of_index(idx);
      bool ok = true;
      for (std::size_t j = 0; j < m2.size() && ok; ++j) ok = (y[j] * m1[i]) % m2[j] == 0;
      if (ok && f2.pair(y, y) * s2 % e == self) options[i].push_back(std::move(y));
    }
  }

  std::vector<FormIsomorphism> out;
  FormIsomorphism cur;
  cur.images.resize(m1.size());
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == m1.size()) {
      out.push_back(cur);
      return;
    }
    std::vector<std::int64_t> ei(m1.size(), 0);
    ei[i] = 1;
    for (const auto& y : options[i]) {
      bool ok = true;
      for (std::size_t l = 0; l < i && ok; ++l) {
        std::vector<std::int64_t> el(m1.size(), 0);
        el[l] = 1;
        ok = f1.pair(el, ei) * s1 % e == f2.pair(cur.images[l], y) * s2 % e;
      }
      if (!ok) continue;
      cur.images[i] = y;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace hfs
