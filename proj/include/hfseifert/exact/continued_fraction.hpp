#pragma once

#include "hfseifert/exact/rational.hpp"

#include <vector>

namespace hfs {

/// Negative continued fraction x = a_0 - 1/(a_1 - 1/(... - 1/a_m)) with
/// every a_j <= -2. Requires x < -1; the expansion is unique.
inline std::vector<Integer> neg_cf(Rational x) {
  if (x >= Rational(-1)) throw domain_error("neg_cf requires x < -1, got " + x.str());
  std::vector<Integer> out;
  for (;;) {
    Integer a = x.floor();
    out.push_back(a);
    if (x == Rational(a)) return out;
    x = Rational(1) / (Rational(a) - x);
  }
}

/// a_0 - 1/(a_1 - 1/(... - 1/a_m)).
inline Rational eval_cf(const std::vector<Integer>& coeffs) {
  if (coeffs.empty()) throw domain_error("eval_cf of an empty sequence");
  Rational acc(coeffs.back());
  for (auto it = coeffs.rbegin() + 1; it != coeffs.rend(); ++it) {
    if (acc.sign() == 0) throw domain_error("eval_cf: zero intermediate denominator");
    acc = Rational(*it) - Rational(1) / acc;
  }
  return acc;
}

}  // namespace hfs
