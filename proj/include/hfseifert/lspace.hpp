#pragma once

// L-space decision for Seifert fibered rational homology spheres via the
// existence of transverse contact structures on M and -M, together with
// the transverse-foliation criterion used as an independent cross-check.

#include "hfseifert/seifert.hpp"

#include <optional>
#include <string>

namespace hfs {

/// Coprime m > a > 0 with r1 < a/m, r2 < (m-a)/m, r_i < 1/m (i >= 3).
struct RealizabilityWitness {
  Integer m;
  Integer a;
  friend bool operator==(const RealizabilityWitness&, const RealizabilityWitness&) = default;
};

inline bool witness_holds(const std::vector<Rational>& gamma, const RealizabilityWitness& w) {
  if (!(w.m > w.a && w.a > 0) || gcd(w.m, w.a) != 1) return false;
  if (gamma.size() < 2) return false;
  if (!(gamma[0] < Rational(w.a, w.m))) return false;
  if (!(gamma[1] < Rational(w.m - w.a, w.m))) return false;
  for (std::size_t i = 2; i < gamma.size(); ++i)
    if (!(gamma[i] < Rational(Integer(1), w.m))) return false;
  return true;
}

/// Lexicographically least (m, a) realizing gamma, if any. The search is
/// complete: m r_3 < 1 bounds m.
inline std::optional<RealizabilityWitness> realizability_witness(const std::vector<Rational>& gamma) {
  for (const auto& x : gamma)
    if (x.sign() <= 0 || x >= Rational(1))
      throw domain_error("realizability: entry " + x.str() + " outside (0,1)");
  if (gamma.size() < 3)
    throw unsupported_input("realizability search needs at least three fibers");
  // m < 1/r_3, i.e. m <= ceil(1/r_3) - 1.
  const Integer m_max = (Rational(1) / gamma[2]).ceil() - 1;
  for (Integer m = 2; m <= m_max; ++m) {
    // r1 < a/m  <=>  a > m r1 ; r2 < (m-a)/m  <=>  a < m (1 - r2)
    Integer a_lo = (Rational(m) * gamma[0]).floor() + 1;
    for (Integer a = a_lo < 1 ? Integer(1) : a_lo; a < m; ++a) {
      RealizabilityWitness w{m, a};
      if (gcd(m, a) == 1 && witness_holds(gamma, w)) return w;
      if (!(Rational(a) < Rational(m) * (Rational(1) - gamma[1]))) break;
    }
  }
  return std::nullopt;
}

/// Positive contact structure transverse to the fibration exists.
inline bool has_positive_transverse_contact(const SeifertData& m) {
  if (m.k() <= 2) return euler_number(m).sign() < 0;
  if (m.e0 <= -2) return true;
  if (m.e0 == -1) return realizability_witness(m.r).has_value();
  return false;
}

/// Foliation transverse to the fibration exists. Defined for k >= 3 only.
inline bool has_transverse_foliation(const SeifertData& m) {
  if (m.k() <= 2)
    throw unsupported_input("transverse-foliation criterion is not applied to lens spaces (k <= 2)");
  if (euler_number(m).sign() == 0) throw domain_error("e(M) = 0: not a rational homology sphere");
  const Integer k(m.k());
  if (-k + 2 <= m.e0 && m.e0 <= -2) return true;
  if (m.e0 == -1 && realizability_witness(m.r)) return true;
  if (m.e0 == -k + 1 && realizability_witness(reverse_orientation(m).r)) return true;
  return false;
}

enum class LSpaceReason {
  e0_shortcut,          // e0 >= 0 or e0 <= -k
  lens_space,           // k <= 2
  transverse_both_sides,
  no_transverse_positive,  // M itself carries none
  no_transverse_negative,  // -M carries none
};

inline const char* to_string(LSpaceReason r) {
  switch (r) {
    case LSpaceReason::e0_shortcut: return "E0Shortcut";
    case LSpaceReason::lens_space: return "LensSpace";
    case LSpaceReason::transverse_both_sides: return "TransverseBothSides";
    case LSpaceReason::no_transverse_positive: return "NoTransverseOnSide(+)";
    case LSpaceReason::no_transverse_negative: return "NoTransverseOnSide(-)";
  }
  return "?";
}

struct LSpaceVerdict {
  bool is_lspace = false;
  LSpaceReason reason = LSpaceReason::lens_space;
  std::optional<RealizabilityWitness> witness_positive;  // for M
  std::optional<RealizabilityWitness> witness_negative;  // for -M
};

inline LSpaceVerdict is_lspace(const SeifertData& m) {
  if (euler_number(m).sign() == 0) throw domain_error("e(M) = 0: " + m.str() + " is not a rational homology sphere");
  LSpaceVerdict v;
  if (m.k() <= 2) {
    v.is_lspace = true;
    v.reason = LSpaceReason::lens_space;
    return v;
  }
  const SeifertData minus = reverse_orientation(m);
  if (m.e0 == -1) v.witness_positive = realizability_witness(m.r);
  if (minus.e0 == -1) v.witness_negative = realizability_witness(minus.r);

  const bool plus_side = has_positive_transverse_contact(m);
  const bool minus_side = has_positive_transverse_contact(minus);
  v.is_lspace = !(plus_side && minus_side);

  const bool shortcut = m.e0 >= 0 || m.e0 <= -Integer(m.k());
  if (shortcut && !v.is_lspace)
    throw invariant_violation("e0 shortcut disagrees with transverse criterion for " + m.str());

  if (!v.is_lspace)
    v.reason = LSpaceReason::transverse_both_sides;
  else if (shortcut)
    v.reason = LSpaceReason::e0_shortcut;
  else
    v.reason = plus_side ? LSpaceReason::no_transverse_negative : LSpaceReason::no_transverse_positive;
  return v;
}

}  // namespace hfs
