#pragma once

// End-to-end report for small Seifert manifolds M(e0; r1, r2, r3): L-space
// status, whether the candidate family is exhaustive, per-candidate
// certificates, and planarity flags.

#include "hfseifert/contact/certificate.hpp"
#include "hfseifert/floer/embedding.hpp"
#include "hfseifert/lspace.hpp"
#include "hfseifert/parallel.hpp"

#include <optional>

namespace hfs {

struct ClassifyOptions {
  std::size_t max_candidates = 100000;
  unsigned jobs = 1;
  std::uint64_t embedding_budget = 5000000;
};

/// true / false / unknown.
using Flag = std::optional<bool>;

struct PlanarityFlags {
  /// Tight structures with zero maximal twisting are planar (k = 3).
  bool zero_twisting_tight_planar = true;
  Flag all_planar_on_m;
  Flag all_planar_on_minus_m;
  std::vector<std::string> notes;
};

struct ClassifyReport {
  SeifertData manifold;
  Rational euler;
  Integer h1;
  LSpaceVerdict lspace;
  /// Every tight structure on M has maximal twisting zero.
  bool zero_twisting = false;
  /// The candidate family covers every such structure.
  bool family_exhaustive = false;
  bool candidates_enumerated = false;
  std::optional<DTable> table;
  std::vector<CertificateReport> certificates;
  bool exists_nonzero = false;
  bool nonzero_on_spin = false;  // some Nonzero candidate may induce a spin structure
  bool conjugate_pairs = false;  // every candidate's conjugate is in the list
  PlanarityFlags planarity;
  std::vector<std::string> notes;
};

namespace detail {

// Stein fillings by the all-(<= -2) plumbing are non-planar when its form
// does not embed in a diagonal lattice. Support of each vector is at most
// |w_v|, so rank sum |w_v| decides embeddability in any rank.
inline Flag plumbing_filling_planar_obstruction(const SeifertData& side, std::uint64_t budget) {
  const PlumbingTree t = plumbing_tree(side);
  for (const auto& w : t.weights)
    if (w > -2) return std::nullopt;
  const IntMatrix q = t.intersection_matrix();
  Integer rank = 0;
  for (const auto& w : t.weights) rank -= w;
  const auto e = embeds_in_diagonal_bounded(q, static_cast<std::size_t>(to_int64(rank)), budget);
  if (!e) return std::nullopt;
  return !*e;
}

inline PlanarityFlags planarity(const SeifertData& m, bool lspace, std::uint64_t budget) {
  PlanarityFlags f;
  const SeifertData minus = reverse_orientation(m);
  if (!lspace) {
    f.all_planar_on_m = false;
    f.all_planar_on_minus_m = false;
    f.notes.push_back("not an L-space: both orientations carry non-planar contact structures");
    return f;
  }
  auto side_flag = [&](const SeifertData& s, const char* name) -> Flag {
    if (s.e0 >= -1 || s.e0 <= -3) return true;
    // e0 = -2: decided only when the plumbing filling is obstructed.
    const Flag obstructed = plumbing_filling_planar_obstruction(s, budget);
    if (obstructed && *obstructed) {
      f.notes.push_back(std::string(name) + ": plumbing form does not embed in a diagonal lattice");
      return false;
    }
    f.notes.push_back(std::string(name) + ": e0 = -2, planarity undecided");
    return std::nullopt;
  };
  f.all_planar_on_m = side_flag(m, "M");
  f.all_planar_on_minus_m = side_flag(minus, "-M");
  return f;
}

}  // namespace detail

inline ClassifyReport classify(const SeifertData& m, const ClassifyOptions& opt = {}) {
  if (m.k() != 3) throw unsupported_input("classify needs exactly three singular fibers, got " + m.str());
  ClassifyReport r;
  r.manifold = m;
  r.euler = euler_number(m);
  if (r.euler.sign() == 0) throw domain_error("e(M) = 0: " + m.str() + " is not a rational homology sphere");
  r.h1 = h1_order(m);
  r.lspace = is_lspace(m);
  r.zero_twisting = m.e0 >= 0 || (m.e0 == -1 && r.lspace.is_lspace);
  r.family_exhaustive = m.e0 == -1 && r.zero_twisting;
  r.planarity = detail::planarity(m, r.lspace.is_lspace, opt.embedding_budget);

  if (m.e0 != -1) {
    r.notes.push_back("candidate family needs e0 = -1; enumeration skipped");
    return r;
  }
  const auto cands = enumerate_candidates(m, opt.max_candidates);
  r.candidates_enumerated = true;
  if (r.euler.sign() > 0) {
    r.table = correction_terms(m);
  } else {
    r.notes.push_back("e(M) <= 0: certificates are not applicable");
  }
  const DTable* table = r.table ? &*r.table : nullptr;
  r.certificates = parallel_map<CertificateReport>(
      cands.size(), opt.jobs, [&](std::size_t i) { return tightness_certificate(m, cands[i], table); });

  r.conjugate_pairs = true;
  for (const auto& c : r.certificates) {
    if (c.conjugate_id >= r.certificates.size()) {
      r.conjugate_pairs = false;
      continue;
    }
    const auto& cc = r.certificates[c.conjugate_id];
    if (cc.conjugate_id != c.candidate_id || cc.d3 != c.d3 || cc.verdict != c.verdict)
      throw invariant_violation("conjugate candidates disagree for " + m.str());
    if (table) {
      std::vector<SpincLabel> conj;
      for (const auto& t : c.orbit.labels) conj.push_back(table->space.conjugate(t));
      std::sort(conj.begin(), conj.end());
      if (conj != cc.orbit.labels) throw invariant_violation("conjugate candidate orbits are not conjugate");
    }
    if (c.verdict == Verdict::nonzero) {
      r.exists_nonzero = true;
      r.nonzero_on_spin = r.nonzero_on_spin || c.orbit_has_spin;
    }
  }
  if (!r.family_exhaustive)
    r.notes.push_back("candidate family is not known to exhaust tight structures on this manifold");
  return r;
}

}  // namespace hfs
