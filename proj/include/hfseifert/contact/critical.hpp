#pragma once

// Comparison report for M_p = S^3_{p^2-p-1}(T_{p,p+1}): the plumbing
// d-table against the closed form from the torus knot, and the candidate
// certificates expressed in the torus-knot labels t_k.

#include "hfseifert/contact/classify.hpp"
#include "hfseifert/torusknot.hpp"

#include <map>

namespace hfs {

struct CriticalReport {
  std::int64_t p = 0;
  std::int64_t n = 0;  // p^2 - p - 1
  ClassifyReport classification;
  std::vector<Rational> torus_d;  // d(M_p, t_k), k = -(n-1)/2 .. (n-1)/2
  bool multiset_match = false;
  /// Isometries under which the two tables agree label by label.
  std::size_t consistent_isometries = 0;
  /// Plumbing label index -> torus labels k it corresponds to.
  std::map<std::size_t, std::set<std::int64_t>> label_to_k;
  Rational spin_d;
};

/// Torus labels k (as a set over consistent isometries) for a label set.
inline std::set<std::int64_t> torus_labels_of(const CriticalReport& r, const std::vector<SpincLabel>& labels) {
  std::set<std::int64_t> ks;
  const auto& table = *r.classification.table;
  for (const auto& t : labels) {
    auto it = r.label_to_k.find(table.space.index_of(t));
    if (it != r.label_to_k.end()) ks.insert(it->second.begin(), it->second.end());
  }
  return ks;
}

inline CriticalReport critical_report(std::int64_t p, const ClassifyOptions& opt = {}) {
  if (p < 3) throw domain_error("critical report needs p >= 3 (p = 2 gives a lens space)");
  if (p > 12) throw unsupported_input("critical report is limited to p <= 12");
  CriticalReport r;
  r.p = p;
  r.n = p * p - p - 1;
  const SeifertData m = torus_surgery_seifert(p, p + 1, r.n);
  r.classification = classify(m, opt);
  r.torus_d = d_critical_table(p);
  r.spin_d = spin_d(p);
  if (r.spin_d != d_critical_surgery(p, 0)) throw invariant_violation("spin_d disagrees with the torsion formula");

  const DTable& table = *r.classification.table;
  std::vector<Rational> a = table.values, b = r.torus_d;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  r.multiset_match = a == b;

  // X_p = n-framed knot: coker (n) with c_1(s_k) = 2k mod n.
  IntMatrix qx(1, 1);
  qx(0, 0) = r.n;
  const LinkingForm fx(qx);
  const LinkingForm fw = detail::table_form(table);
  const std::int64_t half = (r.n - 1) / 2;
  for (const auto& phi : form_isomorphisms(fx, fw)) {
    std::map<std::size_t, std::int64_t> assignment;
    bool ok = true;
    for (std::int64_t k = -half; k <= half && ok; ++k) {
      IntVector c{Integer(2 * k)};
      const auto target = phi.apply(fw, fx.group().coords(c));
      std::size_t hits = 0;
      for (const auto& t : table.space.labels()) {
        if (table.space.c1(t) != target) continue;
        ++hits;
        const std::size_t idx = table.space.index_of(t);
        ok = ok && table.values[idx] == r.torus_d[static_cast<std::size_t>(k + half)];
        assignment[idx] = k;
      }
      ok = ok && hits == 1;
    }
    if (!ok) continue;
    ++r.consistent_isometries;
    for (auto [idx, k] : assignment) r.label_to_k[idx].insert(k);
  }
  return r;
}

}  // namespace hfs
