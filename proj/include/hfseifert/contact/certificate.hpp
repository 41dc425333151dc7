#pragma once

// Nonvanishing certificate for the contact invariant: with e(M) > 0, a
// candidate whose d3 equals d(M, t) on every spin^c structure t it can
// induce has nonzero contact invariant. The induced structure is located
// by matching linking forms: any isometry coker(Q_X) -> H^2(M) carries
// the class of the rotation covector to c_1 of the structure.

#include "hfseifert/contact/diagram.hpp"
#include "hfseifert/floer/dinvariant.hpp"
#include "hfseifert/floer/linking_form.hpp"

#include <set>

namespace hfs {

struct SpincOrbit {
  std::vector<SpincLabel> labels;  // sorted
  std::size_t isometries = 0;
};

namespace detail {

inline void require_table_for(const SeifertData& m, const DTable& table) {
  if (!table.manifold || *table.manifold != m)
    throw invariant_violation("d-table does not describe " + m.str() + " with this orientation");
}

// Linking form of the manifold a table describes.
inline LinkingForm table_form(const DTable& table) {
  LinkingForm f(table.space.form());
  return table.orientation == Orientation::reversed ? f.negated() : f;
}

}  // namespace detail

/// Labels of `table` whose c_1 is the image of [rot] under some isometry.
inline SpincOrbit identify_spinc(const ContactDiagram& diagram, const SeifertData& m, const DTable& table) {
  detail::require_table_for(m, table);
  const LinkingForm fx(diagram.linking);
  const LinkingForm fw = detail::table_form(table);
  const auto isos = form_isomorphisms(fx, fw);
  if (isos.empty()) throw invariant_violation("no linking-form isometry: diagram does not present " + m.str());

  const auto rot_class = fx.group().coords(diagram.rotation());
  std::set<std::vector<std::int64_t>> images;
  for (const auto& phi : isos) images.insert(phi.apply(fw, rot_class));

  SpincOrbit orbit;
  orbit.isometries = isos.size();
  for (const auto& t : table.space.labels())
    if (images.count(table.space.c1(t))) orbit.labels.push_back(t);
  if (orbit.labels.empty()) throw invariant_violation("rotation class is not a first Chern class");
  return orbit;
}

enum class Verdict { nonzero, inconclusive, ambiguous, not_applicable };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::nonzero: return "Nonzero";
    case Verdict::inconclusive: return "Inconclusive";
    case Verdict::ambiguous: return "Ambiguous";
    case Verdict::not_applicable: return "NotApplicable";
  }
  return "?";
}

struct CertificateReport {
  std::size_t candidate_id = 0;
  std::size_t conjugate_id = 0;
  std::vector<std::int64_t> choice;
  Rational d3;
  SpincOrbit orbit;
  std::vector<Rational> orbit_d;  // d(M, t) for t in orbit.labels
  bool orbit_has_spin = false;    // some orbit label is self-conjugate
  Verdict verdict = Verdict::not_applicable;
};

/// Certificate for a diagram presenting M. `table` must describe M itself.
inline CertificateReport tightness_certificate(const SeifertData& m, const ContactDiagram& diagram,
                                               const DTable* table) {
  CertificateReport r;
  r.d3 = d3(diagram);
  if (euler_number(m).sign() <= 0) {
    r.verdict = Verdict::not_applicable;
    return r;
  }
  if (!table) throw domain_error("certificate for e(M) > 0 needs the d-table of M");
  r.orbit = identify_spinc(diagram, m, *table);
  std::size_t hits = 0;
  for (const auto& t : r.orbit.labels) {
    r.orbit_d.push_back(table->d(t));
    hits += r.orbit_d.back() == r.d3;
    r.orbit_has_spin = r.orbit_has_spin || table->space.is_self_conjugate(t);
  }
  if (hits == r.orbit.labels.size())
    r.verdict = Verdict::nonzero;
  else if (hits == 0)
    r.verdict = Verdict::inconclusive;
  else
    r.verdict = Verdict::ambiguous;
  if (r.verdict == Verdict::nonzero && euler_number(m).sign() <= 0)
    throw invariant_violation("Nonzero verdict without e(M) > 0");
  return r;
}

inline CertificateReport tightness_certificate(const SeifertData& m, const Candidate& c, const DTable* table) {
  CertificateReport r = tightness_certificate(m, c.diagram, table);
  r.candidate_id = c.id;
  r.conjugate_id = c.conjugate_id;
  r.choice = c.choice;
  return r;
}

}  // namespace hfs
