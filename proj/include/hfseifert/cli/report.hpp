#pragma once

// JSON encodings of the library's reports. Every rational and big integer
// is a string ("p/q" or "n"); key order is fixed so output is byte-stable.

#include "hfseifert/contact/critical.hpp"

#include "json.hpp"

namespace hfs::json {

using Json = nlohmann::ordered_json;

inline constexpr const char* schema_version = "1.0";

inline Json str(const Rational& x) { return x.str(); }
inline Json str(const Integer& x) { return x.str(); }

inline Json flag(const Flag& f) { return f ? Json(*f) : Json(nullptr); }

inline Json ints(const std::vector<std::int64_t>& v) {
  Json a = Json::array();
  for (auto x : v) a.push_back(x);
  return a;
}

inline Json big_ints(const std::vector<Integer>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

inline Json rationals(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

inline Json labels(const std::vector<SpincLabel>& v) {
  Json a = Json::array();
  for (const auto& t : v) a.push_back(t.str());
  return a;
}

inline Json seifert(const SeifertData& m) {
  Json j;
  j["text"] = m.str();
  j["e0"] = m.e0.str();
  j["r"] = rationals(m.r);
  return j;
}

inline Json header(const std::string& command, const std::string& input) {
  Json j;
  j["schema_version"] = schema_version;
  j["command"] = command;
  j["input"] = input;
  return j;
}

inline Json witness(const std::optional<RealizabilityWitness>& w) {
  if (!w) return nullptr;
  Json j;
  j["m"] = w->m.str();
  j["a"] = w->a.str();
  return j;
}

inline Json lspace(const SeifertData& m, const LSpaceVerdict& v) {
  Json j;
  j["is_lspace"] = v.is_lspace;
  j["reason"] = to_string(v.reason);
  Json w;
  w["positive"] = witness(v.witness_positive);
  w["negative"] = witness(v.witness_negative);
  j["witnesses"] = w;
  if (m.k() >= 3) {
    j["transverse_contact"] = {{"positive", has_positive_transverse_contact(m)},
                               {"negative", has_positive_transverse_contact(reverse_orientation(m))}};
    j["transverse_foliation"] = has_transverse_foliation(m);
  } else {
    j["transverse_contact"] = nullptr;
    j["transverse_foliation"] = nullptr;
  }
  return j;
}

inline Json plumbing(const PlumbingTree& t) {
  Json j;
  j["weights"] = big_ints(t.weights);
  Json legs = Json::array();
  for (const auto& leg : t.legs) {
    Json l = Json::array();
    for (auto v : leg) l.push_back(v);
    legs.push_back(l);
  }
  j["legs"] = legs;
  j["bad_vertices"] = bad_vertex_count(t);
  return j;
}

inline Json dtable(const DTable& t) {
  Json j;
  j["orientation"] = to_string(t.orientation);
  j["plumbing_boundary"] = t.manifold
                               ? Json(t.orientation == Orientation::reversed ? reverse_orientation(*t.manifold).str()
                                                                             : t.manifold->str())
                               : Json(nullptr);
  j["plumbing"] = plumbing(t.tree);
  j["group"] = ints(t.space.cokernel().moduli());
  j["size"] = t.size();
  Json rows = Json::array();
  for (std::size_t i = 0; i < t.size(); ++i) {
    const SpincLabel l = t.space.label_at(i);
    Json r;
    r["label"] = l.str();
    r["d"] = t.values[i].str();
    r["conjugate"] = t.space.conjugate(l).str();
    r["self_conjugate"] = t.space.is_self_conjugate(l);
    r["maximizer"] = big_ints(t.maximizers[i]);
    rows.push_back(r);
  }
  j["values"] = rows;
  return j;
}

inline Json diagram(const ContactDiagram& d) {
  Json comps = Json::array();
  for (const auto& c : d.components) {
    Json k;
    k["tb"] = c.tb.str();
    k["rot"] = c.rot.str();
    k["coefficient"] = c.coefficient;
    k["stabilizations"] = {{"positive", c.positives}, {"negative", c.negatives}};
    k["chain"] = c.chain < 0 ? Json(nullptr) : Json(c.chain);
    k["position"] = c.position;
    comps.push_back(k);
  }
  Json rows = Json::array();
  for (std::size_t i = 0; i < d.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < d.size(); ++j) row.push_back(d.linking(i, j).str());
    rows.push_back(row);
  }
  return {{"components", comps}, {"linking", rows}};
}

inline Json d3_details(const ContactDiagram& d) {
  Json j;
  j["components"] = d.size();
  if (d.size() == 0) {
    j["c2"] = "0";
    j["signature"] = 0;
    j["det"] = "1";
  } else {
    j["c2"] = quad_value(d.linking, d.rotation()).str();
    j["signature"] = signature(d.linking);
    j["det"] = determinant(d.linking).str();
  }
  j["b2"] = d.size();
  j["q"] = d.q();
  j["d3"] = d3(d).str();
  return j;
}

inline Json certificate(const CertificateReport& c, const DTable* table, bool with_orbit_d = true) {
  Json j;
  j["id"] = c.candidate_id;
  j["conjugate_id"] = c.conjugate_id;
  j["choice"] = ints(c.choice);
  j["d3"] = c.d3.str();
  j["verdict"] = to_string(c.verdict);
  if (table) {
    j["orbit"] = labels(c.orbit.labels);
    if (with_orbit_d) j["orbit_d"] = rationals(c.orbit_d);
    j["orbit_has_spin"] = c.orbit_has_spin;
    j["isometries"] = c.orbit.isometries;
  }
  return j;
}

inline Json planarity(const PlanarityFlags& p) {
  Json j;
  j["zero_twisting_tight_planar"] = p.zero_twisting_tight_planar;
  j["all_planar_on_M"] = flag(p.all_planar_on_m);
  j["all_planar_on_minus_M"] = flag(p.all_planar_on_minus_m);
  j["notes"] = p.notes;
  return j;
}

inline Json classification(const ClassifyReport& r, bool list_all) {
  Json j;
  j["normalized"] = seifert(r.manifold);
  j["e"] = r.euler.str();
  j["h1"] = r.h1.str();
  j["lspace"] = lspace(r.manifold, r.lspace);
  j["zero_twisting"] = r.zero_twisting;
  j["family_exhaustive"] = r.family_exhaustive;
  j["candidates_enumerated"] = r.candidates_enumerated;
  j["candidate_count"] = r.certificates.size();
  const DTable* table = r.table ? &*r.table : nullptr;
  std::map<std::string, std::size_t> tally;
  Json cands = Json::array();
  for (const auto& c : r.certificates) {
    ++tally[to_string(c.verdict)];
    if (list_all || c.verdict != Verdict::inconclusive) cands.push_back(certificate(c, table));
  }
  Json t;
  for (const char* v : {"Nonzero", "Ambiguous", "Inconclusive", "NotApplicable"}) t[v] = tally[v];
  j["verdict_counts"] = t;
  j["candidates"] = cands;
  j["summary"] = {{"exists_nonzero", r.exists_nonzero},
                  {"nonzero_on_spin", r.nonzero_on_spin},
                  {"conjugate_pairs", r.conjugate_pairs}};
  j["planarity"] = planarity(r.planarity);
  j["notes"] = r.notes;
  return j;
}

inline Json alexander(const AlexanderData& a) {
  Json j;
  j["p"] = a.p;
  j["q"] = a.q;
  j["n"] = a.n;
  j["coefficients"] = ints(a.a);
  j["delta_at_one"] = a.at_one();
  j["torsion"] = big_ints(torsion_coefficients(a));
  return j;
}

inline Json critical(const CriticalReport& r, bool list_all) {
  Json j;
  j["p"] = r.p;
  j["n"] = r.n;
  j["spin_d"] = r.spin_d.str();
  Json torus = Json::array();
  const std::int64_t half = (r.n - 1) / 2;
  for (std::int64_t k = -half; k <= half; ++k) {
    torus.push_back({{"k", k}, {"d", r.torus_d[static_cast<std::size_t>(k + half)].str()}});
  }
  j["torus_route"] = torus;
  j["plumbing_route"] = dtable(*r.classification.table);
  j["multiset_match"] = r.multiset_match;
  j["consistent_isometries"] = r.consistent_isometries;
  j["classification"] = classification(r.classification, list_all);
  // Torus labels of the passing candidates.
  Json passing = Json::array();
  for (const auto& c : r.classification.certificates) {
    if (c.verdict != Verdict::nonzero) continue;
    Json ks = Json::array();
    for (auto k : torus_labels_of(r, c.orbit.labels)) ks.push_back(k);
    passing.push_back({{"id", c.candidate_id}, {"d3", c.d3.str()}, {"torus_labels", ks},
                       {"spin", c.orbit_has_spin}});
  }
  j["nonzero_candidates"] = passing;
  j["spin_label_excluded"] = !r.classification.nonzero_on_spin;
  return j;
}

}  // namespace hfs::json
