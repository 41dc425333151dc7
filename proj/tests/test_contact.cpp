#include "hfseifert/contact/classify.hpp"
#include "hfseifert/contact/critical.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

using namespace hfs;

namespace {

Rational q(long n, long d) { return Rational(Integer(n), Integer(d)); }
SeifertData M(const char* s) { return parse_seifert(s); }

SeifertData random_e0_minus_one(std::mt19937_64& rng, long max_den) {
  std::vector<Rational> r;
  for (int i = 0; i < 3; ++i) {
    long d = 2 + static_cast<long>(rng() % static_cast<unsigned long>(max_den - 1));
    long n = 1 + static_cast<long>(rng() % static_cast<unsigned long>(d - 1));
    r.push_back(q(n, d));
  }
  return normalize(-1, r);
}

}  // namespace

TEST(Chain, Examples) {
  EXPECT_EQ(ding_geiges_chain(q(-4, 3)), (std::vector<ChainLink>{{-3, 1}, {-2, 0}, {-2, 0}}));
  EXPECT_EQ(ding_geiges_chain(Rational(-5)), (std::vector<ChainLink>{{-6, 4}}));
  EXPECT_EQ(ding_geiges_chain(Rational(-2)), (std::vector<ChainLink>{{-3, 1}}));
  EXPECT_THROW(ding_geiges_chain(Rational(-1)), domain_error);
  EXPECT_THROW(ding_geiges_chain(q(1, 2)), domain_error);
}

TEST(Chain, ExpandsTheSmoothCoefficient) {
  // Contact coefficient r on a tb = -1 knot is smooth coefficient r - 1.
  for (long n = 2; n <= 15; ++n)
    for (long d = 1; d < n; ++d) {
      if (std::gcd(n, d) != 1) continue;
      const Rational slope(Integer(-n), Integer(d));
      std::vector<Integer> a;
      for (const auto& l : ding_geiges_chain(slope)) {
        a.push_back(l.framing);
        EXPECT_LE(l.framing, -2);
        EXPECT_EQ(Integer(l.stabilizations), abs(l.framing + 2));
      }
      EXPECT_EQ(eval_cf(a), slope - Rational(1));
    }
}

TEST(Candidates, Counts) {
  EXPECT_EQ(candidate_count(M("-1;1/2,1/2,1/2")), 8);
  EXPECT_EQ(enumerate_candidates(M("-1;1/2,1/2,1/2")).size(), 8u);
  EXPECT_EQ(candidate_count(M("-1;3/4,1/5,1/9")), 90);
  EXPECT_EQ(enumerate_candidates(M("-1;3/4,1/5,1/9")).size(), 90u);
  EXPECT_THROW(enumerate_candidates(M("-2;1/2,1/2,1/2")), unsupported_input);
  EXPECT_THROW(enumerate_candidates(M("-1")), unsupported_input);
  EXPECT_THROW(enumerate_candidates(M("-1;3/4,1/5,1/9"), 10), unsupported_input);
}

TEST(Candidates, Structure) {
  const auto cands = enumerate_candidates(M("-1;3/4,1/5,1/9"));
  for (const auto& c : cands) {
    const auto& d = c.diagram;
    ASSERT_EQ(d.size(), 7u);
    EXPECT_EQ(d.q(), 2u);
    EXPECT_NO_THROW(d.validate());
    EXPECT_EQ(d.components[0].coefficient, 1);
    EXPECT_EQ(d.components[0].tb, -1);
    EXPECT_EQ(d.linking(0, 1), -1);
    EXPECT_EQ(signature(d.linking), -3);
    EXPECT_EQ(cands[c.conjugate_id].conjugate_id, c.id);
    for (std::size_t j = 0; j < c.choice.size(); ++j) EXPECT_EQ(cands[c.conjugate_id].choice[j], -c.choice[j]);
  }
  EXPECT_EQ(cands.front().choice, (std::vector<std::int64_t>{-1, 0, 0, -4, -8}));
  EXPECT_EQ(cands.back().choice, (std::vector<std::int64_t>{1, 0, 0, 4, 8}));
}

TEST(Candidates, PresentationSoundness) {
  std::mt19937_64 rng(73);
  int checked = 0;
  for (int it = 0; it < 300; ++it) {
    const auto m = random_e0_minus_one(rng, 12);
    if (m.k() < 1 || euler_number(m).sign() == 0) continue;
    if (candidate_count(m) > 2000) continue;
    const auto cands = enumerate_candidates(m);
    for (const auto& c : cands) {
      ASSERT_EQ(abs(determinant(c.diagram.linking)), h1_order(m)) << m.str();
      EXPECT_EQ(d3(c.diagram), d3(cands[c.conjugate_id].diagram));
    }
    ++checked;
  }
  EXPECT_GT(checked, 100);
}

TEST(D3, Anchors) {
  EXPECT_EQ(d3(ContactDiagram{}), Rational(0));
  // One tb = -1 unknot with contact (-1)-surgery: framing -2, c = 0,
  // sigma = -1, b2 = 1.
  ContactDiagram one;
  one.components.push_back(LegendrianUnknot{});
  one.linking = IntMatrix(1, 1);
  one.linking(0, 0) = -2;
  EXPECT_EQ(d3(one), q(1, 4));
  ContactDiagram sing = one;
  sing.linking(0, 0) = 0;
  EXPECT_THROW(d3(sing), domain_error);
}

TEST(D3, CriticalFamilyValues) {
  // p = 4: sigma = -3, b2 = 7, c^2 = 49/11 - 12.
  const auto c4 = enumerate_candidates(torus_surgery_seifert(4, 5, 11));
  bool found4 = false;
  for (const auto& c : c4) {
    if (d3(c.diagram) != q(-25, 22)) continue;
    found4 = true;
    EXPECT_EQ(quad_value(c.diagram.linking, c.diagram.rotation()), q(49, 11) - Rational(12));
  }
  EXPECT_TRUE(found4);
  const auto c3 = enumerate_candidates(torus_surgery_seifert(3, 4, 5));
  bool found3 = false;
  for (const auto& c : c3) found3 = found3 || (d3(c.diagram) == Rational(-1) &&
                                               quad_value(c.diagram.linking, c.diagram.rotation()) == Rational(-6));
  EXPECT_TRUE(found3);
  const auto c5 = enumerate_candidates(torus_surgery_seifert(5, 6, 19));
  bool found5 = false;
  for (const auto& c : c5) found5 = found5 || d3(c.diagram) == q(-3, 2);
  EXPECT_TRUE(found5);
}

TEST(IdentifySpinc, ZeroRotationOnOddGroupIsSpin) {
  const SeifertData m = M("-1;2/5,1/3,1/3");
  ASSERT_EQ(h1_order(m), 3);
  ASSERT_GT(euler_number(m).sign(), 0);
  const DTable table = correction_terms(m);
  for (const auto& c : enumerate_candidates(m)) {
    bool zero = true;
    for (const auto& x : c.diagram.rotation()) zero = zero && x == 0;
    if (!zero) continue;
    const auto orbit = identify_spinc(c.diagram, m, table);
    ASSERT_EQ(orbit.labels.size(), 1u);
    EXPECT_TRUE(table.space.is_self_conjugate(orbit.labels[0]));
  }
}

TEST(IdentifySpinc, RejectsMismatchedTables) {
  const SeifertData m = torus_surgery_seifert(4, 5, 11);
  const auto cands = enumerate_candidates(m);
  const DTable table = correction_terms(m);
  EXPECT_THROW(identify_spinc(cands[0].diagram, m, table.reversed()), invariant_violation);
  const DTable other = correction_terms(torus_surgery_seifert(3, 4, 5));
  EXPECT_THROW(identify_spinc(cands[0].diagram, m, other), invariant_violation);
  ContactDiagram wrong = cands[0].diagram;
  wrong.linking(2, 2) -= 1;  // no longer presents M
  EXPECT_THROW(identify_spinc(wrong, m, table), invariant_violation);
}

TEST(Certificate, Verdicts) {
  const SeifertData m = torus_surgery_seifert(4, 5, 11);
  const DTable table = correction_terms(m);
  std::size_t nonzero = 0, inconclusive = 0;
  for (const auto& c : enumerate_candidates(m)) {
    const auto r = tightness_certificate(m, c, &table);
    EXPECT_EQ(r.candidate_id, c.id);
    EXPECT_EQ(r.orbit_d.size(), r.orbit.labels.size());
    if (r.verdict == Verdict::nonzero) {
      ++nonzero;
      EXPECT_EQ(r.d3, q(-25, 22));
      EXPECT_FALSE(r.orbit_has_spin);
      EXPECT_NE(std::find(table.values.begin(), table.values.end(), r.d3), table.values.end());
    }
    if (std::find(table.values.begin(), table.values.end(), r.d3) == table.values.end()) {
      EXPECT_EQ(r.verdict, Verdict::inconclusive);
      ++inconclusive;
    }
  }
  EXPECT_GE(nonzero, 1u);
  EXPECT_GE(inconclusive, 1u);

  const SeifertData neg = M("-1;1/2,1/3,1/7");
  ASSERT_LT(euler_number(neg).sign(), 0);
  for (const auto& c : enumerate_candidates(neg))
    EXPECT_EQ(tightness_certificate(neg, c, nullptr).verdict, Verdict::not_applicable);
  EXPECT_THROW(tightness_certificate(m, enumerate_candidates(m)[0], nullptr), domain_error);
}

TEST(Certificate, ConjugationCovariance) {
  for (const char* s : {"-1;3/4,1/5,1/9", "-1;5/12,1/3,1/3", "-1;2/3,1/4,1/7", "-1;1/2,1/2,1/2"}) {
    const SeifertData m = M(s);
    const DTable table = correction_terms(m);
    const auto cands = enumerate_candidates(m);
    std::vector<CertificateReport> reps;
    for (const auto& c : cands) reps.push_back(tightness_certificate(m, c, &table));
    for (const auto& r : reps) {
      const auto& cr = reps[r.conjugate_id];
      EXPECT_EQ(cr.d3, r.d3) << s;
      EXPECT_EQ(cr.verdict, r.verdict) << s;
      std::vector<SpincLabel> conj;
      for (const auto& t : r.orbit.labels) conj.push_back(table.space.conjugate(t));
      std::sort(conj.begin(), conj.end());
      EXPECT_EQ(conj, cr.orbit.labels) << s;
    }
  }
}

TEST(Classify, CriticalFourIsLSpaceWithoutSpinStructures) {
  const auto r = classify(M("-1;3/4,1/5,1/9"));
  EXPECT_TRUE(r.lspace.is_lspace);
  EXPECT_TRUE(r.zero_twisting);
  EXPECT_TRUE(r.family_exhaustive);
  EXPECT_TRUE(r.candidates_enumerated);
  EXPECT_TRUE(r.exists_nonzero);
  EXPECT_FALSE(r.nonzero_on_spin);
  EXPECT_TRUE(r.conjugate_pairs);
  EXPECT_EQ(r.certificates.size(), 90u);
}

TEST(Classify, NonLSpaceStillCertified) {
  const auto r = classify(M("-1;5/12,1/3,1/3"));
  EXPECT_FALSE(r.lspace.is_lspace);
  EXPECT_TRUE(r.candidates_enumerated);
  EXPECT_FALSE(r.family_exhaustive);
  EXPECT_TRUE(r.table.has_value());
  EXPECT_FALSE(r.certificates.empty());
  ASSERT_TRUE(r.planarity.all_planar_on_m.has_value());
  EXPECT_FALSE(*r.planarity.all_planar_on_m);
}

TEST(Classify, PositiveE0IsPlanarAndSkipped) {
  const auto r = classify(M("0;1/2,1/3,1/5"));
  EXPECT_TRUE(r.lspace.is_lspace);
  EXPECT_FALSE(r.candidates_enumerated);
  EXPECT_TRUE(r.certificates.empty());
  ASSERT_TRUE(r.planarity.all_planar_on_m.has_value());
  EXPECT_TRUE(*r.planarity.all_planar_on_m);
  EXPECT_FALSE(r.notes.empty());
}

TEST(Classify, PoincareSphereFillingIsNotPlanar) {
  const auto r = classify(M("-2;1/2,2/3,4/5"));
  EXPECT_TRUE(r.lspace.is_lspace);
  ASSERT_TRUE(r.planarity.all_planar_on_m.has_value());
  EXPECT_FALSE(*r.planarity.all_planar_on_m);
  ASSERT_TRUE(r.planarity.all_planar_on_minus_m.has_value());
  EXPECT_TRUE(*r.planarity.all_planar_on_minus_m);
}

TEST(Classify, Errors) {
  EXPECT_THROW(classify(M("-1;1/2,1/3")), unsupported_input);
  EXPECT_THROW(classify(M("-1;1/2,1/3,1/5,1/7")), unsupported_input);
  EXPECT_THROW(classify(M("-1;1/2,1/4,1/4")), domain_error);
}

TEST(Classify, ParallelMatchesSerial) {
  ClassifyOptions serial, par;
  par.jobs = 4;
  const auto a = classify(M("-1;3/4,1/5,1/9"), serial);
  const auto b = classify(M("-1;3/4,1/5,1/9"), par);
  ASSERT_EQ(a.certificates.size(), b.certificates.size());
  for (std::size_t i = 0; i < a.certificates.size(); ++i) {
    EXPECT_EQ(a.certificates[i].d3, b.certificates[i].d3);
    EXPECT_EQ(a.certificates[i].verdict, b.certificates[i].verdict);
    EXPECT_EQ(a.certificates[i].orbit.labels, b.certificates[i].orbit.labels);
  }
}

TEST(Critical, TorusLabelsOfPassingCandidates) {
  for (std::int64_t p = 3; p <= 5; ++p) {
    const auto r = critical_report(p);
    EXPECT_TRUE(r.multiset_match) << p;
    EXPECT_GE(r.consistent_isometries, 1u) << p;
    EXPECT_TRUE(r.classification.exists_nonzero) << p;
    if (p == 4) {
      EXPECT_FALSE(r.classification.nonzero_on_spin);
      for (const auto& c : r.classification.certificates) {
        if (c.verdict != Verdict::nonzero) continue;
        const auto ks = torus_labels_of(r, c.orbit.labels);
        EXPECT_FALSE(ks.empty());
        for (auto k : ks) EXPECT_EQ(std::abs(k), 2);
      }
    }
  }
  EXPECT_THROW(critical_report(2), domain_error);
  EXPECT_THROW(critical_report(13), unsupported_input);
}

TEST(ParseDiagram, RoundTrip) {
  std::istringstream in(
      "# two unknots\n"
      "-1 0 1 : * -1\n"
      "-2 1 -1 : -1 -3   # stabilized once\n");
  const auto d = parse_diagram(in);
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d.linking(0, 0), 0);
  EXPECT_EQ(d.linking(1, 1), -3);
  EXPECT_EQ(d.components[1].positives, 1);
  EXPECT_EQ(d.q(), 1u);
  EXPECT_NO_THROW(d.validate());
}

TEST(ParseDiagram, Errors) {
  auto parse = [](const char* s) {
    std::istringstream in(s);
    return parse_diagram(in);
  };
  EXPECT_THROW(parse("-1 0 1 * \n"), parse_error);
  EXPECT_THROW(parse("-1 0 2 : *\n"), parse_error);
  EXPECT_THROW(parse("-1 1 1 : *\n"), parse_error);
  EXPECT_THROW(parse("-1 0 1 : * 1\n-1 0 1 : 2 *\n"), parse_error);
  EXPECT_THROW(parse("-1 0 1 : 5\n"), parse_error);
  EXPECT_THROW(parse("-1 0 1 : * *\n"), parse_error);
  EXPECT_THROW(parse("a 0 1 : *\n"), parse_error);
}
