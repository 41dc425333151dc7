#include "hfseifert/floer/dinvariant.hpp"
#include "hfseifert/torusknot.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace hfs;

namespace {

Rational q(long n, long d) { return Rational(Integer(n), Integer(d)); }

// Coefficients of the torus knot polynomial from the semigroup S = <p, q>:
// Delta(t) t^n = sum_i ([i in S] - [i-1 in S]) t^i for 0 <= i <= 2n.
std::vector<std::int64_t> semigroup_coefficients(std::int64_t p, std::int64_t qq) {
  const std::int64_t top = (p - 1) * (qq - 1);
  std::vector<bool> in(static_cast<std::size_t>(top + 1), false);
  for (std::int64_t a = 0; a * p <= top; ++a)
    for (std::int64_t b = 0; a * p + b * qq <= top; ++b) in[static_cast<std::size_t>(a * p + b * qq)] = true;
  std::vector<std::int64_t> c(static_cast<std::size_t>(top + 1));
  for (std::int64_t i = 0; i <= top; ++i)
    c[static_cast<std::size_t>(i)] = (in[static_cast<std::size_t>(i)] ? 1 : 0) - (i > 0 && in[static_cast<std::size_t>(i - 1)] ? 1 : 0);
  return c;
}

std::multiset<Rational> as_multiset(const std::vector<Rational>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(Alexander, Examples) {
  EXPECT_EQ(alexander_torus(3, 4).a, (std::vector<std::int64_t>{1, 0, -1, 1}));
  EXPECT_EQ(alexander_torus(2, 3).a, (std::vector<std::int64_t>{-1, 1}));
  const auto a45 = alexander_torus(4, 5);
  EXPECT_EQ(a45.a[0], -1);
  EXPECT_EQ(a45.a[1], 0);
  EXPECT_EQ(a45.n, 6);
  EXPECT_THROW(alexander_torus(4, 6), domain_error);
  EXPECT_THROW(alexander_torus(5, 3), domain_error);
  EXPECT_THROW(alexander_torus(1, 3), domain_error);
}

TEST(Alexander, CoefficientClauses) {
  for (std::int64_t p = 2; p <= 40; ++p) {
    const auto d = alexander_torus(p, p + 1);
    EXPECT_EQ(d.a[0], p % 2 ? 1 : -1) << p;
    std::int64_t last = 0;
    for (std::size_t i = 0; i < d.a.size(); ++i) {
      const auto c = d.a[i];
      EXPECT_LE(std::abs(c), 1) << p;
      if (c == 0) continue;
      if (last != 0) { EXPECT_EQ(c, -last) << p << " index " << i; }
      last = c;
    }
    for (std::int64_t i = 1; 2 * i < p; ++i) EXPECT_EQ(d.a[static_cast<std::size_t>(i)], 0) << p;
  }
}

TEST(Alexander, MatchesSemigroupOracle) {
  for (std::int64_t p = 2; p <= 9; ++p)
    for (std::int64_t qq = p + 1; qq <= 25; ++qq) {
      if (std::gcd(p, qq) != 1) continue;
      const auto d = alexander_torus(p, qq);
      const auto c = semigroup_coefficients(p, qq);
      for (std::int64_t i = 0; i <= d.n; ++i)
        EXPECT_EQ(d.a[static_cast<std::size_t>(i)], c[static_cast<std::size_t>(d.n + i)]) << p << "," << qq;
    }
}

TEST(Alexander, NormalizedAtOne) {
  std::mt19937_64 rng(71);
  int done = 0;
  while (done < 200) {
    const std::int64_t p = 2 + static_cast<std::int64_t>(rng() % 39);
    const std::int64_t qq = p + 1 + static_cast<std::int64_t>(rng() % 60);
    if (p * qq > 1600 || std::gcd(p, qq) != 1) continue;
    EXPECT_EQ(alexander_torus(p, qq).at_one(), 1) << p << "," << qq;
    ++done;
  }
}

TEST(Alexander, OneSidedSumVanishesForEvenP) {
  for (std::int64_t p = 2; p <= 40; p += 2) {
    const auto d = alexander_torus(p, p + 1);
    std::int64_t s = 0;
    for (auto x : d.a) s += x;
    EXPECT_EQ(s, 0) << p;
  }
}

TEST(Torsion, Examples) {
  const auto r = torsion_coefficients(4, 5);
  EXPECT_EQ(r[0], 3);
  EXPECT_EQ(r[2], 1);
  EXPECT_EQ(torsion_coefficient(r, -2), 1);
  EXPECT_EQ(torsion_coefficient(r, 6), 0);
  EXPECT_EQ(torsion_coefficient(r, 100), 0);
  for (std::int64_t p = 2; p <= 12; p += 2) {
    const auto rp = torsion_coefficients(p, p + 1);
    EXPECT_EQ(rp[0] * 8, Integer(p * p + 2 * p)) << p;
    EXPECT_EQ(rp[static_cast<std::size_t>(p / 2)] * 8, Integer(p * p - 2 * p)) << p;
  }
}

TEST(Torsion, NonNegativeAndNonIncreasing) {
  for (std::int64_t p = 2; p <= 10; ++p)
    for (std::int64_t qq = p + 1; qq <= 15; ++qq) {
      if (std::gcd(p, qq) != 1) continue;
      const auto r = torsion_coefficients(p, qq);
      for (std::size_t j = 0; j < r.size(); ++j) {
        EXPECT_GE(r[j], 0);
        if (j) { EXPECT_LE(r[j], r[j - 1]); }
        if (j) { EXPECT_GE(r[j], r[j - 1] - 1); }
      }
      EXPECT_EQ(r.back(), 0);
    }
}

TEST(LensFormula, Examples) {
  EXPECT_EQ(d_lens_n1(11, 0), q(5, 2));
  EXPECT_EQ(d_lens_n1(11, 2), q(19, 22));
  EXPECT_EQ(d_lens_n1(1, 0), Rational(0));
  EXPECT_EQ(d_lens_n1(11, -9), d_lens_n1(11, 2));
  EXPECT_THROW(d_lens_n1(0, 0), domain_error);
}

TEST(CriticalSurgery, Examples) {
  EXPECT_EQ(d_critical_surgery(4, 0), q(-7, 2));
  EXPECT_EQ(d_critical_surgery(4, 2), q(-25, 22));
  EXPECT_EQ(d_critical_surgery(3, 0), Rational(-1));
  EXPECT_THROW(d_critical_surgery(4, 6), domain_error);
  EXPECT_THROW(d_critical_surgery(4, -6), domain_error);
  EXPECT_EQ(d_critical_table(4).size(), 11u);
}

TEST(CriticalSurgery, ClosedFormForEvenP) {
  for (std::int64_t p = 4; p <= 10; p += 2) {
    const std::int64_t n = p * p - p - 1;
    const Rational expected = Rational((p * p - 2 * p - 1) * (p * p - 2 * p - 1), 4 * n) - Rational((p - 1) * (p - 1), 4);
    EXPECT_EQ(d_critical_surgery(p, p / 2), expected) << p;
  }
}

TEST(CriticalSurgery, SymmetricInK) {
  for (std::int64_t p = 2; p <= 10; ++p) {
    const std::int64_t n = p * p - p - 1;
    for (std::int64_t k = 0; 2 * k <= n; ++k) EXPECT_EQ(d_critical_surgery(p, k), d_critical_surgery(p, -k));
  }
}

TEST(SpinD, Examples) {
  EXPECT_EQ(spin_d(4), q(-7, 2));
  EXPECT_EQ(spin_d(3), Rational(-1));
  EXPECT_EQ(spin_d(5), q(-3, 2));
  for (std::int64_t p = 2; p <= 20; ++p) EXPECT_EQ(spin_d(p), d_critical_surgery(p, 0)) << p;
}

TEST(LargeSurgery, MatchesCriticalTableAndLens) {
  for (std::int64_t p = 2; p <= 6; ++p) {
    const auto a = alexander_torus(p, p + 1);
    const std::int64_t n = p * p - p - 1;
    if (n >= 2 * a.n - 1) { EXPECT_EQ(d_large_surgery_table(a, n), d_critical_table(p)); }
  }
  EXPECT_THROW(d_large_surgery_table(alexander_torus(4, 5), 10), unsupported_input);
}

TEST(CrossOracle, PlumbingMatchesTorusRoute) {
  for (std::int64_t p = 3; p <= 5; ++p) {
    const std::int64_t n = p * p - p - 1;
    const SeifertData m = torus_surgery_seifert(p, p + 1, n);
    const DTable t = correction_terms(m);
    EXPECT_EQ(t.orientation, Orientation::reversed);
    EXPECT_EQ(as_multiset(t.values), as_multiset(d_critical_table(p))) << p;
  }
}

TEST(CrossOracle, GeneralLargeSurgeries) {
  // Positive surgeries above 2g-1 on a few torus knots.
  for (auto [p, qq] : std::vector<std::pair<std::int64_t, std::int64_t>>{{2, 3}, {2, 5}, {3, 5}, {2, 7}}) {
    const auto a = alexander_torus(p, qq);
    for (std::int64_t n = std::max<std::int64_t>(1, 2 * a.n - 1); n <= 2 * a.n + 4; ++n) {
      if (n == p * qq) continue;
      const SeifertData m = torus_surgery_seifert(p, qq, n);
      if (m.k() == 3 && bad_vertex_count(plumbing_tree(euler_number(m).sign() < 0 ? m : reverse_orientation(m))) > 1)
        continue;
      EXPECT_EQ(as_multiset(correction_terms(m).values), as_multiset(d_large_surgery_table(a, n)))
          << p << "," << qq << "," << n;
    }
  }
}
