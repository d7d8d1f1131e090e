#include "regbound/ck.hpp"

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "regbound/catalog.hpp"
#include "regbound/error.hpp"
#include "regbound/projection.hpp"

using namespace regbound;

namespace {

std::vector<std::int64_t> small(const HilbertPoly& h) {
  std::vector<std::int64_t> out;
  for (const auto& c : h.coeffs()) out.push_back(static_cast<std::int64_t>(c));
  return out;
}

oracle::Ranks oracle_ranks(const VarietySpec& spec, int m) {
  const auto c = small(spec.hilbert);
  return oracle::ranks(m, spec.n + 1, [&](std::int64_t t) { return oracle::projected(c, spec.r, m, t); });
}

VarietySpec catalog(std::string_view name) { return lookup_catalog(name).value().spec; }

std::vector<Integer> ints(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(RankEntry, EllipticQuarticProjected) {
  const CkProfile p = pushforward_chi(catalog("elliptic-quartic"), 2);
  EXPECT_EQ(p.ambient, 2);
  EXPECT_EQ(p.k, 2);
  EXPECT_EQ(rank_entry(p, 0), 1);
  EXPECT_EQ(rank_entry(p, 1), 3);
  EXPECT_EQ(rank_entry(p, 2), 5);
  EXPECT_THROW(rank_entry(p, 3), Error);
  EXPECT_THROW(rank_entry(p, -1), Error);
}

TEST(RankTable, Fixtures) {
  const auto eq = catalog("elliptic-quartic");
  const RankTable projected = rank_table(pushforward_chi(eq, 2));
  EXPECT_EQ(projected.ranks, ints({1, 3, 5}));
  EXPECT_EQ(projected.rk_e, 3);
  EXPECT_EQ(projected.c1_e, -1);
  EXPECT_EQ(projected.bound, 1);

  const RankTable full = rank_table(pushforward_chi(eq, 3));
  EXPECT_EQ(full.ranks, ints({1, 4, 8, 4}));
  EXPECT_EQ(full.rk_e, 5);
  EXPECT_EQ(full.c1_e, -2);
  EXPECT_EQ(full.bound, 2);

  const RankTable cubic = rank_table(pushforward_chi(catalog("twisted-cubic"), 3));
  EXPECT_EQ(cubic.ranks[0], 0);
  EXPECT_EQ(cubic.ranks[1], 0);
  EXPECT_EQ(cubic.ranks[2], 3);
  EXPECT_EQ(cubic.rk_e, 3);
  EXPECT_EQ(cubic.c1_e, 0);
  EXPECT_EQ(cubic.bound, 0);
}

TEST(RankTable, FixturesMatchDirectAlternatingSums) {
  const auto eq = catalog("elliptic-quartic");
  for (int m : {2, 3}) {
    const auto o = oracle_ranks(eq, m);
    const RankTable t = rank_table(pushforward_chi(eq, m));
    EXPECT_EQ(t.ranks, o.a);
    EXPECT_EQ(t.rk_e, o.rk_e);
    EXPECT_EQ(t.c1_e, o.c1_e);
  }
}

TEST(RankTable, SweepMatchesOracle) {
  int checked = 0;
  for (const auto& spec : admissible_sweep()) {
    if (spec.r > 7) continue;
    for (int m = spec.n + 1; m <= spec.r; ++m) {
      const auto o = oracle_ranks(spec, m);
      const RankTable t = rank_table(pushforward_chi(spec, m));
      ASSERT_EQ(t.ranks, o.a) << spec.name << " m=" << m;
      ASSERT_EQ(t.rk_e, o.rk_e) << spec.name << " m=" << m;
      ASSERT_EQ(t.c1_e, o.c1_e) << spec.name << " m=" << m;
      ++checked;
    }
  }
  EXPECT_GT(checked, 1000);
}

TEST(RankTable, ResolutionShape) {
  const RankTable t = rank_table(pushforward_chi(catalog("elliptic-quartic"), 3));
  EXPECT_EQ(ResolutionShape::render(t.resolution.kernel), "0 -> E(-2) -> 8 O(-2) -> 4 O(-1) -> O -> 0");
  EXPECT_EQ(ResolutionShape::render(t.resolution.extension), "0 -> G(-3) -> E(-2) -> F(-2) -> 0");
  EXPECT_EQ(ResolutionShape::render(t.resolution.resolution), "0 -> 4 O(-3) -> E(-2) -> F(-2) -> 0");
}

TEST(RankTable, RankDifferenceIsLeadingTerm) {
  // rk(E) - rk(G) = rk(F), and rk(F) is R! times the leading coefficient of chi
  // when chi has full degree R, zero otherwise.
  for (const auto& spec : admissible_sweep()) {
    if (spec.r > 6) continue;
    for (int m = spec.n + 1; m <= spec.r; ++m) {
      const CkProfile p = pushforward_chi(spec, m);
      const RankTable t = rank_table(p);
      const Rational lead = p.chi.degree() == m ? p.chi.leading() : Rational(0);
      EXPECT_EQ(Rational(t.rk_e - t.rk_g), lead * Rational(factorial(m))) << spec.name << " m=" << m;
    }
  }
}

TEST(RankTable, BValueRouteAgrees) {
  for (const auto& entry : default_catalog()) {
    const auto& spec = entry.spec;
    for (int m = spec.n + 1; m <= spec.r; ++m) {
      const CkProfile p = pushforward_chi(spec, m);
      EXPECT_EQ(bound_from_b_values(p), rank_table(p).bound) << entry.name << " m=" << m;
    }
  }
}

TEST(RankTable, EulerCharacteristicConsistencyOnSweep) {
  for (const auto& spec : admissible_sweep()) {
    for (int m = spec.n + 1; m <= spec.r; ++m) {
      const CkProfile p = pushforward_chi(spec, m);
      const RankTable t = rank_table(p);
      ASSERT_TRUE(euler_consistent(p, t, -m, m)) << spec.name << " m=" << m;
    }
  }
}

TEST(RankTable, EulerCharacteristicAgainstOracle) {
  const auto eq = catalog("elliptic-quartic");
  const auto c = small(eq.hilbert);
  const RankTable t = rank_table(pushforward_chi(eq, 3));
  for (int s = -3; s <= 3; ++s) {
    oracle::Int acc = 0;
    for (int i = 0; i <= 3; ++i) acc += oracle::sign(i) * t.ranks[i] * oracle::binom(s - i + 3, 3);
    EXPECT_EQ(complex_euler_characteristic(t, s), acc);
    EXPECT_EQ(acc, oracle::sign(2) * oracle::projected(c, 3, 3, s - 2));
  }
}

TEST(RankTable, NonnegativeOnSweep) {
  for (const auto& spec : admissible_sweep()) {
    for (int m = spec.n + 1; m <= spec.r; ++m) {
      const RankTable t = rank_table(pushforward_chi(spec, m));
      for (const auto& a : t.ranks) ASSERT_GE(a, 0) << spec.name << " m=" << m;
      ASSERT_GE(t.rk_e, 0) << spec.name << " m=" << m;
    }
  }
}

TEST(RankTable, PerturbedProfileRaisesNegativeRank) {
  const CkProfile p = pushforward_chi(catalog("twisted-cubic"), 3);
  const CkProfile bad = perturbed(p, -1, 1);
  // only the twist -1 moves inside the window
  for (int t = -2; t <= 1; ++t) {
    const Rational expected = p.chi(Rational(t)) + (t == -1 ? 1 : 0);
    EXPECT_EQ(bad.chi(Rational(t)), expected) << t;
  }
  try {
    rank_table(bad);
    FAIL() << "expected NegativeRank";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::negative_rank);
    EXPECT_EQ(e.index(), 1);
  }
  EXPECT_EQ(rank_entry(bad, 1), -1);
  EXPECT_THROW(perturbed(p, 5, 1), Error);
}

TEST(RankTable, NegativeRankE) {
  // a = [1, 0] with k = 1: rk(E) = a_1 - a_0 = -1
  const CkProfile p = make_profile(1, 1, RationalPoly({-2, -1}));
  EXPECT_EQ(rank_entry(p, 0), 1);
  EXPECT_EQ(rank_entry(p, 1), 0);
  try {
    rank_table(p);
    FAIL() << "expected NegativeRankE";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::negative_rank_e);
  }
}

TEST(CkProfile, Validation) {
  EXPECT_THROW(make_profile(2, 0, RationalPoly({1})), Error);
  EXPECT_THROW(make_profile(2, 3, RationalPoly({1})), Error);
  EXPECT_THROW(make_profile(0, 1, RationalPoly({1})), Error);
  EXPECT_THROW(make_profile(2, 1, RationalPoly({0, Rational(1, 2)})), Error);
  EXPECT_NO_THROW(make_profile(2, 1, RationalPoly({0, Rational(1, 2), Rational(1, 2)})));
}

TEST(CoeffIdentity, Examples) {
  const auto lhs = [](int r, int l) {
    oracle::Int acc = 0;
    for (int i = 1; i <= l; ++i) acc += oracle::sign(i) * i * oracle::binom(r + 1, l - i);
    return acc;
  };
  EXPECT_EQ(lhs(3, 2), -2);
  EXPECT_EQ(-oracle::binom(2, 1), -2);
  EXPECT_EQ(lhs(5, 3), -6);
  EXPECT_EQ(-oracle::binom(4, 2), -6);
  for (int r = 1; r <= 10; ++r) EXPECT_EQ(lhs(r, 1), -1);

  const auto small_run = verify_coeff_identity(5, 3);
  EXPECT_TRUE(small_run.passed);
  EXPECT_EQ(small_run.checked, 15);
  EXPECT_FALSE(small_run.first_failure.has_value());
}

TEST(CoeffIdentity, FullRange) {
  const auto report = verify_coeff_identity(30, 20);
  EXPECT_TRUE(report.passed);
  EXPECT_EQ(report.checked, 600);
}
