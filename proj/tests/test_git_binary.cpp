#include <gtest/gtest.h>

#include <random>

#include "heights/error.hpp"
#include "heights/git_binary.hpp"
#include "heights/random_gen.hpp"
#include "oracles.hpp"

using namespace heights;

namespace {

const Rational kZero{};

MultiForm<Rational> random_binary(std::mt19937_64& rng, int d, int range, bool monic_leading) {
  std::uniform_int_distribution<int> c(-range, range);
  std::vector<Rational> coeffs(d + 1);
  for (auto& x : coeffs) x = c(rng);
  if (monic_leading && coeffs[d].is_zero()) coeffs[d] = 1;
  return binary_form<Rational>(coeffs);
}

HomPoly2 lin(int s, int t) { return HomPoly2(1, {s, t}); }

}  // namespace

TEST(QuarticInvariants, Fermat) {
  const auto f = binary_form<Rational>(std::vector<Rational>{1, 0, 0, 0, 1});
  const auto inv = invariants_quartic(f, kZero);
  EXPECT_EQ(inv.I, Rational(1));
  EXPECT_EQ(inv.J, Rational(0));
}

TEST(QuarticInvariants, DoubleRootsLieOnDiscriminant) {
  const auto f = binary_form<Rational>(std::vector<Rational>{0, 0, 1, 0, 0});
  const auto inv = invariants_quartic(f, kZero);
  EXPECT_NE(inv.I, Rational(0));
  EXPECT_EQ(inv.I.pow(3) - Rational(27) * inv.J.pow(2), Rational(0));
}

TEST(QuarticInvariants, TripleRootInNullcone) {
  const auto f = binary_form<Rational>(std::vector<Rational>{0, 1, 0, 0, 0});
  const auto inv = invariants_quartic(f, kZero);
  EXPECT_EQ(inv.I, Rational(0));
  EXPECT_EQ(inv.J, Rational(0));
  EXPECT_EQ(binary_semistable(f).status, Stability::Unstable);
}

TEST(QuarticInvariants, ProportionalToResultantDiscriminant) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = random_binary(rng, 4, 6, true);
    const auto inv = invariants_quartic(f, kZero);
    const Rational disc = oracle::binary_discriminant(binary_coefficients(f, kZero));
    EXPECT_EQ(Rational(256) * (inv.I.pow(3) - Rational(27) * inv.J.pow(2)), disc) << to_string(f);
  }
}

TEST(QuarticInvariants, SlTwoInvarianceAndWeights) {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<int> c(-3, 3);
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = random_binary(rng, 4, 5, false);
    const LinearSubstitution g{c(rng), c(rng), c(rng), c(rng)};
    const auto inv = invariants_quartic(f, kZero);
    const auto moved = invariants_quartic(substitute(f, g), kZero);
    EXPECT_EQ(moved.I, g.det().pow(4) * inv.I);
    EXPECT_EQ(moved.J, g.det().pow(6) * inv.J);
    const Rational lambda(c(rng), 1 + static_cast<int>(rng() % 3));
    const auto scaled = invariants_quartic(f.map_coefficients([&](const Rational& x) { return lambda * x; }), kZero);
    EXPECT_EQ(scaled.I, lambda.pow(2) * inv.I);
    EXPECT_EQ(scaled.J, lambda.pow(3) * inv.J);
  }
}

TEST(CubicDiscriminant, Examples) {
  const auto disc = [](std::vector<Rational> c) { return invariant_cubic_disc(binary_form<Rational>(c), kZero); };
  EXPECT_NE(disc({1, 0, 0, 1}), Rational(0));
  EXPECT_EQ(disc({0, 0, 1, 0}), Rational(0));
  // X0 X1 (X0 - X1) = X0^2 X1 - X0 X1^2
  EXPECT_NE(disc({0, -1, 1, 0}), Rational(0));
}

TEST(CubicDiscriminant, MatchesResultantOracleAndInvariance) {
  std::mt19937_64 rng(47);
  std::uniform_int_distribution<int> c(-3, 3);
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = random_binary(rng, 3, 6, true);
    const Rational disc = invariant_cubic_disc(f, kZero);
    EXPECT_EQ(disc, oracle::binary_discriminant(binary_coefficients(f, kZero)));
    const LinearSubstitution g{c(rng), c(rng), c(rng), c(rng)};
    EXPECT_EQ(invariant_cubic_disc(substitute(f, g), kZero), g.det().pow(6) * disc);
  }
}

TEST(BinaryPencil, Validation) {
  EXPECT_THROW(BinaryPencil(5, 1, {{0, lin(1, 0)}}), DomainError);
  EXPECT_THROW(BinaryPencil(4, 1, {}), DomainError);
  EXPECT_THROW(BinaryPencil(4, 1, {{0, HomPoly2(2, {1, 0, 0})}}), DomainError);
  // s divides every coefficient.
  EXPECT_THROW(BinaryPencil(4, 1, {{4, lin(1, 0)}, {0, lin(2, 0)}}), DomainError);
}

TEST(GitHeight, QuarticWithUnstableFiberAtInfinity) {
  // X0^4 + t X0 X1^3 + X1^4, homogenized with m = 1.
  const BinaryPencil p(4, 1, {{4, lin(1, 0)}, {1, lin(0, 1)}, {0, lin(1, 0)}});
  const auto inv = pencil_quartic_invariants(p);
  EXPECT_EQ(inv.I, HomPoly2(2, {1, 0, 0}));
  EXPECT_EQ(inv.J, HomPoly2(3, {0, 0, Rational(-1, 16), 0}));
  const auto r = git_height(p);
  EXPECT_EQ(r.contactLength, 2);
  EXPECT_EQ(r.htGIT, Rational(2, 3));
  EXPECT_EQ(r.htInt, Rational(1));
  EXPECT_EQ(r.delta, 6);
  EXPECT_FALSE(r.allFibersSemistable);
  EXPECT_EQ(contact_length_by_orders(p), 2);
  EXPECT_TRUE(verify_contact_identity(p));
}

TEST(GitHeight, CubicPencil) {
  // X0^3 + X1^3 + t X0 X1^2 (s X0^3 + s X1^3 + t X0 X1^2)
  const BinaryPencil p(3, 1, {{3, lin(1, 0)}, {0, lin(1, 0)}, {1, lin(0, 1)}});
  const auto r = git_height(p);
  EXPECT_EQ(r.htGIT, Rational(0));
  EXPECT_EQ(r.contactLength, 4);
  EXPECT_EQ(r.htInt, Rational(1));
  EXPECT_EQ(r.delta, 4);
}

TEST(GitHeight, ConstantFermatPencil) {
  const BinaryPencil p(4, 0, {{4, HomPoly2::constant(1)}, {0, HomPoly2::constant(1)}});
  const auto r = git_height(p);
  EXPECT_EQ(r.contactLength, 0);
  EXPECT_EQ(r.htGIT, Rational(0));
  EXPECT_TRUE(r.allFibersSemistable);
  EXPECT_TRUE(fiber_semistability_profile(p).empty());
}

TEST(GitHeight, AllFibersSemistableGivesFullHeight) {
  // s X0^4 + t X0^2 X1^2 + s X1^4: I and J have no common root.
  const BinaryPencil p(4, 1, {{4, lin(1, 0)}, {2, lin(0, 1)}, {0, lin(1, 0)}});
  const auto r = git_height(p);
  EXPECT_EQ(r.contactLength, 0);
  EXPECT_TRUE(r.allFibersSemistable);
  EXPECT_EQ(r.htGIT, Rational(1));
  EXPECT_EQ(r.htInt, Rational(1));
}

TEST(GitHeight, UnstableGenericFiberRejected) {
  // X0^3 X1 with moving coefficients stays in the nullcone.
  const BinaryPencil p(4, 1, {{3, lin(1, 1)}, {4, lin(0, 1)}});
  try {
    git_height(p);
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("outside semistable locus"), std::string::npos);
  }
}

TEST(Profile, UnstableFiberAtOrigin) {
  // X0^3 X1 + t (X0^4 + X1^4)
  const BinaryPencil p(4, 1, {{3, lin(1, 0)}, {4, lin(0, 1)}, {0, lin(0, 1)}});
  const auto profile = fiber_semistability_profile(p);
  bool found = false;
  for (const auto& l : profile) {
    if (l.kind == FiberLocus::Kind::Affine && l.factor == UniPoly{0, 1}) {
      found = true;
      EXPECT_EQ(l.verdict.status, Stability::Unstable);
    }
  }
  EXPECT_TRUE(found);
  const auto fiber = p.fiber(1, 0);
  EXPECT_EQ(binary_semistable(fiber).status, Stability::Unstable);
}

TEST(Profile, DegenerationOnlyAtInfinity) {
  // t X0^4 + s X0^2 X1^2 + s X1^4: the fiber at s = 0 is t X0^4.
  const BinaryPencil p(4, 1, {{4, lin(0, 1)}, {2, lin(1, 0)}, {0, lin(1, 0)}});
  const auto profile = fiber_semistability_profile(p);
  int infinity_unstable = 0, affine_unstable = 0;
  for (const auto& l : profile) {
    if (l.verdict.status != Stability::Unstable) continue;
    if (l.kind == FiberLocus::Kind::Infinity) ++infinity_unstable;
    if (l.kind == FiberLocus::Kind::Affine) ++affine_unstable;
  }
  EXPECT_EQ(infinity_unstable, 1);
  EXPECT_EQ(affine_unstable, 0);
  EXPECT_TRUE(verify_contact_identity(p));
  EXPECT_GT(git_height(p).contactLength, 0);
}

TEST(Profile, VerdictsMatchFiberwiseBinaryRule) {
  gen::Rng rng(53);
  for (int trial = 0; trial < 40; ++trial) {
    const int d = trial % 2 == 0 ? 4 : 3;
    const auto planted = gen::random_pencil(rng, d, 1 + trial % 3, gen::Degeneration::AtRationalPoint);
    const auto profile = fiber_semistability_profile(planted.pencil);
    for (const auto& l : profile) {
      if (l.kind != FiberLocus::Kind::Affine || l.factor.degree() != 1) continue;
      const Rational root = -l.factor.coefficient(0);
      EXPECT_EQ(binary_semistable(planted.pencil.fiber(1, root)).status, l.verdict.status);
    }
    // The planted fiber is reported unstable.
    const auto fiber = planted.pencil.fiber(planted.s, planted.t);
    EXPECT_EQ(binary_semistable(fiber).status, Stability::Unstable);
    EXPECT_FALSE(git_height(planted.pencil).allFibersSemistable);
  }
}

TEST(Contact, RandomPencilsBothRoutesAgree) {
  gen::Rng rng(59);
  for (int trial = 0; trial < 60; ++trial) {
    const int d = trial % 2 == 0 ? 4 : 3;
    const auto kind = static_cast<gen::Degeneration>(trial % 3);
    const auto planted = gen::random_pencil(rng, d, 1 + trial % 4, kind);
    const auto r = git_height(planted.pencil);
    EXPECT_EQ(r.contactLength, contact_length_by_orders(planted.pencil));
    EXPECT_EQ(r.htInt, r.htGIT + Rational(r.contactLength, r.delta));
  }
}
