#include <gtest/gtest.h>

#include <random>

#include "heights/error.hpp"
#include "heights/hompoly2.hpp"
#include "heights/linalg.hpp"
#include "heights/multiform.hpp"
#include "heights/rational.hpp"
#include "heights/unipoly.hpp"

using namespace heights;

namespace {

UniPoly random_poly(std::mt19937_64& rng, int max_degree, int range) {
  std::uniform_int_distribution<int> deg(0, max_degree), coef(-range, range);
  std::vector<Rational> c(deg(rng) + 1);
  for (auto& x : c) x = Rational(coef(rng), 1);
  return UniPoly(c);
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-50, 50), den(1, 20);
  return Rational(num(rng), den(rng));
}

}  // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(Rational::parse("6/4"), Rational(3, 2));
  EXPECT_EQ(Rational::parse("-7"), Rational(-7));
  EXPECT_EQ(Rational(3, 2).str(), "3/2");
  EXPECT_EQ(Rational(-4, 2).str(), "-2");
  EXPECT_THROW(Rational::parse("1/0"), DomainError);
  EXPECT_THROW(Rational::parse("abc"), DomainError);
}

TEST(Rational, PowAndFloor) {
  EXPECT_EQ(Rational(2, 3).pow(3), Rational(8, 27));
  EXPECT_EQ(Rational(2, 3).pow(-2), Rational(9, 4));
  EXPECT_EQ(Rational(0).pow(0), Rational(1));
  EXPECT_EQ(Rational(-7, 2).floor(), BigInt(-4));
  EXPECT_THROW(Rational(0).inverse(), DomainError);
}

TEST(Rational, FieldAxiomsOnRandomInputs) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    const Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    if (!b.is_zero()) EXPECT_EQ(a / b * b, a);
  }
}

TEST(UniPoly, GcdExamples) {
  const UniPoly t2m1{-1, 0, 1}, tm1{-1, 1};
  EXPECT_EQ(gcd_unipoly(t2m1, tm1), tm1);
  EXPECT_EQ(gcd_unipoly(UniPoly::monomial(1, 3), UniPoly::monomial(1, 2)), UniPoly::monomial(1, 2));
  EXPECT_EQ(gcd_unipoly(UniPoly{1, 0, 1}, UniPoly{0, 1, 1}), UniPoly{1});
  EXPECT_THROW(gcd_unipoly(UniPoly{}, UniPoly{}), DomainError);
  EXPECT_EQ(gcd_unipoly(UniPoly{}, UniPoly{2, 4}), (UniPoly{Rational(1, 2), 1}));
}

TEST(UniPoly, SquarefreeExamples) {
  const UniPoly tm1{-1, 1}, tp2{2, 1};
  auto sf = squarefree_decomposition(tm1 * tm1 * tp2);
  ASSERT_EQ(sf.size(), 2u);
  EXPECT_EQ(sf[0].factor, tp2);
  EXPECT_EQ(sf[0].multiplicity, 1);
  EXPECT_EQ(sf[1].factor, tm1);
  EXPECT_EQ(sf[1].multiplicity, 2);

  sf = squarefree_decomposition(UniPoly::monomial(1, 5));
  ASSERT_EQ(sf.size(), 1u);
  EXPECT_EQ(sf[0].factor, (UniPoly{0, 1}));
  EXPECT_EQ(sf[0].multiplicity, 5);

  sf = squarefree_decomposition(UniPoly{1, 0, -2, 0, 1});
  ASSERT_EQ(sf.size(), 1u);
  EXPECT_EQ(sf[0].factor, (UniPoly{-1, 0, 1}));
  EXPECT_EQ(sf[0].multiplicity, 2);
}

TEST(UniPoly, SquarefreeReconstructsRandomProducts) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> mult(1, 3), count(1, 3);
  for (int trial = 0; trial < 1000; ++trial) {
    UniPoly f{Rational(1)};
    const int k = count(rng);
    for (int i = 0; i < k; ++i) {
      UniPoly p = random_poly(rng, 2, 4);
      if (p.is_constant()) continue;
      f = f * p.pow(mult(rng));
    }
    if (f.is_constant()) continue;
    const auto sf = squarefree_decomposition(f);
    UniPoly product{f.leading()};
    int last = 0;
    for (const auto& [factor, m] : sf) {
      EXPECT_GT(m, last);
      last = m;
      EXPECT_EQ(factor.leading(), Rational(1));
      EXPECT_TRUE(gcd_unipoly(factor, factor.derivative()).is_constant()) << factor.str();
      product = product * factor.pow(m);
    }
    ASSERT_EQ(product, f) << f.str();
  }
}

TEST(UniPoly, ResultantExamples) {
  // Res(t - a, g) = g(a).
  EXPECT_EQ(resultant_binary(UniPoly::linear_root(1), UniPoly::linear_root(3)), Rational(-2));
  EXPECT_EQ(resultant_binary(UniPoly::linear_root(3), UniPoly::linear_root(1)), Rational(2));
  EXPECT_EQ(resultant_binary(UniPoly::monomial(1, 2), UniPoly{1, 1}), Rational(1));
  const UniPoly f{3, -1, 0, 2};
  EXPECT_EQ(resultant_binary(f, f), Rational(0));
}

TEST(UniPoly, ResultantVanishesIffCommonFactor) {
  std::mt19937_64 rng(13);
  int zero_cases = 0;
  for (int trial = 0; trial < 500; ++trial) {
    UniPoly f = random_poly(rng, 3, 3), g = random_poly(rng, 3, 3);
    if (trial % 3 == 0) {
      const UniPoly common = random_poly(rng, 1, 3);
      f = f * common;
      g = g * common;
    }
    if (f.is_zero() || g.is_zero() || (f.is_constant() && g.is_constant())) continue;
    const bool zero = resultant_binary(f, g).is_zero();
    zero_cases += zero;
    EXPECT_EQ(zero, !gcd_unipoly(f, g).is_constant()) << f.str() << " ; " << g.str();
  }
  EXPECT_GT(zero_cases, 50);
}

TEST(UniPoly, DivisionIdentity) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const UniPoly a = random_poly(rng, 6, 9), b = random_poly(rng, 3, 9);
    if (b.is_zero()) continue;
    const auto [q, r] = divmod(a, b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_LT(r.degree(), b.degree());
  }
  EXPECT_THROW(divmod(UniPoly{1}, UniPoly{}), DomainError);
  EXPECT_THROW(exact_quotient(UniPoly{1, 0, 1}, UniPoly{1, 1}), InvariantViolation);
}

TEST(UniPoly, RingAxioms) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 200; ++trial) {
    const UniPoly a = random_poly(rng, 4, 5), b = random_poly(rng, 4, 5), c = random_poly(rng, 4, 5);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a - b) + b, a);
    const Rational x = random_rational(rng);
    EXPECT_EQ((a * b).evaluate(x), a.evaluate(x) * b.evaluate(x));
  }
}

TEST(HomPoly2, HomogenizeAndDehomogenize) {
  EXPECT_EQ(homogenize(UniPoly{1, 0, 1}, 2), HomPoly2(2, {1, 0, 1}));
  EXPECT_EQ(homogenize(UniPoly{0, 1}, 3), HomPoly2(3, {0, 1, 0, 0}));
  EXPECT_EQ(dehomogenize(HomPoly2(2, {0, 1, 1})), (UniPoly{0, 1, 1}));
  EXPECT_THROW(homogenize(UniPoly{0, 0, 1}, 1), DomainError);
}

TEST(HomPoly2, OrderAtInfinity) {
  EXPECT_EQ(HomPoly2(3, {0, 1, 0, 0}).order_at_infinity(), 2);
  EXPECT_EQ(HomPoly2(3, {1, 0, 0, 1}).order_at_infinity(), 0);
  EXPECT_EQ(HomPoly2(3).order_at_infinity(), 3);
}

TEST(HomPoly2, GcdTracksInfinity) {
  // s^2 t and s t^2 share s t.
  const HomPoly2 a(3, {0, 1, 0, 0}), b(3, {0, 0, 1, 0});
  EXPECT_EQ(gcd_hompoly2(a, b), HomPoly2(2, {0, 1, 0}));
  // s^2 and t^2 are coprime.
  EXPECT_EQ(gcd_hompoly2(HomPoly2(2, {1, 0, 0}), HomPoly2(2, {0, 0, 1})), HomPoly2(0, {1}));
  const HomPoly2 h(2, {2, 3, 1});
  EXPECT_EQ(gcd_hompoly2(h, HomPoly2(2)), gcd_hompoly2(h, h));
}

TEST(HomPoly2, ProductsEvaluate) {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> coef(-4, 4);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Rational> ca(3), cb(4);
    for (auto& x : ca) x = coef(rng);
    for (auto& x : cb) x = coef(rng);
    const HomPoly2 a(2, ca), b(3, cb);
    const Rational s = random_rational(rng), t = random_rational(rng);
    EXPECT_EQ((a * b).evaluate(s, t), a.evaluate(s, t) * b.evaluate(s, t));
    EXPECT_EQ((a * b).degree(), 5);
  }
  EXPECT_THROW(HomPoly2(2, {1, 2}), DomainError);
  EXPECT_THROW(HomPoly2(1, {1, 0}) + HomPoly2(2, {1, 0, 0}), DomainError);
}

TEST(Linalg, DeterminantAndRank) {
  EXPECT_EQ(determinant({{1, 2}, {3, 4}}), Rational(-2));
  EXPECT_EQ(determinant({{0, 1}, {1, 0}}), Rational(-1));
  EXPECT_EQ(rank({{1, 2, 3}, {2, 4, 6}}), 1);
  EXPECT_EQ(rank({{1, 0}, {0, 1}, {1, 1}}), 2);
}

TEST(MultiForm, ValidatesExponents) {
  MultiForm<Rational> f(3, 2);
  EXPECT_THROW(f.add_term({1, 1}, 1), DomainError);
  EXPECT_THROW(f.add_term({3, -1, 0}, 1), DomainError);
  EXPECT_THROW(f.add_term({1, 0, 0}, 1), DomainError);
  f.add_term({1, 1, 0}, 2);
  f.add_term({1, 1, 0}, -2);
  EXPECT_TRUE(f.is_zero());
  EXPECT_THROW(MultiForm<Rational>(1, 2), DomainError);
  EXPECT_THROW(MultiForm<Rational>(2, 0), DomainError);
}

TEST(MultiForm, SubstitutionComposes) {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Rational> c(4);
    for (auto& x : c) x = coef(rng);
    const auto f = binary_form<Rational>(c);
    const LinearSubstitution g{coef(rng), coef(rng), coef(rng), coef(rng)};
    const LinearSubstitution h{coef(rng), coef(rng), coef(rng), coef(rng)};
    // (f o g) o h = f o (g h)
    const LinearSubstitution gh{g.a * h.a + g.b * h.c, g.a * h.b + g.b * h.e, g.c * h.a + g.e * h.c,
                                g.c * h.b + g.e * h.e};
    EXPECT_EQ(substitute(substitute(f, g), h), substitute(f, gh));
  }
}
