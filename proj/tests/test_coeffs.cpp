#include <gtest/gtest.h>

#include <vector>

#include "heights/coeffs.hpp"
#include "heights/error.hpp"

using namespace heights;
using namespace heights::coeffs;

TEST(FStab, PinnedValues) {
  EXPECT_EQ(f_stab(3, 3), Rational(0));
  EXPECT_EQ(f_stab(3, 2), Rational(1));
  for (int d = 2; d <= 10; ++d) EXPECT_EQ(f_stab(d, 1), Rational(0)) << d;
}

TEST(FStab, TwelveTimesIsIntegral) {
  for (int N = 1; N <= 12; ++N) {
    for (int d = 1; d <= 50; ++d) {
      EXPECT_TRUE((Rational(12) * f_stab(d, N)).is_integer()) << d << "," << N;
      EXPECT_TRUE((Rational(12) * w(N, d)).is_integer()) << N << "," << d;
    }
  }
}

TEST(FStab, RejectsOutOfDomain) {
  EXPECT_THROW(f_stab(0, 2), DomainError);
  EXPECT_THROW(f_stab(3, 0), DomainError);
}

TEST(W, Values) {
  for (int N = 1; N <= 8; ++N) EXPECT_EQ(w(N, 1), Rational(0));
  EXPECT_EQ(w(2, 2), Rational(1, 6));
  EXPECT_EQ(w(2, 3), Rational(1, 3));
}

TEST(G, Values) {
  EXPECT_EQ(g(3, 2), Rational(1));
  EXPECT_EQ(g(3, 3), Rational(1));
  for (int N = 1; N <= 8; ++N) {
    const int sign = N % 2 == 0 ? 1 : -1;
    EXPECT_EQ(g(N, 2), Rational(2 * N + 1 + 3 * sign, 4)) << N;
    EXPECT_EQ(g_at_two(N), g(N, 2));
  }
  for (int delta = 2; delta <= 40; ++delta) EXPECT_EQ(g(1, delta), Rational(0));
  EXPECT_THROW(g(2, 1), DomainError);
}

TEST(Identity, FEqualsFStab) {
  EXPECT_TRUE(check_f_equals_fstab(3, 2));
  EXPECT_EQ(f_from_w(3, 2), Rational(1));
  for (int N = 1; N <= 12; ++N) EXPECT_TRUE(check_f_equals_fstab(2, N)) << N;
  for (int d = 2; d <= 12; ++d) EXPECT_TRUE(check_f_equals_fstab(d, 1)) << d;
}

TEST(EqualityCase, Classification) {
  const std::vector<int> a{2, 3, 3}, b{3}, c{7}, two{2, 2}, none{};
  EXPECT_TRUE(classify_equality_case(3, a));
  EXPECT_FALSE(classify_equality_case(2, b));
  EXPECT_TRUE(classify_equality_case(1, c));
  EXPECT_TRUE(classify_equality_case(5, two));
  EXPECT_FALSE(classify_equality_case(3, std::vector<int>{4}));
  EXPECT_TRUE(classify_equality_case(4, none));
}

TEST(EqualityCase, AgreesWithNormalizedContribution) {
  for (int N = 1; N <= 8; ++N) {
    for (int delta = 2; delta <= 12; ++delta) {
      const std::vector<int> ms{delta};
      EXPECT_EQ(classify_equality_case(N, ms), g(N, delta) == g(N, 2)) << N << "," << delta;
    }
  }
}
