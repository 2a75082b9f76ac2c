#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "support/reference.hpp"
#include "tropiloc/errors.hpp"
#include "tropiloc/scalar.hpp"

using tropiloc::ExtendedScalar;

namespace {

ExtendedScalar draw(std::mt19937_64& rng) {
  if (std::bernoulli_distribution(0.1)(rng)) return ExtendedScalar::bottom();
  return ExtendedScalar(reference::dyadic(rng, -64, 64));
}

}  // namespace

TEST(ExtendedScalar, AdditionIsMax) {
  EXPECT_EQ(ExtendedScalar(3) + ExtendedScalar(5), ExtendedScalar(5));
  EXPECT_EQ(ExtendedScalar(-2) + ExtendedScalar::bottom(), ExtendedScalar(-2));
}

TEST(ExtendedScalar, MultiplicationIsPlus) {
  EXPECT_EQ(ExtendedScalar(3) * ExtendedScalar(5), ExtendedScalar(8));
  EXPECT_EQ(ExtendedScalar(3) * ExtendedScalar::one(), ExtendedScalar(3));
}

TEST(ExtendedScalar, BottomAbsorbsProducts) {
  EXPECT_TRUE((ExtendedScalar::bottom() * ExtendedScalar(7)).is_bottom());
  EXPECT_TRUE((ExtendedScalar(7) * ExtendedScalar::bottom()).is_bottom());
}

TEST(ExtendedScalar, InverseNegates) {
  EXPECT_EQ(ExtendedScalar(4).inverse(), ExtendedScalar(-4));
  EXPECT_EQ(ExtendedScalar(4) * ExtendedScalar(4).inverse(), ExtendedScalar::one());
  EXPECT_THROW((void)ExtendedScalar::bottom().inverse(), tropiloc::DomainError);
}

TEST(ExtendedScalar, PowerScalesExponent) {
  EXPECT_EQ(ExtendedScalar(3).pow(2), ExtendedScalar(6));
  EXPECT_EQ(ExtendedScalar(3).pow(-1), ExtendedScalar(-3));
  EXPECT_EQ(ExtendedScalar(3).pow(0.5), ExtendedScalar(1.5));
  EXPECT_TRUE(ExtendedScalar::bottom().pow(2).is_bottom());
  EXPECT_THROW((void)ExtendedScalar::bottom().pow(0), tropiloc::DomainError);
  EXPECT_THROW((void)ExtendedScalar::bottom().pow(-1), tropiloc::DomainError);
}

TEST(ExtendedScalar, RejectsNonFiniteValues) {
  EXPECT_THROW((void)ExtendedScalar(std::nan("")), tropiloc::DomainError);
  EXPECT_THROW((void)ExtendedScalar(INFINITY), tropiloc::DomainError);
  EXPECT_THROW((void)ExtendedScalar(-INFINITY), tropiloc::DomainError);
}

TEST(ExtendedScalar, OrderPlacesBottomFirst) {
  EXPECT_LT(ExtendedScalar::bottom(), ExtendedScalar(-1e300));
  EXPECT_LE(ExtendedScalar::bottom(), ExtendedScalar::bottom());
  EXPECT_GT(ExtendedScalar(1), ExtendedScalar::one());
}

TEST(ExtendedScalar, Prints) {
  std::ostringstream os;
  os << ExtendedScalar(1.5) << ' ' << ExtendedScalar::bottom();
  EXPECT_EQ(os.str(), "1.5 -inf");
}

TEST(ExtendedScalar, SemiringAxiomsOnRandomTriples) {
  std::mt19937_64 rng(11);
  const ExtendedScalar zero = ExtendedScalar::bottom();
  const ExtendedScalar one = ExtendedScalar::one();
  for (int trial = 0; trial < 2000; ++trial) {
    const ExtendedScalar a = draw(rng), b = draw(rng), c = draw(rng);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ(a + a, a);
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ((a + b) * c, a * c + b * c);
    ASSERT_EQ(a * zero, zero);
    ASSERT_EQ(a + zero, a);
    ASSERT_EQ(a * one, a);
  }
}
