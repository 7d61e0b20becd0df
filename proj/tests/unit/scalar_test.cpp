#include "tropical/scalar.hpp"

#include <random>

#include <gtest/gtest.h>

#include "corpus.hpp"
#include "tropical/error.hpp"

namespace tropical {
namespace {

const ExtendedRational kInf = ExtendedRational::infinity();

TEST(ScalarTest, AddIsMin) {
  EXPECT_EQ(trop_add(3, 5), 3);
  EXPECT_EQ(trop_add(kInf, ExtendedRational(7, 2)), ExtendedRational(7, 2));
  EXPECT_EQ(trop_add(ExtendedRational(-1, 3), ExtendedRational(-1, 3)),
            ExtendedRational(-1, 3));
  EXPECT_EQ(trop_add(kInf, kInf), kInf);
}

TEST(ScalarTest, MulIsClassicalSum) {
  EXPECT_EQ(trop_mul(2, 5), 7);
  EXPECT_EQ(trop_mul(0, ExtendedRational(-4, 5)), ExtendedRational(-4, 5));
  EXPECT_EQ(trop_mul(kInf, 12), kInf);
  EXPECT_EQ(trop_mul(12, kInf), kInf);
}

TEST(ScalarTest, Pow) {
  EXPECT_EQ(trop_pow(3, 2), 6);
  EXPECT_EQ(trop_pow(ExtendedRational(1, 2), 5), ExtendedRational(5, 2));
  EXPECT_EQ(trop_pow(ExtendedRational(-9, 4), 0), 0);
  EXPECT_EQ(trop_pow(kInf, 0), 0);
  EXPECT_EQ(trop_pow(kInf, 3), kInf);
  EXPECT_EQ(trop_pow(1, std::uint64_t{1} << 40),
            ExtendedRational(mpq_class("1099511627776")));
}

TEST(ScalarTest, Inverse) {
  EXPECT_EQ(trop_inverse(4), -4);
  EXPECT_EQ(trop_inverse(0), 0);
  EXPECT_EQ(trop_inverse(ExtendedRational(-3, 7)), ExtendedRational(3, 7));
  EXPECT_THROW(trop_inverse(kInf), DomainError);
}

TEST(ScalarTest, OrderPutsInfinityLast) {
  EXPECT_LT(ExtendedRational(1'000'000), kInf);
  EXPECT_LT(ExtendedRational(-1, 2), ExtendedRational(-1, 3));
  EXPECT_EQ(kInf, kInf);
  EXPECT_NE(ExtendedRational(0), kInf);
}

TEST(ScalarTest, StoredInLowestTerms) {
  const ExtendedRational a(6, -4);
  EXPECT_EQ(a.value().get_num(), -3);
  EXPECT_EQ(a.value().get_den(), 2);
  EXPECT_EQ(a.to_string(), "-3/2");
  EXPECT_THROW(ExtendedRational(1, 0), DomainError);
  EXPECT_THROW(kInf.value(), DomainError);
}

TEST(ScalarTest, ParseLiterals) {
  EXPECT_EQ(parse_scalar("inf"), kInf);
  EXPECT_EQ(parse_scalar("-12"), -12);
  EXPECT_EQ(parse_scalar("+7/2"), ExtendedRational(7, 2));
  EXPECT_EQ(parse_scalar("4/6"), ExtendedRational(2, 3));
  EXPECT_EQ(parse_scalar("123456789012345678901234567890").to_string(),
            "123456789012345678901234567890");
}

TEST(ScalarTest, ParseErrors) {
  auto position = [](const char* text) {
    try {
      parse_scalar(text);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1L;
  };
  EXPECT_EQ(position(""), 0);
  EXPECT_EQ(position("-"), 1);
  EXPECT_EQ(position("1/"), 2);
  EXPECT_EQ(position("1/0"), 2);
  EXPECT_EQ(position("3x"), 1);
  EXPECT_EQ(position(" 3"), 0);
  EXPECT_EQ(position("-inf"), 1);
}

TEST(ScalarTest, FormatParseRoundTrip) {
  std::mt19937_64 rng(7);
  for (int n = 0; n < 2000; ++n) {
    const ExtendedRational a = testing::random_rational(rng, 1000, 1000);
    EXPECT_EQ(parse_scalar(a.to_string()), a);
  }
  EXPECT_EQ(parse_scalar(kInf.to_string()), kInf);
}

TEST(ScalarTest, SemiringLaws) {
  std::mt19937_64 rng(11);
  std::bernoulli_distribution infinite(0.1);
  auto draw = [&] {
    return infinite(rng) ? kInf : testing::random_rational(rng);
  };
  for (int n = 0; n < 2000; ++n) {
    const ExtendedRational a = draw(), b = draw(), c = draw();
    EXPECT_EQ(trop_add(a, b), trop_add(b, a));
    EXPECT_EQ(trop_mul(a, b), trop_mul(b, a));
    EXPECT_EQ(trop_add(trop_add(a, b), c), trop_add(a, trop_add(b, c)));
    EXPECT_EQ(trop_mul(trop_mul(a, b), c), trop_mul(a, trop_mul(b, c)));
    EXPECT_EQ(trop_mul(a, trop_add(b, c)),
              trop_add(trop_mul(a, b), trop_mul(a, c)));
    EXPECT_EQ(trop_add(a, a), a);
    EXPECT_EQ(trop_add(a, kInf), a);
    EXPECT_EQ(trop_mul(a, 0), a);
    EXPECT_EQ(trop_mul(a, kInf), kInf);
    if (a.is_finite()) EXPECT_EQ(trop_mul(a, trop_inverse(a)), 0);
  }
}

}  // namespace
}  // namespace tropical
