#include "tropical/json.hpp"

#include <random>

#include <gtest/gtest.h>

#include "corpus.hpp"
#include "tropical/error.hpp"

namespace tropical {
namespace {

using nlohmann::json;
const ExtendedRational kInf = ExtendedRational::infinity();

TEST(PolyJsonTest, Schema) {
  EXPECT_EQ(to_json(TropPoly(0, {6, 4, 0})),
            json::parse(R"({"low_degree": 0, "coeffs": ["6", "4", "0"]})"));
  EXPECT_EQ(to_json(TropPoly(2, {ExtendedRational(-1, 2), kInf, 3})),
            json::parse(R"({"low_degree": 2, "coeffs": ["-1/2", "inf", "3"]})"));
  EXPECT_EQ(to_json(TropPoly()),
            json::parse(R"({"low_degree": 0, "coeffs": []})"));
}

TEST(PolyJsonTest, ReadBackNormalizes) {
  EXPECT_EQ(poly_from_json(json::parse(
                R"({"low_degree": 1, "coeffs": ["inf", "2/4", "inf"]})")),
            TropPoly(2, {ExtendedRational(1, 2)}));
}

TEST(PolyJsonTest, RoundTrip) {
  std::mt19937_64 rng(79);
  for (int n = 0; n < 500; ++n) {
    const TropPoly f = testing::random_poly(rng);
    EXPECT_EQ(poly_from_json(json::parse(to_json(f).dump())), f);
  }
}

TEST(PolyJsonTest, Errors) {
  EXPECT_THROW(poly_from_json(json::parse("[]")), ParseError);
  EXPECT_THROW(poly_from_json(json::parse(R"({"coeffs": []})")), ParseError);
  EXPECT_THROW(poly_from_json(json::parse(R"({"low_degree": -1, "coeffs": []})")),
               ParseError);
  EXPECT_THROW(poly_from_json(json::parse(R"({"low_degree": 0, "coeffs": [1]})")),
               ParseError);
  EXPECT_THROW(
      poly_from_json(json::parse(R"({"low_degree": 0, "coeffs": ["1/0"]})")),
      ParseError);
}

TEST(FactorizationJsonTest, Schema) {
  EXPECT_EQ(to_json(Factorization(0, 0, {3, 3})),
            json::parse(R"({"leading": "0", "monomial_degree": 0, "roots": ["3", "3"]})"));
  EXPECT_EQ(factorization_from_json(json::parse(
                R"({"leading": "-1/3", "monomial_degree": 2, "roots": ["5", "-1"]})")),
            Factorization(ExtendedRational(-1, 3), 2, {-1, 5}));
}

TEST(FactorizationJsonTest, Errors) {
  EXPECT_THROW(factorization_from_json(json::parse(
                   R"({"leading": "inf", "monomial_degree": 0, "roots": []})")),
               ParseError);
  EXPECT_THROW(factorization_from_json(json::parse(
                   R"({"leading": "0", "monomial_degree": 0, "roots": ["inf"]})")),
               ParseError);
  EXPECT_THROW(factorization_from_json(json::parse(
                   R"({"leading": 0, "monomial_degree": 0, "roots": []})")),
               ParseError);
  EXPECT_THROW(factorization_from_json(json::parse(
                   R"({"leading": "0", "roots": []})")),
               ParseError);
}

}  // namespace
}  // namespace tropical
