#include <gtest/gtest.h>

#include "lefschetz/elimination.hpp"

using namespace lefschetz;

namespace {

const std::vector<std::string> XZ{"x", "z"};
Polynomial P(std::string_view s) { return parse(s, XZ); }

}  // namespace

TEST(FibreGcd, SplitsBranchesByFibreBehaviour) {
  // Over x^2 = 1 the fibre gcd of (z^2 - x^2, z - 1) is z - 1 at x = 1 and
  // z - 1 at x = -1 as well; over x = 2 it is 1.
  const UPoly modulus = UPoly({-1, 0, 1}) * UPoly({-2, 1});
  const auto f = coefficients_in(P("z^2 - x^2"), "z");
  const auto g = coefficients_in(P("z - 1"), "z");
  std::size_t total_degree = 0, common_degree = 0;
  for (const auto& b : fibre_gcd(modulus, {f, g})) {
    total_degree += b.modulus.degree();
    if (b.degree() > 0) common_degree += b.modulus.degree();
  }
  EXPECT_EQ(total_degree, 3u);
  EXPECT_EQ(common_degree, 2u);
}

TEST(FibreGcd, LeadingCoefficientVanishingOnPartOfModulus) {
  // x z^2 + z: at x = 0 the fibre is just z.
  const auto f = coefficients_in(P("x*z^2 + z"), "z");
  const auto fz = coefficients_in(P("2*x*z + 1"), "z");
  for (const auto& b : fibre_gcd(UPoly({0, -1, 0, 1}), {f, fz}))  // x^3 - x
    EXPECT_EQ(b.degree(), 0u) << to_string(b.modulus, "x");
}

TEST(BivariateGcd, FindsCommonFactor) {
  const Polynomial g = bivariate_gcd(P("x^2*z - z^3"), P("x*z + z^2"));
  EXPECT_EQ(g, P("x*z + z^2"));
  EXPECT_EQ(bivariate_gcd(P("x + z"), P("x - z")), P("1"));
}

TEST(CommonZero, Cases) {
  EXPECT_FALSE(find_common_zero({P("x"), P("x - 1")}).has_value());
  EXPECT_FALSE(find_common_zero({P("x^2 + z^2 - 1"), P("x - 2"), P("z")}).has_value());
  const auto z = find_common_zero({P("x^2 + z^2 - 1"), P("x - z")});
  ASSERT_TRUE(z.has_value());
  EXPECT_EQ(z->kind, "eliminant");
  const auto f = find_common_zero({P("x*z"), P("x*z^2")});
  ASSERT_TRUE(f.has_value());
  EXPECT_EQ(f->kind, "common factor");
  EXPECT_EQ(find_common_zero({P("0"), P("0")})->kind, "identically zero");
  EXPECT_FALSE(find_common_zero({P("x*z - 1"), P("x")}).has_value());
}
