#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "suig2/rational.hpp"

using suig2::Rat;

TEST_CASE("construction reduces and normalizes sign") {
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(-2, 4) == Rat(-1, 2));
  CHECK(Rat(2, -4) == Rat(-1, 2));
  CHECK(Rat(-2, -4) == Rat(1, 2));
  CHECK(Rat(0, 7) == Rat(0));
  CHECK(Rat(0).den() == 1);
  CHECK_THROWS_AS(Rat(1, 0), std::domain_error);
}

TEST_CASE("arithmetic is exact") {
  Rat a(1, 3), b(1, 6);
  CHECK(a + b == Rat(1, 2));
  CHECK(a - b == Rat(1, 6));
  CHECK(a * b == Rat(1, 18));
  CHECK(a / b == Rat(2));
  CHECK(-a == Rat(-1, 3));
  CHECK_THROWS_AS(a / Rat(0), std::domain_error);

  // accumulation must not drift
  Rat s(0);
  for (int i = 0; i < 1000; ++i) s += Rat(1, 1000);
  CHECK(s == Rat(1));
}

TEST_CASE("comparisons use exact cross multiplication") {
  CHECK(Rat(1, 3) < Rat(1, 2));
  CHECK(Rat(-1, 2) < Rat(-1, 3));
  CHECK(Rat(2, 6) <= Rat(1, 3));
  CHECK(Rat(7, 8) > Rat(6, 7));
  // values whose comparison overflows a naive int64 cross product
  Rat big1(4000000000LL, 4000000001LL);
  Rat big2(3999999999LL, 4000000000LL);
  CHECK(big2 < big1);
}

TEST_CASE("overflow in arithmetic throws instead of wrapping") {
  Rat huge(INT64_MAX / 2, 1);
  CHECK_THROWS_AS(huge * Rat(4), std::overflow_error);
}

TEST_CASE("abs min max helpers") {
  CHECK(Rat(-3, 4).abs() == Rat(3, 4));
  CHECK(suig2::rat_min(Rat(1, 2), Rat(1, 3)) == Rat(1, 3));
  CHECK(suig2::rat_max(Rat(1, 2), Rat(1, 3)) == Rat(1, 2));
}

TEST_CASE("string forms") {
  CHECK(Rat(3, 4).str() == "3/4");
  CHECK(Rat(5).str() == "5");
  CHECK(Rat(-7, 2).str() == "-7/2");
  CHECK(Rat(1, 2).decimal() == "0.5");
  CHECK(Rat(0).decimal() == "0");
  CHECK(Rat(-9, 8).decimal() == "-1.125");
  CHECK(Rat(1, 3).decimal(6) == "0.333333");
  CHECK(Rat(225, 100).decimal() == "2.25");
}

TEST_CASE("integer detection") {
  CHECK(Rat(8, 4).is_integer());
  CHECK_FALSE(Rat(9, 4).is_integer());
}
