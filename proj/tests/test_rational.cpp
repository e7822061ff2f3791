#include "doctest.h"

#include "nps7/error.hpp"
#include "nps7/rational.hpp"

#include <cmath>
#include <random>

using nps7::ExactRational;

TEST_CASE("parse accepts integers, fractions and decimals exactly") {
  CHECK(ExactRational::parse("51/2") == ExactRational(51) / 2);
  CHECK(ExactRational::parse("25.5") == ExactRational(51) / 2);
  CHECK(ExactRational::parse("-7") == ExactRational(-7));
  CHECK(ExactRational::parse("0.1") == ExactRational(1) / 10);
  CHECK(ExactRational::parse("1e-3") == ExactRational(1) / 1000);
  CHECK(ExactRational::parse(" 6/4 ").str() == "3/2");
}

TEST_CASE("parse handles values beyond 64 bits") {
  const auto r = ExactRational::parse(
      "19038680213948167651954555270266/43087137994818537402205515625");
  CHECK(r.numerator().str() == "19038680213948167651954555270266");
  CHECK(r.denominator().str() == "43087137994818537402205515625");
  CHECK(r.to_double() == doctest::Approx(441.86).epsilon(1e-4));
}

TEST_CASE("parse rejects malformed literals") {
  CHECK_THROWS_AS(ExactRational::parse(""), nps7::ParseError);
  CHECK_THROWS_AS(ExactRational::parse("1/0"), nps7::ParseError);
  CHECK_THROWS_AS(ExactRational::parse("abc"), nps7::ParseError);
  CHECK_THROWS_AS(ExactRational::parse("1.2.3"), nps7::ParseError);
}

TEST_CASE("from_double is exact") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(-1e6, 1e6);
  for (int i = 0; i < 200; ++i) {
    const double x = dist(rng);
    CHECK(ExactRational::from_double(x).to_double() == x);
  }
  CHECK(ExactRational::from_double(0.5) == ExactRational(1) / 2);
  CHECK(ExactRational::from_double(0.1) != ExactRational(1) / 10);
}

TEST_CASE("to<long double> carries more digits than to<double>") {
  const ExactRational third = ExactRational(1) / 3;
  const long double ld = third.to<long double>();
  CHECK(std::abs(ld - 1.0L / 3.0L) <= 1e-19L);
}
