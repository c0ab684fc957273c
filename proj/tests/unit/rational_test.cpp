#include <doctest.h>

#include <random>

#include "cubicones/eps_rational.hpp"
#include "cubicones/rational.hpp"

using cubicones::EpsRational;
using cubicones::Rational;

TEST_CASE("rational normal form") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(-6, 4).numerator() == -3);
  CHECK(Rational(6, -4).numerator() == -3);
  CHECK(Rational(6, -4).denominator() == 2);
  CHECK(Rational(0, 5) == Rational(0));
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("rational arithmetic is exact") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long long> d(-50, 50);
  for (int t = 0; t < 200; ++t) {
    long long bd = d(rng), ad = d(rng);
    const Rational a(d(rng), ad == 0 ? 1 : ad);
    const Rational b(d(rng), bd == 0 ? 1 : bd);
    CHECK((a + b) - b == a);
    if (!b.is_zero()) CHECK((a / b) * b == a);
    CHECK((a * b) == (b * a));
  }
}

TEST_CASE("rational serialization") {
  CHECK(Rational(3, 2).to_string() == "3/2");
  CHECK(Rational(-7).to_string() == "-7");
  CHECK(Rational::parse("3/2") == Rational(3, 2));
  CHECK(Rational::parse("-1/504") == Rational(-1, 504));
  CHECK(Rational::parse(" 25/4 ") == Rational(25, 4));
  CHECK(Rational::parse("155520") == Rational(155520));
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("x/2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("eps order is lexicographic") {
  const EpsRational two{Rational(2)};
  const EpsRational two_plus{Rational(2), Rational(7)};
  const EpsRational just_under{Rational(5, 3), Rational(3)};
  CHECK(two < two_plus);          // total weight exactly 2 with eps counts as > 2
  CHECK(just_under < two);
  CHECK(EpsRational(Rational(1, 6), Rational(1)).to_string() == "1/6+1*e");
  CHECK(EpsRational(Rational(2), Rational(-3)).to_string() == "2-3*e");
  CHECK(EpsRational(Rational(1, 3)).to_string() == "1/3");
}

TEST_CASE("eps order total and additive") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long long> d(-6, 6);
  auto rand_eps = [&] {
    return EpsRational{Rational(d(rng), 3), Rational(d(rng))};
  };
  for (int t = 0; t < 200; ++t) {
    const EpsRational a = rand_eps(), b = rand_eps(), c = rand_eps();
    CHECK(((a < b) + (b < a) + (a == b)) == 1);
    if (a < b) CHECK(a + c < b + c);
  }
  // std-part projection preserves order at equal eps parts
  const EpsRational x{Rational(1, 2), Rational(5)}, y{Rational(2, 3), Rational(5)};
  CHECK(x < y);
  CHECK(x.std_part < y.std_part);
}

TEST_CASE("eps parse round trip") {
  for (const char* s : {"1/6+1*e", "2-3*e", "1/3", "-5/2+7/3*e", "0"}) {
    const EpsRational v = EpsRational::parse(s);
    CHECK(v.to_string() == s);
  }
  CHECK(EpsRational::parse("1*e") == EpsRational(Rational(0), Rational(1)));
}
