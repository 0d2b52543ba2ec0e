#include <catch2/catch_amalgamated.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <random>

#include "sosperm/rational.hpp"

using sosperm::bigint;
using sosperm::frac_eval;
using sosperm::rational;
using sosperm::unit_rational;

// Independent path: boost's own rational type over the same integer backend.
using checked = boost::multiprecision::cpp_rational;

namespace {

checked to_checked(const rational& r) {
  return checked(r.num(), r.den());
}

rational random_rational(std::mt19937_64& gen) {
  const std::int64_t num = static_cast<std::int64_t>(gen() % 2001) - 1000;
  const std::int64_t den = 1 + static_cast<std::int64_t>(gen() % 1000);
  return rational(bigint(num), bigint(den));
}

}  // namespace

TEST_CASE("construction reduces to canonical form") {
  CHECK(rational(bigint(2), bigint(4)) == rational(bigint(1), bigint(2)));
  CHECK(rational(bigint(-3), bigint(-6)) == rational(bigint(1), bigint(2)));
  CHECK(rational(bigint(44), bigint(100)) == rational(bigint(11), bigint(25)));
  CHECK(rational(bigint(3), bigint(-6)).num() == -1);
  CHECK(rational(bigint(3), bigint(-6)).den() == 2);
  CHECK(rational(bigint(0), bigint(-7)) == rational(0));
  CHECK_THROWS_AS(rational(bigint(1), bigint(0)), sosperm::zero_denominator);
}

TEST_CASE("canonical form is idempotent") {
  std::mt19937_64 gen(11);
  for (int i = 0; i < 500; ++i) {
    const rational r = random_rational(gen) * random_rational(gen) - random_rational(gen);
    const rational again(r.num(), r.den());
    CHECK(again == r);
    CHECK(boost::multiprecision::gcd(r.num() < 0 ? bigint(-r.num()) : r.num(), r.den()) == 1);
    CHECK(r.den() > 0);
  }
}

TEST_CASE("decimal literals parse exactly") {
  CHECK(rational::from_decimal(".44") == rational(bigint(11), bigint(25)));
  CHECK(rational::from_decimal(".32") == rational(bigint(8), bigint(25)));
  CHECK(rational::from_decimal("0.42") == rational(bigint(21), bigint(50)));
  CHECK(rational::from_decimal("-0.5") == rational(bigint(-1), bigint(2)));
  CHECK(rational::from_decimal("+.5") == rational(bigint(1), bigint(2)));
  CHECK(rational::from_decimal("1.") == rational(1));
  CHECK(rational::from_decimal("17") == rational(17));
  CHECK_THROWS_AS(rational::from_decimal("1/3x"), sosperm::parse_error);
  CHECK_THROWS_AS(rational::from_decimal("1/3"), sosperm::parse_error);
  CHECK_THROWS_AS(rational::from_decimal(""), sosperm::parse_error);
  CHECK_THROWS_AS(rational::from_decimal("."), sosperm::parse_error);
  CHECK_THROWS_AS(rational::from_decimal("1.2.3"), sosperm::parse_error);
  CHECK_THROWS_AS(rational::from_decimal("abc"), sosperm::parse_error);
}

TEST_CASE("parse accepts both wire formats") {
  CHECK(rational::parse("3/7") == rational(bigint(3), bigint(7)));
  CHECK(rational::parse("-3/6") == rational(bigint(-1), bigint(2)));
  CHECK(rational::parse("21/50") == rational(bigint(21), bigint(50)));
  CHECK(rational::parse(".44") == rational(bigint(11), bigint(25)));
  CHECK_THROWS_AS(rational::parse("1/0"), sosperm::zero_denominator);
  CHECK_THROWS_AS(rational::parse("x/2"), sosperm::parse_error);
  CHECK_THROWS_AS(rational::parse("1/"), sosperm::parse_error);
}

TEST_CASE("rendering") {
  CHECK(rational(bigint(11), bigint(25)).str() == "11/25");
  CHECK(rational(7).str() == "7");
  CHECK(rational(7).fraction_str() == "7/1");
  CHECK(rational(bigint(-1), bigint(2)).str() == "-1/2");
}

TEST_CASE("arithmetic agrees with an independent big-integer path") {
  std::mt19937_64 gen(42);
  for (int i = 0; i < 2000; ++i) {
    const rational x = random_rational(gen);
    const rational y = random_rational(gen);
    CHECK(to_checked(x + y) == to_checked(x) + to_checked(y));
    CHECK(to_checked(x - y) == to_checked(x) - to_checked(y));
    CHECK(to_checked(x * y) == to_checked(x) * to_checked(y));
    if (y != rational(0)) CHECK(to_checked(x / y) == to_checked(x) / to_checked(y));
  }
}

TEST_CASE("field laws on a randomized set") {
  std::mt19937_64 gen(7);
  for (int i = 0; i < 1000; ++i) {
    const rational x = random_rational(gen);
    const rational y = random_rational(gen);
    const rational z = random_rational(gen);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x + y == y + x);
    CHECK(x * y == y * x);
    CHECK(x * (y + z) == x * y + x * z);
  }
}

TEST_CASE("floor and fractional part") {
  CHECK(rational(bigint(-1), bigint(3)).floor() == -1);
  CHECK(rational(bigint(-3), bigint(3)).floor() == -1);
  CHECK(rational(bigint(7), bigint(3)).floor() == 2);
  CHECK(rational(0).floor() == 0);
  std::mt19937_64 gen(3);
  for (int i = 0; i < 500; ++i) {
    const rational r = random_rational(gen);
    const rational f = r.frac();
    CHECK(rational(0) <= f);
    CHECK(f < rational(1));
    CHECK(f + rational(r.floor()) == r);
  }
}

TEST_CASE("frac_eval worked values") {
  const unit_rational alpha(rational::parse("11/25"));
  const unit_rational beta(rational::parse("8/25"));
  CHECK(frac_eval(alpha, beta, 6).value() == rational(bigint(24), bigint(25)));
  CHECK(frac_eval(unit_rational(), unit_rational(), 17).value() == rational(0));
  CHECK(frac_eval(unit_rational(rational::parse("5/12")), unit_rational(), 7).value() ==
        rational(bigint(11), bigint(12)));
}

TEST_CASE("frac_eval drops exactly the integer part") {
  std::mt19937_64 gen(99);
  for (int i = 0; i < 500; ++i) {
    const unit_rational alpha(random_rational(gen));
    const unit_rational beta(random_rational(gen));
    const std::int64_t x = static_cast<std::int64_t>(gen() % 200);
    const rational whole = alpha.value() * rational(x) + beta.value();
    CHECK(frac_eval(alpha, beta, x).value() + rational(whole.floor()) == whole);
  }
  CHECK_THROWS_AS(frac_eval(unit_rational(), unit_rational(), -1), std::invalid_argument);
}

TEST_CASE("unit_rational reduces modulo 1") {
  CHECK(unit_rational(rational::parse("1.44")).value() == rational::parse(".44"));
  CHECK(unit_rational(rational::parse("-1/4")).value() == rational::parse("3/4"));
  CHECK(unit_rational(rational(5)).value() == rational(0));
}

TEST_CASE("values far beyond 64 bits stay exact") {
  const rational tiny = rational::parse(".0000000000000000000000000000001");
  CHECK(tiny == rational(bigint(1), boost::multiprecision::pow(bigint(10), 31)));
  const rational big = rational::parse("123456789012345678901234567890/7");
  CHECK((big * rational(7)).str() == "123456789012345678901234567890");

  // denominators compound under evaluation without ever overflowing
  const unit_rational alpha(rational::parse("999999999999999999/1000000000000000003"));
  const unit_rational beta(tiny);
  rational sum;
  checked independent_sum;
  for (std::int64_t x = 0; x <= 50; ++x) {
    const rational v = frac_eval(alpha, beta, x).value();
    CHECK(rational(0) <= v);
    CHECK(v < rational(1));
    sum += v;
    const checked whole = to_checked(alpha.value()) * x + to_checked(beta.value());
    const bigint ip = boost::multiprecision::numerator(whole) /
                      boost::multiprecision::denominator(whole);
    independent_sum += whole - checked(ip);
  }
  CHECK(to_checked(sum) == independent_sum);
}
