#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <random>

#include "chamanara/exactnum.hpp"

using namespace chamanara;

namespace {

// Largest m with a/m, b/m integers: m = a/i for the smallest i that makes
// b/m an integer.
Rational brute_gcd(const Rational& a, const Rational& b) {
  for (long i = 1; i < 1000000; ++i) {
    const Rational m = a / Rational(i);
    if ((b / m).is_integer()) return m;
  }
  return Rational(0);
}

}  // namespace

TEST_CASE("rationals stay reduced with a positive denominator") {
  const Rational r(6, -4);
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 2);
  CHECK(r.str() == "-3/2");
  CHECK(Rational(4, 2).str() == "2");
  CHECK((Rational(1, 6) + Rational(1, 3)).str() == "1/2");
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational::pow2(-3) == Rational(1, 8));
  CHECK(Rational::pow2(4) == Rational(16));
  CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
  CHECK_THROWS_AS(Rational(0).reciprocal(), DivisionByZero);
}

TEST_CASE("rational parsing") {
  CHECK(Rational::parse("-12/8") == Rational(-3, 2));
  CHECK(Rational::parse("+5") == Rational(5));
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1.5"), ParseError);
  try {
    Rational::parse("12x");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 2);
  }
}

TEST_CASE("rat_gcd") {
  CHECK(rat_gcd(Rational(2, 15), Rational(2, 5)) == Rational(2, 15));
  CHECK(rat_gcd(Rational(1, 6), Rational(1, 6)) == Rational(1, 6));
  CHECK(rat_gcd(Rational(3, 4), Rational(5, 6)) == Rational(1, 12));
  CHECK_THROWS_AS(rat_gcd(Rational(0), Rational(1)), DomainError);
  CHECK_THROWS_AS(rat_gcd(Rational(-1, 2), Rational(1)), DomainError);
}

TEST_CASE("rat_gcd agrees with a brute-force divisor search") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(1, 30), den(1, 24);
  for (int i = 0; i < 25; ++i) {
    const Rational a(num(rng), den(rng));
    const Rational b(num(rng), den(rng));
    CAPTURE(a.str());
    CAPTURE(b.str());
    CHECK(rat_gcd(a, b) == brute_gcd(a, b));
  }
}

TEST_CASE("quad_mul") {
  CHECK(quad_mul(QuadRat::surd(1, 2), QuadRat::surd(1, 2)) == QuadRat(2));
  const QuadRat x = QuadRat::surd(Rational(3, 10), 10);
  CHECK(quad_mul(x, x) == QuadRat(Rational(9, 10)));
  CHECK(quad_mul(QuadRat(1, 1, 5), QuadRat(1, -1, 5)) == QuadRat(-4));
  CHECK_THROWS_AS(quad_mul(QuadRat::surd(1, 2), QuadRat::surd(1, 3)), FieldMismatch);
  // Rational operands combine with any field.
  CHECK(quad_mul(QuadRat(3), QuadRat::surd(1, 7)) == QuadRat::surd(3, 7));
}

TEST_CASE("quad_sign") {
  CHECK(quad_sign(QuadRat(3, -1, 5)) == 1);
  CHECK(quad_sign(QuadRat()) == 0);
  CHECK(quad_sign(QuadRat(2, -3, 2)) == -1);
  CHECK(quad_sign(QuadRat(-2, 3, 2)) == 1);
}

TEST_CASE("quad_sign agrees with 100-digit evaluation") {
  using Big = boost::multiprecision::cpp_bin_float_100;
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> coeff(-2000, 2000), den(1, 500);
  const long fields[] = {2, 3, 5, 6, 7, 10, 11, 13, 17, 101};
  int checked = 0;
  for (int i = 0; i < 1000; ++i) {
    const Rational a(coeff(rng), den(rng));
    const Rational b(coeff(rng), den(rng));
    const long d = fields[i % 10];
    const QuadRat x(a, b, d);
    const Big approx = Big(a.numerator().get_str()) / Big(a.denominator().get_str()) +
                       Big(b.numerator().get_str()) / Big(b.denominator().get_str()) * boost::multiprecision::sqrt(Big(d));
    const int expected = approx > 0 ? 1 : (approx < 0 ? -1 : 0);
    CHECK(quad_sign(x) == expected);
    ++checked;
  }
  CHECK(checked == 1000);
}

TEST_CASE("quad_inv") {
  CHECK(quad_inv(QuadRat::surd(1, 2)) == QuadRat::surd(Rational(1, 2), 2));
  CHECK(quad_inv(QuadRat(3)) == QuadRat(Rational(1, 3)));
  CHECK(quad_inv(QuadRat(1, 1, 2)) == QuadRat(-1, 1, 2));
  CHECK_THROWS_AS(quad_inv(QuadRat()), DivisionByZero);
}

TEST_CASE("field axioms on random operands") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> coeff(-50, 50), den(1, 20);
  auto rnd = [&](long d) { return QuadRat(Rational(coeff(rng), den(rng)), Rational(coeff(rng), den(rng)), d); };
  for (long d : {2L, 3L, 5L, 10L}) {
    for (int i = 0; i < 50; ++i) {
      const QuadRat x = rnd(d), y = rnd(d), z = rnd(d);
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK(x * y == y * x);
      if (!x.is_zero()) CHECK(x * quad_inv(x) == QuadRat(1));
    }
  }
}

TEST_CASE("rational values compare across fields") {
  const QuadRat r2 = QuadRat::surd(1, 2) * QuadRat::surd(1, 2);
  CHECK(r2.d() == 1);
  CHECK(r2 == QuadRat(2));
  CHECK(QuadRat::surd(1, 2) < QuadRat(Rational(3, 2)));
  CHECK_THROWS_AS((void)(QuadRat::surd(1, 2) < QuadRat::surd(1, 3)), FieldMismatch);
}

TEST_CASE("square roots") {
  CHECK(QuadRat::sqrt_of(Rational(1, 2)) == QuadRat::surd(Rational(1, 2), 2));
  CHECK(QuadRat::sqrt_of(Rational(9, 4)) == QuadRat(Rational(3, 2)));
  CHECK(QuadRat::sqrt_of(Rational(12)) == QuadRat::surd(2, 3));
  // (1 + √2)^2 = 3 + 2√2
  CHECK(QuadRat(3, 2, 2).sqrt() == QuadRat(1, 1, 2));
  CHECK_FALSE(QuadRat(1, 1, 2).sqrt().has_value());
  CHECK_FALSE(QuadRat(-4).sqrt().has_value());
  const auto [s, f] = squarefree_split(BigInt(360));
  CHECK(s == 6);
  CHECK(f == 10);
}

TEST_CASE("quadratic parsing and printing") {
  CHECK(QuadRat::parse("1/2+3/4√5") == QuadRat(Rational(1, 2), Rational(3, 4), 5));
  CHECK(QuadRat::parse("-sqrt2") == QuadRat::surd(-1, 2));
  CHECK(QuadRat::parse("sqrt(3)/2") == QuadRat::surd(Rational(1, 2), 3));
  CHECK(QuadRat::parse("3/2") == QuadRat(Rational(3, 2)));
  CHECK(QuadRat::parse("√8") == QuadRat::surd(2, 2));
  CHECK(QuadRat(1, 1, 5).str() == "1+\xE2\x88\x9A" "5");
  CHECK(QuadRat::surd(-1, 2).str() == "-\xE2\x88\x9A" "2");
  for (const char* text : {"1/2-3/4\xE2\x88\x9A" "7", "-5", "2/3\xE2\x88\x9A" "10"}) {
    const QuadRat q = QuadRat::parse(text);
    CHECK(QuadRat::parse(q.str()) == q);
  }
  CHECK_THROWS_AS(QuadRat::parse("1+"), ParseError);
  CHECK_THROWS_AS(QuadRat::parse("√4x"), ParseError);
  CHECK_THROWS_AS(QuadRat::parse(""), ParseError);
}
