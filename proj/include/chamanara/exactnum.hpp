#pragma once

// Exact scalars: arbitrary-precision rationals and elements a + b*sqrt(d)
// of a real quadratic field. Nothing in here ever rounds.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "chamanara/errors.hpp"

namespace chamanara {

using BigInt = mpz_class;

class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  Rational(const BigInt& num, const BigInt& den);
  explicit Rational(const BigInt& value) : value_(value) {}

  // Accepts "p", "p/q", with an optional leading sign.
  static Rational parse(std::string_view text);

  // 2^exponent for any integer exponent.
  static Rational pow2(int exponent);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  Rational abs() const;
  Rational reciprocal() const;
  // Floor as an exact integer.
  BigInt floor() const;

  double to_double() const { return value_.get_d(); }
  std::string str() const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { Rational r; r.value_ = -a.value_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return value_; }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Largest positive m such that a/m and b/m are both integers.
Rational rat_gcd(const Rational& a, const Rational& b);

// Integer square root when n is a perfect square.
std::optional<BigInt> exact_isqrt(const BigInt& n);

// Writes n = s^2 * f with f square-free; returns {s, f}. Throws
// UnsupportedField when n has a cofactor it cannot certify.
std::pair<BigInt, BigInt> squarefree_split(const BigInt& n);

// a + b*sqrt(d). d = 1 is reserved for rationals (b is then 0), so two
// rational values compare equal regardless of the field they came from.
class QuadRat {
 public:
  QuadRat() = default;
  QuadRat(const Rational& a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  QuadRat(long a) : a_(a) {}             // NOLINT(google-explicit-constructor)
  QuadRat(const Rational& a, const Rational& b, std::int64_t d);

  // b*sqrt(d).
  static QuadRat surd(const Rational& b, std::int64_t d) { return QuadRat(0, b, d); }

  // "p/q", "p/q+r/s√d", "r/s√d", "-√2"; "sqrt" is accepted for "√".
  static QuadRat parse(std::string_view text);

  // Square root of a nonnegative rational, placed in the right field.
  static QuadRat sqrt_of(const Rational& x);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  std::int64_t d() const { return d_; }

  bool is_rational() const { return b_.is_zero(); }
  // Throws DomainError when irrational.
  const Rational& as_rational() const;

  int sign() const;
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  QuadRat conjugate() const { return QuadRat(a_, -b_, d_); }
  Rational norm() const;  // (a + b√d)(a - b√d)
  QuadRat inverse() const;
  QuadRat abs() const { return sign() < 0 ? -*this : *this; }

  // Square root inside the same field (or a fresh field when rational).
  std::optional<QuadRat> sqrt() const;

  double to_double() const;
  std::string str() const;

  QuadRat& operator+=(const QuadRat& o);
  QuadRat& operator-=(const QuadRat& o);
  QuadRat& operator*=(const QuadRat& o);
  QuadRat& operator/=(const QuadRat& o) { return *this *= o.inverse(); }

  friend QuadRat operator+(QuadRat x, const QuadRat& y) { return x += y; }
  friend QuadRat operator-(QuadRat x, const QuadRat& y) { return x -= y; }
  friend QuadRat operator*(QuadRat x, const QuadRat& y) { return x *= y; }
  friend QuadRat operator/(QuadRat x, const QuadRat& y) { return x /= y; }
  friend QuadRat operator-(const QuadRat& x) { return QuadRat(-x.a_, -x.b_, x.d_); }

  friend bool operator==(const QuadRat& x, const QuadRat& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
  }
  // Throws FieldMismatch for incomparable fields.
  friend std::strong_ordering operator<=>(const QuadRat& x, const QuadRat& y) {
    const int s = (x - y).sign();
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  static std::int64_t common_field(const QuadRat& x, const QuadRat& y);

  Rational a_;
  Rational b_;
  std::int64_t d_ = 1;
};

std::ostream& operator<<(std::ostream& os, const QuadRat& q);

QuadRat quad_mul(const QuadRat& x, const QuadRat& y);
int quad_sign(const QuadRat& x);
QuadRat quad_inv(const QuadRat& x);

bool is_squarefree(std::int64_t d);

}  // namespace chamanara
