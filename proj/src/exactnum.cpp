#include "chamanara/exactnum.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

namespace chamanara {

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_spaces() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_spaces();
    return pos_ >= text_.size();
  }
  bool peek_char(char c) {
    skip_spaces();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  bool consume(std::string_view token) {
    skip_spaces();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }
  bool at_digit() {
    skip_spaces();
    return pos_ < text_.size() && is_digit(text_[pos_]);
  }
  BigInt digits() {
    skip_spaces();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    if (start == pos_) throw ParseError("expected digits", start);
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }
  bool at_surd() {
    skip_spaces();
    return text_.substr(pos_, 3) == "\xE2\x88\x9A" || text_.substr(pos_, 4) == "sqrt";
  }
  std::size_t position() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

Rational parse_unsigned_rational(Scanner& sc) {
  BigInt num = sc.digits();
  BigInt den = 1;
  if (sc.consume("/")) {
    const std::size_t den_at = sc.position();
    den = sc.digits();
    if (den == 0) throw ParseError("zero denominator", den_at);
  }
  return Rational(num, den);
}

// Radicand of a surd; need not be square-free.
Rational parse_surd(Scanner& sc) {
  if (!sc.consume("\xE2\x88\x9A")) sc.consume("sqrt");
  const bool paren = sc.consume("(");
  const std::size_t at = sc.position();
  const BigInt d = sc.digits();
  if (paren && !sc.consume(")")) throw ParseError("expected ')'", sc.position());
  if (d <= 0) throw ParseError("radicand must be positive", at);
  return Rational(d);
}

// One signed term: a rational, a surd, or coefficient*surd (optionally /den).
QuadRat parse_term(Scanner& sc, int sign) {
  const std::size_t at = sc.position();
  Rational coeff = 1;
  bool have_number = false;
  if (sc.at_digit()) {
    coeff = parse_unsigned_rational(sc);
    have_number = true;
  }
  sc.consume("*");
  if (sc.at_surd()) {
    const Rational d = parse_surd(sc);
    if (sc.consume("/")) {
      const std::size_t den_at = sc.position();
      const BigInt den = sc.digits();
      if (den == 0) throw ParseError("zero denominator", den_at);
      coeff /= Rational(den);
    }
    return QuadRat(coeff * sign) * QuadRat::sqrt_of(d);
  }
  if (!have_number) throw ParseError("expected a number or a square root", at);
  return QuadRat(coeff * sign);
}

}  // namespace

Rational::Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  Scanner sc(text);
  int sign = 1;
  if (sc.consume("-")) sign = -1;
  else sc.consume("+");
  Rational r = parse_unsigned_rational(sc);
  if (!sc.done()) throw ParseError("trailing characters", sc.position());
  return r * sign;
}

Rational Rational::pow2(int exponent) {
  BigInt p = 1;
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(exponent < 0 ? -exponent : exponent));
  return exponent < 0 ? Rational(BigInt(1), p) : Rational(p);
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::reciprocal() const {
  if (is_zero()) throw DivisionByZero("reciprocal of zero");
  return Rational(value_.get_den(), value_.get_num());
}

BigInt Rational::floor() const {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero("division by zero");
  value_ /= o.value_;
  return *this;
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational rat_gcd(const Rational& a, const Rational& b) {
  if (a.sign() <= 0 || b.sign() <= 0) throw DomainError("rat_gcd needs positive arguments");
  BigInt g, l;
  mpz_gcd(g.get_mpz_t(), a.numerator().get_mpz_t(), b.numerator().get_mpz_t());
  mpz_lcm(l.get_mpz_t(), a.denominator().get_mpz_t(), b.denominator().get_mpz_t());
  return Rational(g, l);
}

std::optional<BigInt> exact_isqrt(const BigInt& n) {
  if (n < 0) return std::nullopt;
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

std::pair<BigInt, BigInt> squarefree_split(const BigInt& n) {
  if (n <= 0) throw DomainError("squarefree_split needs a positive integer");
  BigInt rest = n;
  BigInt square = 1;
  BigInt free = 1;
  for (unsigned long p = 2; p <= 1000000UL; p += (p == 2 ? 1 : 2)) {
    if (BigInt(p) * p > rest) break;
    int multiplicity = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++multiplicity;
    }
    for (int i = 0; i + 1 < multiplicity; i += 2) square *= p;
    if (multiplicity % 2 == 1) free *= p;
  }
  if (rest != 1) {
    if (auto r = exact_isqrt(rest)) {
      square *= *r;
    } else if (rest < BigInt("1000000000000000000")) {
      // No factor below 10^6, so rest is a product of at most two distinct primes.
      free *= rest;
    } else {
      throw UnsupportedField("cannot certify square-free part of " + n.get_str());
    }
  }
  return {square, free};
}

bool is_squarefree(std::int64_t d) {
  if (d < 1) return false;
  for (std::int64_t p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0) return false;
  }
  return true;
}

QuadRat::QuadRat(const Rational& a, const Rational& b, std::int64_t d) : a_(a), b_(b), d_(d) {
  if (d < 1 || !is_squarefree(d)) throw DomainError("quadratic field needs a square-free d >= 1");
  if (d_ == 1) {
    a_ += b_;
    b_ = 0;
  }
  if (b_.is_zero()) d_ = 1;
}

QuadRat QuadRat::parse(std::string_view text) {
  Scanner sc(text);
  if (sc.done()) throw ParseError("empty number", 0);
  int sign = 1;
  if (sc.consume("-")) sign = -1;
  else sc.consume("+");
  QuadRat value = parse_term(sc, sign);
  while (!sc.done()) {
    if (sc.consume("+")) sign = 1;
    else if (sc.consume("-")) sign = -1;
    else throw ParseError("expected '+' or '-'", sc.position());
    value += parse_term(sc, sign);
  }
  return value;
}

QuadRat QuadRat::sqrt_of(const Rational& x) {
  if (x.sign() < 0) throw DomainError("square root of a negative rational");
  if (x.is_zero()) return QuadRat();
  const auto [s, f] = squarefree_split(x.numerator() * x.denominator());
  if (!f.fits_slong_p()) throw UnsupportedField("radicand too large: " + f.get_str());
  return QuadRat(0, Rational(s, x.denominator()), f.get_si());
}

const Rational& QuadRat::as_rational() const {
  if (!is_rational()) throw DomainError("value " + str() + " is not rational");
  return a_;
}

int QuadRat::sign() const {
  const int sa = a_.sign();
  const int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: compare a^2 with b^2 d. Equality is impossible for square-free d > 1.
  const Rational lhs = a_ * a_;
  const Rational rhs = b_ * b_ * Rational(static_cast<long>(d_));
  return lhs > rhs ? sa : sb;
}

Rational QuadRat::norm() const { return a_ * a_ - b_ * b_ * Rational(static_cast<long>(d_)); }

QuadRat QuadRat::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  const Rational n = norm();
  return QuadRat(a_ / n, -b_ / n, d_);
}

std::optional<QuadRat> QuadRat::sqrt() const {
  if (sign() < 0) return std::nullopt;
  if (is_rational()) return sqrt_of(a_);
  // (x + y√d)^2 = a + b√d  <=>  x^2 + d y^2 = a, 2xy = b.
  const Rational n2 = norm();
  if (n2.sign() < 0) return std::nullopt;
  const auto num_root = exact_isqrt(n2.numerator());
  const auto den_root = exact_isqrt(n2.denominator());
  if (!num_root || !den_root) return std::nullopt;
  const Rational n(*num_root, *den_root);
  for (const Rational& x2 : {(a_ + n) / 2, (a_ - n) / 2}) {
    if (x2.sign() <= 0) continue;
    const auto xn = exact_isqrt(x2.numerator());
    const auto xd = exact_isqrt(x2.denominator());
    if (!xn || !xd) continue;
    const Rational x(*xn, *xd);
    QuadRat root(x, b_ / (x * 2), d_);
    if (root.sign() < 0) root = -root;
    if (root * root == *this) return root;
  }
  return std::nullopt;
}

double QuadRat::to_double() const {
  return a_.to_double() + b_.to_double() * std::sqrt(static_cast<double>(d_));
}

std::string QuadRat::str() const {
  if (is_rational()) return a_.str();
  std::string surd = "\xE2\x88\x9A" + std::to_string(d_);
  std::string irr;
  if (b_ == Rational(1)) irr = surd;
  else if (b_ == Rational(-1)) irr = "-" + surd;
  else irr = b_.str() + surd;
  if (a_.is_zero()) return irr;
  return a_.str() + (b_.sign() > 0 ? "+" : "") + irr;
}

std::ostream& operator<<(std::ostream& os, const QuadRat& q) { return os << q.str(); }

std::int64_t QuadRat::common_field(const QuadRat& x, const QuadRat& y) {
  if (x.d_ == 1) return y.d_;
  if (y.d_ == 1 || x.d_ == y.d_) return x.d_;
  throw FieldMismatch("cannot combine values from Q(\xE2\x88\x9A" + std::to_string(x.d_) +
                      ") and Q(\xE2\x88\x9A" + std::to_string(y.d_) + ")");
}

QuadRat& QuadRat::operator+=(const QuadRat& o) {
  const std::int64_t d = common_field(*this, o);
  *this = QuadRat(a_ + o.a_, b_ + o.b_, d);
  return *this;
}

QuadRat& QuadRat::operator-=(const QuadRat& o) {
  const std::int64_t d = common_field(*this, o);
  *this = QuadRat(a_ - o.a_, b_ - o.b_, d);
  return *this;
}

QuadRat& QuadRat::operator*=(const QuadRat& o) {
  const std::int64_t d = common_field(*this, o);
  const Rational dd(static_cast<long>(d));
  *this = QuadRat(a_ * o.a_ + b_ * o.b_ * dd, a_ * o.b_ + o.a_ * b_, d);
  return *this;
}

QuadRat quad_mul(const QuadRat& x, const QuadRat& y) { return x * y; }
int quad_sign(const QuadRat& x) { return x.sign(); }
QuadRat quad_inv(const QuadRat& x) { return x.inverse(); }

}  // namespace chamanara
