#pragma once

// Projective 2x2 matrices over exact scalars acting on the closed upper half
// plane, and the group G generated by P1 and H with its fundamental domain.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "chamanara/exactnum.hpp"
#include "chamanara/surface.hpp"

namespace chamanara {

class Mat2 {
 public:
  Mat2(QuadRat a, QuadRat b, QuadRat c, QuadRat d);

  static Mat2 identity() { return Mat2(1, 0, 0, 1); }

  const QuadRat& a() const { return a_; }
  const QuadRat& b() const { return b_; }
  const QuadRat& c() const { return c_; }
  const QuadRat& d() const { return d_; }

  QuadRat det() const { return a_ * d_ - b_ * c_; }
  QuadRat trace() const { return a_ + d_; }

  // Adjugate; equals the inverse projectively.
  Mat2 inverse() const { return Mat2(d_, -b_, -c_, a_); }
  Mat2 scaled(const QuadRat& s) const { return Mat2(a_ * s, b_ * s, c_ * s, d_ * s); }
  Mat2 pow(long n) const;

  // det scaled to 1 when its square root is available, then the first
  // nonzero entry made positive. Idempotent.
  Mat2 canonical() const;

  bool is_rational() const;
  std::string str() const;

  friend Mat2 operator*(const Mat2& x, const Mat2& y);
  friend bool operator==(const Mat2&, const Mat2&) = default;

 private:
  QuadRat a_, b_, c_, d_;
};

// A ≡ B up to a nonzero scalar.
bool projectively_equal(const Mat2& x, const Mat2& y);
bool is_projective_identity(const Mat2& x);

// Point of the closed upper half plane: interior, real boundary point or ∞.
class HPoint {
 public:
  enum class Kind { Interior, Real, Infinity };

  static HPoint interior(QuadRat re, QuadRat im);
  static HPoint real(QuadRat x);
  static HPoint infinity();

  Kind kind() const { return kind_; }
  bool is_infinity() const { return kind_ == Kind::Infinity; }
  bool is_interior() const { return kind_ == Kind::Interior; }
  const QuadRat& re() const { return re_; }
  const QuadRat& im() const { return im_; }

  std::string str() const;

  friend bool operator==(const HPoint&, const HPoint&) = default;

 private:
  HPoint(Kind kind, QuadRat re, QuadRat im) : kind_(kind), re_(std::move(re)), im_(std::move(im)) {}
  Kind kind_;
  QuadRat re_;
  QuadRat im_;
};

HPoint mobius_apply(const Mat2& m, const HPoint& z);

enum class MobiusType { Identity, Parabolic, Elliptic, Hyperbolic };
const char* to_string(MobiusType t);

MobiusType classify(const Mat2& m);
std::vector<HPoint> fixed_points(const Mat2& m);

// Named elements. H and P2 are stored in canonical projective form.
Mat2 P1();
Mat2 P2();
Mat2 H();
Mat2 M();
// Rotation of the plane by -pi/4.
Mat2 rotation_minus_quarter();

// Primitive vector proportional to (q + p, p - q).
DirVec frame_rotate(const DirVec& dir);

enum class Generator { P1, H };

struct Letter {
  Generator gen;
  long exp;
  friend bool operator==(const Letter&, const Letter&) = default;
};

// Freely reduced word in P1 and H.
class Word {
 public:
  Word() = default;
  static Word letter(Generator g, long exp = 1);
  // "I", "P1", "H P1^-2"; factors may also be joined with '*' or '.'.
  static Word parse(std::string_view text);

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  long length() const;

  // Both keep the word freely reduced.
  Word& append(Generator g, long exp);
  Word& prepend(Generator g, long exp);

  Word inverse() const;
  Mat2 matrix() const;
  std::string str() const;

  friend Word operator*(const Word& x, const Word& y);
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

Mat2 generator_matrix(Generator g);

struct EigenDirection {
  enum class Angle { Allowed, Boundary, Forbidden };
  HPoint fixed_point;
  // Primitive eigenvector (u, v) of the fixed point u/v, if it fits in 64 bits.
  std::optional<DirVec> direction;
  Angle angle;
};

const char* to_string(EigenDirection::Angle a);

EigenDirection eigen_direction(const Mat2& parabolic);

enum class Wall { None, StripLeft, StripRight, InnerLeft, InnerRight };
const char* to_string(Wall w);

struct DomainTest {
  enum class Region { Inside, Boundary, Outside };
  Region region;
  Wall wall;
};
const char* to_string(DomainTest::Region r);

// The fundamental domain: |Re z| < 3 and 1/2 < |(z-1)/(z+1)| < 2.
struct FundDomain {
  Rational strip = 3;
  // Real endpoints of the two inner walls.
  std::pair<Rational, Rational> inner_left{-3, Rational(-1, 3)};
  std::pair<Rational, Rational> inner_right{Rational(1, 3), 3};
  std::vector<std::string> cusps{"inf", "3", "-3"};
  std::pair<Rational, Rational> free_side{Rational(-1, 3), Rational(1, 3)};

  // Circle of a wall as (center, radius) on the real line.
  static std::pair<Rational, Rational> wall_circle(const std::pair<Rational, Rational>& endpoints);
};

DomainTest in_fundamental_domain(const HPoint& z);

struct ReductionStep {
  Letter applied;
  Wall wall;  // wall crossed, None for translations
};

struct Reduction {
  Word word;
  HPoint point;
  std::vector<ReductionStep> transcript;
};

Reduction reduce_to_domain(const HPoint& z, int max_iterations = 10000);

struct Membership {
  bool member;
  Word word;      // expressing word when member
  Mat2 residual;  // canonical residual w * A
};

Membership is_member(const Mat2& m);

// All freely reduced words of length 1..L with their matrices.
std::vector<std::pair<Word, Mat2>> enumerate_words(int max_length);

// Depth-first walk over the same words without storing them.
void for_each_word(int max_length, const std::function<void(const Word&, const Mat2&)>& visit);

struct ParabolicScan {
  int max_length = 0;
  long words_checked = 0;
  long parabolics = 0;
  std::vector<std::pair<Word, HPoint>> sample;           // first few parabolics
  std::vector<std::pair<Word, HPoint>> counterexamples;  // fixed point in (-1, 1)
  bool passed() const { return counterexamples.empty(); }
};

ParabolicScan parabolic_direction_scan(int max_length);

struct PairingCheck {
  std::string name;
  std::string expected;
  std::string computed;
  bool pass;
};

struct SidePairingReport {
  std::vector<PairingCheck> checks;
  bool passed() const;
};

SidePairingReport verify_side_pairing();

}  // namespace chamanara
