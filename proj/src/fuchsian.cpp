#include "chamanara/fuchsian.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace chamanara {

namespace {

BigInt floor_of(const QuadRat& v) {
  if (v.is_rational()) return v.as_rational().floor();
  BigInt k(std::floor(v.to_double()));
  while (QuadRat(Rational(k)) > v) k -= 1;
  while (QuadRat(Rational(BigInt(k + 1))) <= v) k += 1;
  return k;
}

std::string letter_str(const Letter& l) {
  std::string s = l.gen == Generator::P1 ? "P1" : "H";
  if (l.exp != 1) s += "^" + std::to_string(l.exp);
  return s;
}

}  // namespace

// ---------------------------------------------------------------- Mat2

Mat2::Mat2(QuadRat a, QuadRat b, QuadRat c, QuadRat d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (det().sign() <= 0) throw DomainError("matrix needs a positive determinant, got " + det().str());
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
  return Mat2(x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_, x.c_ * y.a_ + x.d_ * y.c_,
              x.c_ * y.b_ + x.d_ * y.d_);
}

Mat2 Mat2::pow(long n) const {
  Mat2 base = n < 0 ? inverse() : *this;
  unsigned long e = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
  Mat2 out = identity();
  while (e) {
    if (e & 1) out = out * base;
    base = base * base;
    e >>= 1;
  }
  return out;
}

Mat2 Mat2::canonical() const {
  Mat2 out = *this;
  const QuadRat dt = det();
  if (dt != QuadRat(1)) {
    if (auto root = dt.sqrt()) {
      try {
        out = scaled(root->inverse());
      } catch (const FieldMismatch&) {
        // root lives in another field; keep the unnormalized representative
      }
    }
  }
  for (const QuadRat* e : {&out.a_, &out.b_, &out.c_, &out.d_}) {
    if (e->is_zero()) continue;
    if (e->sign() < 0) out = out.scaled(QuadRat(-1));
    break;
  }
  return out;
}

bool Mat2::is_rational() const {
  return a_.is_rational() && b_.is_rational() && c_.is_rational() && d_.is_rational();
}

std::string Mat2::str() const {
  return "[[" + a_.str() + "," + b_.str() + "],[" + c_.str() + "," + d_.str() + "]]";
}

bool projectively_equal(const Mat2& x, const Mat2& y) {
  const QuadRat xs[4] = {x.a(), x.b(), x.c(), x.d()};
  const QuadRat ys[4] = {y.a(), y.b(), y.c(), y.d()};
  // Rank-one test on the 2x4 matrix of entries.
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (xs[i] * ys[j] != xs[j] * ys[i]) return false;
    }
  }
  return true;
}

bool is_projective_identity(const Mat2& x) { return x.b().is_zero() && x.c().is_zero() && x.a() == x.d(); }

// ---------------------------------------------------------------- HPoint

HPoint HPoint::interior(QuadRat re, QuadRat im) {
  if (im.sign() <= 0) throw DomainError("interior point needs a positive imaginary part");
  return HPoint(Kind::Interior, std::move(re), std::move(im));
}

HPoint HPoint::real(QuadRat x) { return HPoint(Kind::Real, std::move(x), QuadRat()); }

HPoint HPoint::infinity() { return HPoint(Kind::Infinity, QuadRat(), QuadRat()); }

std::string HPoint::str() const {
  if (kind_ == Kind::Infinity) return "inf";
  if (kind_ == Kind::Real) return re_.str();
  std::string im = im_ == QuadRat(1) ? "i" : im_.str() + " i";
  if (re_.is_zero()) return im;
  return re_.str() + " + " + im;
}

HPoint mobius_apply(const Mat2& m, const HPoint& z) {
  const QuadRat &a = m.a(), &b = m.b(), &c = m.c(), &d = m.d();
  switch (z.kind()) {
    case HPoint::Kind::Infinity:
      if (c.is_zero()) return HPoint::infinity();
      return HPoint::real(a / c);
    case HPoint::Kind::Real: {
      const QuadRat den = c * z.re() + d;
      if (den.is_zero()) return HPoint::infinity();
      return HPoint::real((a * z.re() + b) / den);
    }
    case HPoint::Kind::Interior: {
      const QuadRat& x = z.re();
      const QuadRat& y = z.im();
      const QuadRat dr = c * x + d;
      const QuadRat di = c * y;
      const QuadRat n2 = dr * dr + di * di;
      const QuadRat re = ((a * x + b) * dr + a * c * y * y) / n2;
      const QuadRat im = y * m.det() / n2;
      return HPoint::interior(re, im);
    }
  }
  return z;
}

// ---------------------------------------------------------------- classification

const char* to_string(MobiusType t) {
  switch (t) {
    case MobiusType::Identity: return "identity";
    case MobiusType::Parabolic: return "parabolic";
    case MobiusType::Elliptic: return "elliptic";
    case MobiusType::Hyperbolic: return "hyperbolic";
  }
  return "?";
}

MobiusType classify(const Mat2& m) {
  const QuadRat tr = m.trace();
  const int s = (tr * tr - QuadRat(4) * m.det()).sign();
  if (s == 0) return is_projective_identity(m) ? MobiusType::Identity : MobiusType::Parabolic;
  return s < 0 ? MobiusType::Elliptic : MobiusType::Hyperbolic;
}

std::vector<HPoint> fixed_points(const Mat2& m) {
  const MobiusType type = classify(m);
  if (type == MobiusType::Identity) throw DomainError("the identity fixes every point");
  const QuadRat &a = m.a(), &b = m.b(), &c = m.c(), &d = m.d();
  if (c.is_zero()) {
    if (type == MobiusType::Parabolic) return {HPoint::infinity()};
    return {HPoint::real(b / (d - a)), HPoint::infinity()};
  }
  const QuadRat disc = (a - d) * (a - d) + QuadRat(4) * b * c;
  const QuadRat two_c = QuadRat(2) * c;
  if (type == MobiusType::Parabolic) return {HPoint::real((a - d) / two_c)};
  if (type == MobiusType::Elliptic) {
    const auto root = (-disc).sqrt();
    if (!root) throw UnsupportedField("square root of " + (-disc).str() + " leaves the supported fields");
    return {HPoint::interior((a - d) / two_c, *root / two_c.abs())};
  }
  const auto root = disc.sqrt();
  if (!root) throw UnsupportedField("square root of " + disc.str() + " leaves the supported fields");
  QuadRat x1 = (a - d - *root) / two_c;
  QuadRat x2 = (a - d + *root) / two_c;
  if (x2 < x1) std::swap(x1, x2);
  return {HPoint::real(x1), HPoint::real(x2)};
}

// ---------------------------------------------------------------- constants

Mat2 P1() { return Mat2(1, 6, 0, 1); }

Mat2 P2() { return Mat2(Rational(-5, 4), Rational(27, 4), Rational(-3, 4), Rational(13, 4)).canonical(); }

Mat2 H() { return Mat2(Rational(5, 4), Rational(3, 4), Rational(3, 4), Rational(5, 4)); }

Mat2 M() {
  const QuadRat h = QuadRat::surd(Rational(1, 2), 2);
  return Mat2(h, -h, h, h);
}

Mat2 rotation_minus_quarter() {
  const QuadRat h = QuadRat::surd(Rational(1, 2), 2);
  return Mat2(h, h, -h, h);
}

DirVec frame_rotate(const DirVec& dir) { return DirVec(dir.q() + dir.p(), dir.p() - dir.q()); }

// ---------------------------------------------------------------- words

Mat2 generator_matrix(Generator g) { return g == Generator::P1 ? P1() : H(); }

Word Word::letter(Generator g, long exp) {
  Word w;
  w.append(g, exp);
  return w;
}

long Word::length() const {
  long n = 0;
  for (const Letter& l : letters_) n += l.exp < 0 ? -l.exp : l.exp;
  return n;
}

Word& Word::append(Generator g, long exp) {
  if (exp == 0) return *this;
  if (!letters_.empty() && letters_.back().gen == g) {
    letters_.back().exp += exp;
    if (letters_.back().exp == 0) letters_.pop_back();
  } else {
    letters_.push_back({g, exp});
  }
  return *this;
}

Word& Word::prepend(Generator g, long exp) {
  if (exp == 0) return *this;
  if (!letters_.empty() && letters_.front().gen == g) {
    letters_.front().exp += exp;
    if (letters_.front().exp == 0) letters_.erase(letters_.begin());
  } else {
    letters_.insert(letters_.begin(), {g, exp});
  }
  return *this;
}

Word Word::inverse() const {
  Word w;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back({it->gen, -it->exp});
  return w;
}

Word operator*(const Word& x, const Word& y) {
  Word w = x;
  for (const Letter& l : y.letters_) w.append(l.gen, l.exp);
  return w;
}

Mat2 Word::matrix() const {
  Mat2 m = Mat2::identity();
  for (const Letter& l : letters_) m = m * generator_matrix(l.gen).pow(l.exp);
  return m.canonical();
}

std::string Word::str() const {
  if (letters_.empty()) return "I";
  std::string s;
  for (const Letter& l : letters_) {
    if (!s.empty()) s += ' ';
    s += letter_str(l);
  }
  return s;
}

Word Word::parse(std::string_view text) {
  Word w;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '*' || text[i] == '.')) ++i;
  };
  skip();
  if (text.substr(i) == "I" || text.substr(i) == "1") return w;
  while (i < text.size()) {
    const std::size_t start = i;
    std::string name;
    while (i < text.size() && std::isalnum(static_cast<unsigned char>(text[i]))) name += text[i++];
    long exp = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      int sign = 1;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) sign = text[i++] == '-' ? -1 : 1;
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) throw ParseError("expected an exponent", i);
      exp = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        exp = exp * 10 + (text[i++] - '0');
        if (exp > 1000000) throw ParseError("exponent too large", i);
      }
      exp *= sign;
    }
    if (name == "P1") w.append(Generator::P1, exp);
    else if (name == "H") w.append(Generator::H, exp);
    else if (name == "P2") {
      // P2 = H P1^-1
      Word p2 = Word::letter(Generator::H) * Word::letter(Generator::P1, -1);
      Word acc;
      const Word base = exp > 0 ? p2 : p2.inverse();
      for (long k = 0; k < (exp < 0 ? -exp : exp); ++k) acc = acc * base;
      w = w * acc;
    } else {
      throw ParseError("unknown generator '" + name + "'", start);
    }
    skip();
  }
  return w;
}

// ---------------------------------------------------------------- eigen directions

const char* to_string(EigenDirection::Angle a) {
  switch (a) {
    case EigenDirection::Angle::Allowed: return "allowed";
    case EigenDirection::Angle::Boundary: return "boundary";
    case EigenDirection::Angle::Forbidden: return "forbidden";
  }
  return "?";
}

EigenDirection eigen_direction(const Mat2& parabolic) {
  if (classify(parabolic) != MobiusType::Parabolic) throw DomainError("eigen_direction needs a parabolic element");
  const HPoint fp = fixed_points(parabolic).front();
  if (fp.is_infinity()) return {fp, DirVec(1, 0), EigenDirection::Angle::Allowed};
  const int cmp = (fp.re().abs() - QuadRat(1)).sign();
  const auto angle = cmp > 0 ? EigenDirection::Angle::Allowed
                             : (cmp == 0 ? EigenDirection::Angle::Boundary : EigenDirection::Angle::Forbidden);
  std::optional<DirVec> dir;
  if (fp.re().is_rational()) {
    const Rational& x = fp.re().as_rational();
    const BigInt u = x.numerator();
    const BigInt v = x.denominator();
    if (u.fits_slong_p() && v.fits_slong_p()) {
      long q = u.get_si();
      long p = v.get_si();
      if (q < 0) {
        q = -q;
        p = -p;
      }
      if (q == 0) p = 1;
      dir = DirVec(q, p);
    }
  }
  return {fp, dir, angle};
}

// ---------------------------------------------------------------- fundamental domain

const char* to_string(Wall w) {
  switch (w) {
    case Wall::None: return "none";
    case Wall::StripLeft: return "strip-left";
    case Wall::StripRight: return "strip-right";
    case Wall::InnerLeft: return "inner-left";
    case Wall::InnerRight: return "inner-right";
  }
  return "?";
}

const char* to_string(DomainTest::Region r) {
  switch (r) {
    case DomainTest::Region::Inside: return "inside";
    case DomainTest::Region::Boundary: return "boundary";
    case DomainTest::Region::Outside: return "outside";
  }
  return "?";
}

std::pair<Rational, Rational> FundDomain::wall_circle(const std::pair<Rational, Rational>& e) {
  return {(e.first + e.second) / 2, (e.second - e.first).abs() / 2};
}

namespace {

struct WallForms {
  QuadRat left;   // |z - 1|^2
  QuadRat right;  // |z + 1|^2
};

WallForms wall_forms(const HPoint& z) {
  const QuadRat y2 = z.im() * z.im();
  const QuadRat xm = z.re() - QuadRat(1);
  const QuadRat xp = z.re() + QuadRat(1);
  return {xm * xm + y2, xp * xp + y2};
}

}  // namespace

DomainTest in_fundamental_domain(const HPoint& z) {
  if (!z.is_interior()) throw DomainError("in_fundamental_domain needs an interior point");
  using R = DomainTest::Region;
  const int strip = (z.re().abs() - QuadRat(3)).sign();
  const auto [lsq, rsq] = wall_forms(z);
  const QuadRat four(4);
  // |(z-1)/(z+1)| compared with 2 and with 1/2.
  const int vs_two = (lsq - four * rsq).sign();
  const int vs_half = (four * lsq - rsq).sign();
  const Wall strip_wall = z.re().sign() < 0 ? Wall::StripLeft : Wall::StripRight;
  if (strip > 0) return {R::Outside, strip_wall};
  if (vs_two > 0) return {R::Outside, Wall::InnerLeft};
  if (vs_half < 0) return {R::Outside, Wall::InnerRight};
  if (strip == 0) return {R::Boundary, strip_wall};
  if (vs_two == 0) return {R::Boundary, Wall::InnerLeft};
  if (vs_half == 0) return {R::Boundary, Wall::InnerRight};
  return {R::Inside, Wall::None};
}

Reduction reduce_to_domain(const HPoint& z, int max_iterations) {
  if (!z.is_interior()) throw DomainError("reduce_to_domain needs an interior point");
  Reduction out{Word(), z, {}};
  for (int iter = 0; iter < max_iterations; ++iter) {
    // Translate Re into (-3, 3].
    const BigInt k = floor_of((QuadRat(3) - out.point.re()) / QuadRat(6));
    if (k != 0) {
      if (!k.fits_slong_p()) throw IterationLimit("translation exponent out of range");
      const long n = k.get_si();
      out.point = HPoint::interior(out.point.re() + QuadRat(Rational(6 * n)), out.point.im());
      out.word.prepend(Generator::P1, n);
      out.transcript.push_back({{Generator::P1, n}, Wall::None});
    }
    const auto [lsq, rsq] = wall_forms(out.point);
    const QuadRat four(4);
    Generator g = Generator::H;
    long e = 0;
    Wall wall = Wall::None;
    if ((lsq - four * rsq).sign() >= 0) {
      e = 1;
      wall = Wall::InnerLeft;
    } else if ((four * lsq - rsq).sign() < 0) {
      e = -1;
      wall = Wall::InnerRight;
    }
    if (e == 0) return out;
    out.point = mobius_apply(generator_matrix(g).pow(e), out.point);
    out.word.prepend(g, e);
    out.transcript.push_back({{g, e}, wall});
  }
  throw IterationLimit("reduction did not terminate within " + std::to_string(max_iterations) + " steps");
}

Membership is_member(const Mat2& m) {
  const Mat2 a = m.canonical();
  const Reduction r = reduce_to_domain(mobius_apply(a, HPoint::interior(0, 1)));
  const Mat2 residual = (r.word.matrix() * a).canonical();
  if (is_projective_identity(residual)) return {true, r.word.inverse(), residual};
  return {false, Word(), residual};
}

// ---------------------------------------------------------------- enumeration

namespace {

void walk(int remaining, const Word& word, const Mat2& mat, int last_step,
          const std::function<void(const Word&, const Mat2&)>& visit) {
  // Steps 0..3: P1, P1^-1, H, H^-1; step s is undone by s ^ 1.
  static const Mat2 steps[4] = {P1(), P1().inverse(), H(), H().inverse()};
  if (remaining == 0) return;
  for (int s = 0; s < 4; ++s) {
    if (last_step >= 0 && s == (last_step ^ 1)) continue;
    Word next = word;
    next.append(s < 2 ? Generator::P1 : Generator::H, (s & 1) ? -1 : 1);
    const Mat2 m = mat * steps[s];
    visit(next, m);
    walk(remaining - 1, next, m, s, visit);
  }
}

}  // namespace

void for_each_word(int max_length, const std::function<void(const Word&, const Mat2&)>& visit) {
  if (max_length < 0 || max_length > 12) throw DomainError("word length must be between 0 and 12");
  walk(max_length, Word(), Mat2::identity(), -1, visit);
}

std::vector<std::pair<Word, Mat2>> enumerate_words(int max_length) {
  std::vector<std::pair<Word, Mat2>> out;
  for_each_word(max_length, [&](const Word& w, const Mat2& m) { out.emplace_back(w, m.canonical()); });
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& x, const auto& y) { return x.first.length() < y.first.length(); });
  return out;
}

ParabolicScan parabolic_direction_scan(int max_length) {
  if (max_length > 10) throw DomainError("scan length is limited to 10");
  ParabolicScan scan;
  scan.max_length = max_length;
  for_each_word(max_length, [&](const Word& w, const Mat2& m) {
    ++scan.words_checked;
    if (classify(m) != MobiusType::Parabolic) return;
    ++scan.parabolics;
    const HPoint fp = fixed_points(m).front();
    if (scan.sample.size() < 16) scan.sample.emplace_back(w, fp);
    if (!fp.is_infinity() && (fp.re().abs() - QuadRat(1)).sign() < 0) scan.counterexamples.emplace_back(w, fp);
  });
  return scan;
}

// ---------------------------------------------------------------- side pairing

bool SidePairingReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const PairingCheck& c) { return c.pass; });
}

SidePairingReport verify_side_pairing() {
  SidePairingReport report;
  auto point_check = [&](std::string name, const Mat2& g, const HPoint& z, const HPoint& expected) {
    const HPoint got = mobius_apply(g, z);
    report.checks.push_back({std::move(name), expected.str(), got.str(), got == expected});
  };
  for (long t : {1L, 2L}) {
    point_check("P1 maps Re=-3 to Re=3 at height " + std::to_string(t), P1(), HPoint::interior(-3, t),
                HPoint::interior(3, t));
  }
  point_check("H maps -3 to 3", H(), HPoint::real(-3), HPoint::real(3));
  point_check("H maps -1/3 to 1/3", H(), HPoint::real(Rational(-1, 3)), HPoint::real(Rational(1, 3)));

  // Top of the left inner wall must land on the right inner wall.
  const FundDomain F;
  const auto [center, radius] = FundDomain::wall_circle(F.inner_left);
  const HPoint top = mobius_apply(H(), HPoint::interior(center, radius));
  const DomainTest t = in_fundamental_domain(top);
  report.checks.push_back({"H maps the left inner wall onto the right inner wall", "boundary inner-right",
                           std::string(to_string(t.region)) + " " + to_string(t.wall),
                           t.region == DomainTest::Region::Boundary && t.wall == Wall::InnerRight});

  auto cusp_check = [&](std::string name, const Mat2& g, const HPoint& cusp) {
    const MobiusType type = classify(g);
    const auto fps = type == MobiusType::Identity ? std::vector<HPoint>{} : fixed_points(g);
    const bool ok = type == MobiusType::Parabolic && fps.size() == 1 && fps.front() == cusp;
    report.checks.push_back({std::move(name), "parabolic fixing " + cusp.str(),
                             std::string(to_string(type)) + (fps.empty() ? "" : " fixing " + fps.front().str()), ok});
  };
  cusp_check("stabilizer of the cusp at infinity", P1(), HPoint::infinity());
  cusp_check("stabilizer of the cusp at 3", P2(), HPoint::real(3));
  cusp_check("stabilizer of the cusp at -3", (P1().inverse() * P2() * P1()).canonical(), HPoint::real(-3));

  const Mat2 conj = (M().inverse() * H() * M()).canonical();
  const Mat2 diag(2, 0, 0, Rational(1, 2));
  report.checks.push_back({"M^-1 H M is diagonal", diag.str(), conj.str(), projectively_equal(conj, diag)});
  return report;
}

}  // namespace chamanara
