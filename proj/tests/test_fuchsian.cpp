#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "chamanara/cylinders.hpp"
#include "chamanara/fuchsian.hpp"

using namespace chamanara;

namespace {

HPoint pt(Rational re, Rational im) { return HPoint::interior(QuadRat(re), QuadRat(im)); }

Word random_word(std::mt19937_64& rng, int max_length) {
  std::uniform_int_distribution<int> len(1, max_length), sign(0, 1);
  Word w;
  const int target = len(rng);
  Generator g = sign(rng) ? Generator::P1 : Generator::H;
  while (w.length() < target) {
    const long e = sign(rng) ? 1 : -1;
    const long before = w.length();
    w.append(g, e);
    // Appending the inverse of the last letter would shorten the word.
    if (w.length() < before) w.append(g, 2 * -e);
    g = sign(rng) ? Generator::P1 : Generator::H;
  }
  return w;
}

}  // namespace

TEST_CASE("matrices") {
  CHECK_THROWS_AS(Mat2(1, 2, 2, 4), DomainError);
  CHECK_THROWS_AS(Mat2(0, 1, 1, 0), DomainError);
  CHECK(P1().pow(3) == Mat2(1, 18, 0, 1));
  CHECK(P1().pow(-1) == Mat2(1, -6, 0, 1));
  CHECK(H() == Mat2(Rational(5, 4), Rational(3, 4), Rational(3, 4), Rational(5, 4)));
  CHECK(H().det() == QuadRat(1));
  CHECK(projectively_equal(P2() * P1(), H()));
  CHECK(projectively_equal(Mat2(2, 0, 0, 2), Mat2::identity()));
  CHECK(Mat2(-2, 0, 0, -2).canonical() == Mat2::identity());
  CHECK(M().det() == QuadRat(1));
  CHECK(projectively_equal(M().inverse() * H() * M(), Mat2(2, 0, 0, Rational(1, 2))));
}

TEST_CASE("mobius_apply") {
  CHECK(mobius_apply(P1(), pt(0, 1)) == pt(6, 1));
  CHECK(mobius_apply(H(), HPoint::real(QuadRat(-3))) == HPoint::real(QuadRat(3)));
  CHECK(mobius_apply(H(), HPoint::real(QuadRat(Rational(-1, 3)))) == HPoint::real(QuadRat(Rational(1, 3))));
  CHECK(mobius_apply(P1(), HPoint::infinity()).is_infinity());
  CHECK(mobius_apply(Mat2(0, -1, 1, 0), HPoint::real(QuadRat(0))).is_infinity());
  CHECK(mobius_apply(H(), HPoint::infinity()) == HPoint::real(QuadRat(Rational(5, 3))));
  // M is a rotation about i.
  CHECK(mobius_apply(M(), pt(0, 1)) == pt(0, 1));
  CHECK(mobius_apply(M(), HPoint::real(QuadRat(2))) == HPoint::real(QuadRat(Rational(1, 3))));
  CHECK(mobius_apply(M(), HPoint::real(QuadRat(Rational(1, 2)))) == HPoint::real(QuadRat(Rational(-1, 3))));
}

TEST_CASE("classify and fixed points") {
  CHECK(classify(Mat2::identity()) == MobiusType::Identity);
  CHECK(classify(P1()) == MobiusType::Parabolic);
  CHECK(classify(P2()) == MobiusType::Parabolic);
  CHECK(classify(H()) == MobiusType::Hyperbolic);
  CHECK(classify(M()) == MobiusType::Elliptic);
  CHECK(fixed_points(P1()) == std::vector<HPoint>{HPoint::infinity()});
  CHECK(fixed_points(P2()) == std::vector<HPoint>{HPoint::real(QuadRat(3))});
  CHECK(fixed_points(H()) == std::vector<HPoint>{HPoint::real(QuadRat(-1)), HPoint::real(QuadRat(1))});
  CHECK(fixed_points(M()) == std::vector<HPoint>{pt(0, 1)});
  const Mat2 cusp = P1().inverse() * P2() * P1();
  CHECK(classify(cusp) == MobiusType::Parabolic);
  CHECK(fixed_points(cusp) == std::vector<HPoint>{HPoint::real(QuadRat(-3))});
}

TEST_CASE("eigen_direction and frame_rotate") {
  const EigenDirection e1 = eigen_direction(P1());
  CHECK(e1.fixed_point.is_infinity());
  CHECK(e1.direction == DirVec(1, 0));
  CHECK(e1.angle == EigenDirection::Angle::Allowed);
  const EigenDirection e2 = eigen_direction(P2());
  CHECK(e2.direction == DirVec(3, 1));
  CHECK(eigen_direction(Mat2(1, 0, 1, 1)).angle == EigenDirection::Angle::Forbidden);
  CHECK_THROWS_AS(eigen_direction(H()), DomainError);
  CHECK(frame_rotate(DirVec(1, 1)) == DirVec(1, 0));
  CHECK(frame_rotate(DirVec(1, 2)) == DirVec(3, 1));
  CHECK(frame_rotate(DirVec(1, 4)) == DirVec(5, 3));
}

TEST_CASE("words") {
  CHECK(Word::parse("H P1^-2").str() == "H P1^-2");
  CHECK(Word::parse("I").empty());
  CHECK(Word::parse("P2") == Word::parse("H*P1^-1"));
  CHECK(Word::parse("P1 P1^-1 H").str() == "H");
  CHECK(Word::parse("P1.P1").str() == "P1^2");
  CHECK(Word::parse("H P1^-2").length() == 3);
  CHECK(projectively_equal(Word::parse("P2").matrix(), P2()));
  CHECK_THROWS_AS(Word::parse("Q"), ParseError);
  CHECK_THROWS_AS(Word::parse("P1^"), ParseError);
  const Word w = Word::parse("H P1^2 H^-1");
  CHECK((w * w.inverse()).empty());
}

TEST_CASE("in_fundamental_domain") {
  CHECK(in_fundamental_domain(pt(0, 1)).region == DomainTest::Region::Inside);
  const DomainTest out = in_fundamental_domain(pt(1, 1));
  CHECK(out.region == DomainTest::Region::Outside);
  CHECK(out.wall == Wall::InnerRight);
  const DomainTest edge = in_fundamental_domain(pt(3, 1));
  CHECK(edge.region == DomainTest::Region::Boundary);
  CHECK(edge.wall == Wall::StripRight);
  CHECK(in_fundamental_domain(pt(-4, 1)).wall == Wall::StripLeft);
  CHECK_THROWS_AS(in_fundamental_domain(HPoint::infinity()), DomainError);
}

TEST_CASE("reduce_to_domain") {
  const Reduction r0 = reduce_to_domain(pt(0, 1));
  CHECK(r0.word.empty());
  CHECK(r0.point == pt(0, 1));
  CHECK(r0.transcript.empty());
  CHECK(reduce_to_domain(pt(6, 1)).word.str() == "P1^-1");
  CHECK(reduce_to_domain(mobius_apply(H(), pt(0, 1))).word.str() == "H^-1");
  const Reduction r10 = reduce_to_domain(pt(10, 1));
  CHECK(r10.word.str() == "H P1^-2");
  CHECK(r10.point == pt(Rational(11, 5), Rational(8, 5)));
  CHECK(r10.transcript.size() == 2);
  CHECK_THROWS_AS(reduce_to_domain(HPoint::real(QuadRat(0))), DomainError);
}

TEST_CASE("reduction is consistent with the group action") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> num(-40, 40), den(1, 8);
  for (int i = 0; i < 100; ++i) {
    const HPoint z = pt(Rational(num(rng), den(rng)), Rational(std::abs(num(rng)) + 1, den(rng)));
    const Reduction r = reduce_to_domain(z);
    CHECK(mobius_apply(r.word.matrix(), z) == r.point);
    CHECK(in_fundamental_domain(r.point).region != DomainTest::Region::Outside);
  }
}

TEST_CASE("is_member") {
  const Membership p1 = is_member(P1());
  CHECK(p1.member);
  CHECK(p1.word.str() == "P1");
  CHECK(is_member(Mat2(1, 6, 0, 1)).member);
  CHECK_FALSE(is_member(Mat2(1, 1, 0, 1)).member);
  CHECK_FALSE(is_member(Mat2(1, 3, 0, 1)).member);
  const Membership bad = is_member(Mat2(1, 1, 0, 1));
  CHECK(classify(bad.residual) == MobiusType::Elliptic);
  CHECK(is_member(P2()).member);
  CHECK(is_member(Mat2::identity()).word.empty());
  CHECK(is_member(M()).member == false);
  const Membership cusp = is_member(P1().inverse() * P2() * P1());
  CHECK(cusp.member);
  CHECK(cusp.word.str() == "P1^-1 H");
  // The slope-4 shear is H P1 H^-1.
  const Membership s4 = is_member(shear_matrix(DirVec(5, 3), Rational(51, 4)));
  CHECK(s4.member);
  CHECK(s4.word.str() == "H P1 H^-1");
}

TEST_CASE("membership round trip on random words") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 200; ++i) {
    const Word w = random_word(rng, 8);
    const Membership m = is_member(w.matrix());
    CAPTURE(w.str());
    CHECK(m.member);
    CHECK(m.word == w);
  }
}

TEST_CASE("conjugation keeps the type") {
  for (const auto& [w, m] : enumerate_words(4)) {
    for (const Mat2& x : {P1(), P2(), H()}) {
      CHECK(classify(m * x * m.inverse()) == classify(x));
    }
  }
}

TEST_CASE("enumerate_words") {
  for (int L = 1; L <= 5; ++L) {
    long count = 0;
    for (const auto& [w, m] : enumerate_words(L)) {
      if (w.length() == L) ++count;
    }
    long expected = 4;
    for (int k = 1; k < L; ++k) expected *= 3;
    CHECK(count == expected);
  }
  const auto words = enumerate_words(3);
  for (std::size_t i = 1; i < words.size(); ++i) CHECK(words[i - 1].first.length() <= words[i].first.length());
  for (const auto& [w, m] : words) CHECK(m == w.matrix());
  CHECK_THROWS_AS(enumerate_words(13), DomainError);
}

TEST_CASE("no word is trivial: translates of the domain are disjoint") {
  // i lies inside the domain; a nontrivial element moving it back inside
  // would contradict the tiling.
  for (const auto& [w, m] : enumerate_words(6)) {
    const HPoint image = mobius_apply(m, pt(0, 1));
    CHECK(in_fundamental_domain(image).region == DomainTest::Region::Outside);
  }
}

TEST_CASE("parabolic_direction_scan") {
  for (int L : {1, 2, 4}) {
    const ParabolicScan s = parabolic_direction_scan(L);
    CHECK(s.passed());
    CHECK(s.parabolics > 0);
  }
  CHECK(parabolic_direction_scan(1).parabolics == 2);
  CHECK_THROWS_AS(parabolic_direction_scan(11), DomainError);
}

TEST_CASE("verify_side_pairing") {
  const SidePairingReport r = verify_side_pairing();
  CHECK(r.passed());
  for (const PairingCheck& c : r.checks) {
    CAPTURE(c.name);
    CHECK(c.pass);
  }
  CHECK(r.checks.size() >= 6);
}
