#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "chamanara/cylinders.hpp"

using namespace chamanara;

namespace {

const CylinderDecomposition& dec(int n, int depth = 6) {
  static std::map<std::pair<int, int>, CylinderDecomposition> cache;
  auto it = cache.find({n, depth});
  if (it == cache.end()) it = cache.emplace(std::make_pair(n, depth), decompose(n, depth)).first;
  return it->second;
}

std::set<Rational> moduli(const CylinderDecomposition& d, CylinderKind kind) {
  std::set<Rational> out;
  for (const Cylinder& c : d.cylinders) {
    if (c.kind == kind) out.insert(c.modulus());
  }
  return out;
}

// Shoelace area of a polygon with exact vertices.
Rational shoelace(const std::array<SurfacePoint, 4>& p) {
  Rational twice;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const SurfacePoint& a = p[i];
    const SurfacePoint& b = p[(i + 1) % p.size()];
    twice += a.x * b.y - b.x * a.y;
  }
  return twice.abs() / 2;
}

Cylinder test_cylinder(const DirVec& dir, Rational wc, Rational hc) {
  return Cylinder{dir, wc, hc, {}, CylinderKind::Parallelogram, {}, Rational(0)};
}

}  // namespace

TEST_CASE("slope 1: every cylinder has modulus 6") {
  const auto& d = dec(0);
  REQUIRE(d.cylinders.size() == 6);
  for (const Cylinder& c : d.cylinders) {
    CHECK(c.modulus() == Rational(6));
    CHECK(c.kind == CylinderKind::Trapezoid);
  }
  CHECK(d.cylinders.front().wc == Rational(3, 2));
  CHECK(d.cylinders.front().hc == Rational(1, 2));
}

TEST_CASE("slope 2: trapezoids 15/2 and one parallelogram 5/2") {
  const auto& d = dec(1);
  CHECK(moduli(d, CylinderKind::Trapezoid) == std::set<Rational>{Rational(15, 2)});
  CHECK(moduli(d, CylinderKind::Parallelogram) == std::set<Rational>{Rational(5, 2)});
  const Cylinder& mid = d.cylinders.front();
  CHECK(mid.kind == CylinderKind::Parallelogram);
  CHECK(mid.hc == Rational(1));
  CHECK(mid.wc == Rational(1, 2));
  CHECK(mid.pieces.size() == 1);
}

TEST_CASE("slope 4: inverse modulus 4/51 for every cylinder") {
  const auto& d = dec(2);
  for (const Cylinder& c : d.cylinders) CHECK(c.inverse_modulus() == Rational(4, 51));
  CHECK(moduli(d, CylinderKind::Trapezoid) == std::set<Rational>{Rational(51, 4)});
  const Cylinder& mid = d.cylinders.front();
  CHECK(mid.kind == CylinderKind::Parallelogram);
  CHECK(mid.pieces.size() == 3);
  CHECK(commensurate(d).multipliers == std::vector<long>(d.cylinders.size(), 1));
}

TEST_CASE("negative exponents mirror positive ones") {
  const auto& a = dec(1);
  const auto& b = dec(-1);
  REQUIRE(a.cylinders.size() == b.cylinders.size());
  for (std::size_t i = 0; i < a.cylinders.size(); ++i) {
    CHECK(a.cylinders[i].wc == b.cylinders[i].wc);
    CHECK(a.cylinders[i].hc == b.cylinders[i].hc);
  }
  CHECK(a.covered_area == b.covered_area);
}

TEST_CASE("modulus") {
  CHECK(modulus(test_cylinder(DirVec(1, 1), Rational(3, 2), Rational(1, 2))) == Rational(6));
  CHECK(modulus(test_cylinder(DirVec(1, 2), Rational(3, 4), Rational(1, 2))) == Rational(15, 2));
  CHECK(modulus(test_cylinder(DirVec(1, 0), Rational(2, 3), Rational(2, 3))) == Rational(1));
}

TEST_CASE("commensurate") {
  CHECK(commensurate(dec(0)).m == Rational(1, 6));
  const auto c2 = commensurate(dec(1));
  CHECK(c2.m == Rational(2, 15));
  CHECK(std::set<long>(c2.multipliers.begin(), c2.multipliers.end()) == std::set<long>{1, 3});
  for (std::size_t i = 0; i < c2.multipliers.size(); ++i) {
    CHECK((c2.multipliers[i] == 3) == (dec(1).cylinders[i].kind == CylinderKind::Parallelogram));
  }
  CylinderDecomposition single{DirVec(1, 0), 0, 2, {test_cylinder(DirVec(1, 0), Rational(5), Rational(1))}, Rational(5)};
  const auto c1 = commensurate(single);
  CHECK(c1.m == Rational(1, 5));
  CHECK(c1.multipliers == std::vector<long>{1});
  CylinderDecomposition empty{DirVec(1, 0), 0, 2, {}, Rational(0)};
  CHECK_THROWS_AS(commensurate(empty), DomainError);
}

TEST_CASE("twist counts: k * m * modulus = 1") {
  for (int n : {0, 1, 2, -1, -2, 3}) {
    const auto& d = dec(n);
    const auto c = commensurate(d);
    for (std::size_t i = 0; i < d.cylinders.size(); ++i) {
      CHECK(Rational(c.multipliers[i]) * c.m * d.cylinders[i].modulus() == Rational(1));
    }
  }
}

TEST_CASE("shear_matrix") {
  CHECK(shear_matrix(DirVec(1, 0), Rational(6)) == Mat2(1, 6, 0, 1));
  CHECK(shear_matrix(DirVec(3, 1), Rational(15, 2)) ==
        Mat2(Rational(-5, 4), Rational(27, 4), Rational(-3, 4), Rational(13, 4)));
  const Mat2 s4 = shear_matrix(DirVec(5, 3), Rational(51, 4));
  CHECK(s4 == Mat2(Rational(-37, 8), Rational(75, 8), Rational(-27, 8), Rational(53, 8)));
  CHECK(s4.trace() == QuadRat(2));
  CHECK(s4.det() == QuadRat(1));
  CHECK_THROWS_AS(shear_matrix(DirVec(1, 0), Rational(0)), DomainError);
}

TEST_CASE("synthesize_parabolic") {
  const auto p1 = synthesize_parabolic(dec(0));
  CHECK(p1.rotated_direction == DirVec(1, 0));
  CHECK(projectively_equal(p1.matrix, P1()));
  CHECK(p1.twists == std::vector<long>(dec(0).cylinders.size(), 1));
  const auto p2 = synthesize_parabolic(dec(1));
  CHECK(p2.rotated_direction == DirVec(3, 1));
  CHECK(projectively_equal(p2.matrix, P2()));
  const auto p4 = synthesize_parabolic(dec(2));
  CHECK(p4.rotated_direction == DirVec(5, 3));
  CHECK(projectively_equal(p4.matrix, Mat2(Rational(-37, 8), Rational(75, 8), Rational(-27, 8), Rational(53, 8))));
  // Second route: the slope-4 parabolic is H P1 H^-1.
  CHECK(projectively_equal(p4.matrix, H() * P1() * H().inverse()));
  // Slope 1/2 gives P1^-1 P2 P1, the stabilizer of the cusp -3.
  CHECK(projectively_equal(synthesize_parabolic(dec(-1)).matrix, P1().inverse() * P2() * P1()));
}

TEST_CASE("synthesized parabolics fix their direction") {
  for (int n = -3; n <= 3; ++n) {
    const auto s = synthesize_parabolic(dec(n));
    CHECK(s.matrix.det() == QuadRat(1));
    CHECK(s.matrix.trace() == QuadRat(2));
    const QuadRat q(Rational(static_cast<long>(s.rotated_direction.q())));
    const QuadRat p(Rational(static_cast<long>(s.rotated_direction.p())));
    CHECK(s.matrix.a() * q + s.matrix.b() * p == q);
    CHECK(s.matrix.c() * q + s.matrix.d() * p == p);
  }
}

TEST_CASE("boundary_count") {
  for (const Cylinder& c : dec(0, 8).cylinders) CHECK(boundary_count(c) == 4);
  const auto& big = dec(0, 8).cylinders.front().boundary;
  std::set<std::string> starts;
  for (const auto& sc : big) starts.insert(anchor_name(sc.start));
  CHECK(starts.size() == 3);  // one connection counted twice
  CHECK(boundary_count(dec(0, 8).cylinders[1]) == 4);
  CHECK(boundary_count(dec(1, 8).cylinders.front()) == 2);
}

TEST_CASE("pieces tile each cylinder: shoelace area equals wc * hc") {
  for (int n : {0, 1, 2, -2}) {
    for (const Cylinder& c : dec(n).cylinders) {
      Rational area;
      for (const CylinderPiece& p : c.pieces) area += shoelace(p.corners);
      CHECK(area == c.area());
    }
  }
}

TEST_CASE("covered area: 1 - c 4^-depth and at least 1 - 4^(1-depth)") {
  for (int n : {0, 1, 2}) {
    std::optional<Rational> c;
    for (int depth = 4; depth <= 10; ++depth) {
      const CylinderDecomposition d = decompose(n, depth);
      const Rational tail = Rational(1) - d.covered_area;
      CHECK(tail.sign() > 0);
      CHECK(d.covered_area >= Rational(1) - Rational::pow2(2 - 2 * depth));
      const Rational scaled = tail * Rational::pow2(2 * depth);
      if (c) CHECK(scaled == *c);
      c = scaled;
    }
  }
}

TEST_CASE("cylinders are pairwise disjoint") {
  for (int n : {0, 1, 2}) {
    const auto& d = dec(n);
    const DirVec dir = d.direction;
    std::vector<std::pair<Rational, Rational>> slices;
    for (const Cylinder& c : d.cylinders) {
      for (const CylinderPiece& p : c.pieces) {
        slices.emplace_back(transversal(dir, p.corners[0]), transversal(dir, p.corners[3]));
      }
    }
    for (std::size_t i = 0; i < slices.size(); ++i) {
      for (std::size_t j = i + 1; j < slices.size(); ++j) {
        const bool overlap = slices[i].first < slices[j].second && slices[j].first < slices[i].second;
        CHECK_FALSE(overlap);
      }
    }
  }
}

TEST_CASE("renormalization_check") {
  const auto r1 = renormalization_check(dec(0, 8));
  CHECK(r1.sufficient);
  CHECK(r1.passed);
  for (const Rational& q : r1.ratios) CHECK(q == Rational(1, 2));
  CHECK(renormalization_check(dec(1, 8)).passed);
  CHECK(renormalization_check(dec(2, 8)).passed);
  const auto r0 = renormalization_check(decompose(0, 2));
  CHECK_FALSE(r0.sufficient);
  CHECK(r0.message.find("insufficient") != std::string::npos);
}

TEST_CASE("preconditions") {
  CHECK_THROWS_AS(decompose(0, 1), DomainError);
  CHECK_THROWS_AS(decompose(3, 2), DomainError);
}

TEST_CASE("a broken gluing does not reproduce the slope-1 moduli") {
  bool reproduced = false;
  try {
    const CylinderDecomposition d = decompose(Surface(6, Gluing::MirroredVertical), 0);
    reproduced = !d.cylinders.empty();
    for (const Cylinder& c : d.cylinders) reproduced = reproduced && c.modulus() == Rational(6);
  } catch (const DecompositionIncomplete& e) {
    CHECK(e.partial().depth == 6);
  }
  CHECK_FALSE(reproduced);
}
