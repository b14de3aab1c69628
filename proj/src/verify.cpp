#include "chamanara/verify.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "chamanara/cylinders.hpp"
#include "chamanara/fuchsian.hpp"

namespace chamanara {

bool VerificationReport::passed() const {
  return std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.pass; });
}

const Claim* VerificationReport::find(const std::string& id) const {
  for (const Claim& c : claims) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

namespace {

std::string join(const std::vector<std::string>& parts, const char* sep = ", ") {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += sep;
    out += p;
  }
  return out;
}

template <class T>
std::string distinct(const std::vector<T>& values) {
  std::set<T> seen(values.begin(), values.end());
  std::vector<std::string> parts;
  for (const T& v : seen) {
    std::ostringstream os;
    os << v;
    parts.push_back(os.str());
  }
  return join(parts);
}

std::string points(const std::vector<HPoint>& pts) {
  std::vector<std::string> parts;
  for (const HPoint& p : pts) parts.push_back(p.str());
  return "{" + join(parts) + "}";
}

// Height and circumference of a cylinder as exact quadratic irrationals.
QuadRat height(const Cylinder& c) {
  return QuadRat(c.hc) * QuadRat::sqrt_of(Rational(1, static_cast<long>(c.direction.norm2())));
}
QuadRat circumference(const Cylinder& c) {
  return QuadRat(c.wc) * QuadRat::sqrt_of(Rational(static_cast<long>(c.direction.norm2())));
}

class Builder {
 public:
  explicit Builder(VerificationReport& r) : report_(r) {}

  // Pass when the computed text equals the expected text.
  void text(std::string id, std::string location, std::string expected, const std::function<std::string()>& compute) {
    Claim c{std::move(id), std::move(location), std::move(expected), "", false};
    try {
      c.computed = compute();
      c.pass = c.computed == c.expected;
    } catch (const std::exception& e) {
      c.computed = std::string("error: ") + e.what();
    }
    report_.claims.push_back(std::move(c));
  }

  void matrix(std::string id, std::string location, const Mat2& expected, const std::function<Mat2()>& compute) {
    Claim c{std::move(id), std::move(location), expected.str(), "", false};
    try {
      const Mat2 got = compute();
      c.computed = got.str();
      c.pass = projectively_equal(got, expected);
    } catch (const std::exception& e) {
      c.computed = std::string("error: ") + e.what();
    }
    report_.claims.push_back(std::move(c));
  }

 private:
  VerificationReport& report_;
};

}  // namespace

VerificationReport verify_paper(int depth, Gluing gluing) {
  if (depth < 2) throw DomainError("verification needs depth >= 2");
  VerificationReport report;
  report.depth = depth;
  Builder add(report);
  const Surface surface(depth, gluing);

  // Decompositions are computed lazily so one failure only affects its own claims.
  std::optional<CylinderDecomposition> cache[3];
  auto dec = [&](int n) -> const CylinderDecomposition& {
    if (!cache[n]) cache[n] = decompose(surface, n);
    return *cache[n];
  };
  auto of_kind = [](const CylinderDecomposition& d, CylinderKind k) {
    std::vector<const Cylinder*> out;
    for (const Cylinder& c : d.cylinders) {
      if (c.kind == k) out.push_back(&c);
    }
    if (out.empty()) throw Error(std::string("no ") + to_string(k) + " cylinder");
    return out;
  };
  auto moduli = [](const std::vector<const Cylinder*>& cs, bool inverse) {
    std::vector<Rational> v;
    for (const Cylinder* c : cs) v.push_back(inverse ? c->inverse_modulus() : c->modulus());
    return distinct(v);
  };

  // ---- slope 1
  add.text("slope1.modulus", "slope-1 decomposition, modulus of all cylinders", "6", [&] {
    std::vector<const Cylinder*> all;
    for (const Cylinder& c : dec(0).cylinders) all.push_back(&c);
    return moduli(all, false);
  });
  add.text("slope1.largest.height", "slope-1 decomposition, height of the largest cylinder",
           QuadRat::surd(Rational(1, 4), 2).str(), [&] { return height(dec(0).cylinders.front()).str(); });
  add.text("slope1.largest.circumference", "slope-1 decomposition, circumference of the largest cylinder",
           QuadRat::surd(Rational(3, 2), 2).str(), [&] { return circumference(dec(0).cylinders.front()).str(); });

  // ---- slope 2
  add.text("slope2.trapezoid.modulus", "slope-2 decomposition, modulus of the trapezoid cylinders", "15/2",
           [&] { return moduli(of_kind(dec(1), CylinderKind::Trapezoid), false); });
  add.text("slope2.trapezoid.height", "slope-2 decomposition, height of the largest trapezoid cylinder",
           QuadRat::surd(Rational(1, 10), 5).str(),
           [&] { return height(*of_kind(dec(1), CylinderKind::Trapezoid).front()).str(); });
  add.text("slope2.trapezoid.circumference", "slope-2 decomposition, circumference of the largest trapezoid cylinder",
           QuadRat::surd(Rational(3, 4), 5).str(),
           [&] { return circumference(*of_kind(dec(1), CylinderKind::Trapezoid).front()).str(); });
  add.text("slope2.middle.modulus", "slope-2 decomposition, modulus of the middle cylinder", "5/2",
           [&] { return moduli(of_kind(dec(1), CylinderKind::Parallelogram), false); });
  add.text("slope2.middle.height", "slope-2 decomposition, height of the middle cylinder",
           QuadRat::surd(Rational(1, 5), 5).str(),
           [&] { return height(*of_kind(dec(1), CylinderKind::Parallelogram).front()).str(); });
  add.text("slope2.middle.circumference", "slope-2 decomposition, circumference of the middle cylinder",
           QuadRat::surd(Rational(1, 2), 5).str(),
           [&] { return circumference(*of_kind(dec(1), CylinderKind::Parallelogram).front()).str(); });

  // ---- slope 4 (the stated 4/51 is height over circumference)
  add.text("slope4.trapezoid.inverse_modulus", "slope-4 decomposition, value for the trapezoid cylinders", "4/51",
           [&] { return moduli(of_kind(dec(2), CylinderKind::Trapezoid), true); });
  add.text("slope4.middle.inverse_modulus", "slope-4 decomposition, value for the middle cylinder", "4/51",
           [&] { return moduli(of_kind(dec(2), CylinderKind::Parallelogram), true); });

  // ---- parabolic elements
  add.matrix("P1", "parabolic element of the slope-1 decomposition", P1(),
             [&] { return synthesize_parabolic(dec(0)).matrix; });
  add.text("slope1.twists", "slope-1 parabolic, Dehn twist on every cylinder", "1",
           [&] { return distinct(synthesize_parabolic(dec(0)).twists); });
  add.text("sin_alpha", "angle of the slope-2 direction after rotating by -pi/4",
           QuadRat::surd(Rational(1, 10), 10).str(), [&] {
             const DirVec r = frame_rotate(dec(1).direction);
             return (QuadRat(Rational(static_cast<long>(r.p()))) *
                     QuadRat::sqrt_of(Rational(1, static_cast<long>(r.norm2()))))
                 .str();
           });
  const Mat2 p2_stated(Rational(-5, 4), Rational(27, 4), Rational(-3, 4), Rational(13, 4));
  add.matrix("P2", "parabolic element of the slope-2 decomposition", p2_stated,
             [&] { return synthesize_parabolic(dec(1)).matrix; });
  add.matrix("P2.rotation", "conjugation of the 15/2 shear by the rotation through alpha", p2_stated, [] {
    const QuadRat c = QuadRat::surd(Rational(3, 10), 10);
    const QuadRat s = QuadRat::surd(Rational(1, 10), 10);
    return Mat2(c, -s, s, c) * Mat2(1, Rational(15, 2), 0, 1) * Mat2(c, s, -s, c);
  });
  add.text("slope2.twists", "slope-2 parabolic, triple Dehn twist on the middle cylinder",
           "middle: 3; others: 1", [&] {
             const CylinderDecomposition& d = dec(1);
             const auto tw = synthesize_parabolic(d).twists;
             std::vector<long> mid, rest;
             for (std::size_t i = 0; i < tw.size(); ++i) {
               (d.cylinders[i].kind == CylinderKind::Parallelogram ? mid : rest).push_back(tw[i]);
             }
             return "middle: " + distinct(mid) + "; others: " + distinct(rest);
           });

  // ---- the group
  add.matrix("H", "H = P2 P1", Mat2(Rational(5, 4), Rational(3, 4), Rational(3, 4), Rational(5, 4)),
             [] { return P2() * P1(); });
  add.text("H.type", "H is hyperbolic with fixed points 1 and -1", "hyperbolic {-1, 1}",
           [] { return std::string(to_string(classify(P2() * P1()))) + " " + points(fixed_points(P2() * P1())); });
  add.text("P1.fixed", "fixed point of P1", "parabolic {inf}",
           [] { return std::string(to_string(classify(P1()))) + " " + points(fixed_points(P1())); });
  add.text("P2.fixed", "fixed point of P2", "parabolic {3}",
           [] { return std::string(to_string(classify(P2()))) + " " + points(fixed_points(P2())); });
  add.text("M.elliptic", "M is elliptic of order 4 and fixes i", "elliptic {i}, M^2 != I, M^4 = I", [] {
    const Mat2 m = M();
    std::string s = std::string(to_string(classify(m))) + " " + points(fixed_points(m));
    s += is_projective_identity(m.pow(2).canonical()) ? ", M^2 = I" : ", M^2 != I";
    s += is_projective_identity(m.pow(4).canonical()) ? ", M^4 = I" : ", M^4 != I";
    return s;
  });
  add.text("M.images", "images of -2, -1/2, 1/2, 2 under M", "3, -3, -1/3, 1/3", [] {
    std::vector<std::string> parts;
    for (const Rational& x : {Rational(-2), Rational(-1, 2), Rational(1, 2), Rational(2)}) {
      parts.push_back(mobius_apply(M(), HPoint::real(x)).str());
    }
    return join(parts);
  });
  add.matrix("M.conjugate", "M^-1 H M", Mat2(2, 0, 0, Rational(1, 2)), [] { return M().inverse() * H() * M(); });
  add.text("side_pairing", "P1 and H pair the sides of the fundamental domain", "all checks pass", [] {
    const SidePairingReport r = verify_side_pairing();
    std::vector<std::string> failed;
    for (const auto& c : r.checks) {
      if (!c.pass) failed.push_back(c.name);
    }
    return failed.empty() ? std::string("all checks pass") : "failed: " + join(failed);
  });
  add.text("cusp.minus3", "P1^-1 P2 P1 fixes the cusp -3", "parabolic {-3}", [] {
    const Mat2 g = P1().inverse() * P2() * P1();
    return std::string(to_string(classify(g))) + " " + points(fixed_points(g));
  });
  add.text("cusp.identified", "P1^-1 maps the cusp 3 to -3", "-3",
           [] { return mobius_apply(P1().inverse(), HPoint::real(3)).str(); });
  add.text("parabolic.minus1", "the parabolic (1/2)[[1,-1],[1,3]]", "fixed point -1, boundary", [] {
    const EigenDirection e = eigen_direction(Mat2(Rational(1, 2), Rational(-1, 2), Rational(1, 2), Rational(3, 2)));
    return "fixed point " + e.fixed_point.str() + ", " + to_string(e.angle);
  });
  add.text("parabolic.plus1", "the parabolic (1/2)[[1,1],[-1,3]]", "fixed point 1, boundary", [] {
    const EigenDirection e = eigen_direction(Mat2(Rational(1, 2), Rational(1, 2), Rational(-1, 2), Rational(3, 2)));
    return "fixed point " + e.fixed_point.str() + ", " + to_string(e.angle);
  });

  // ---- boundaries and longest connections
  add.text("slope1.boundary", "boundary of every slope-1 cylinder, largest with a repeated connection",
           "4 each; largest repeats one", [&] {
             std::vector<int> counts;
             for (const Cylinder& c : dec(0).cylinders) counts.push_back(boundary_count(c));
             const auto& big = dec(0).cylinders.front().boundary;
             std::set<std::string> names;
             for (const auto& sc : big) names.insert(anchor_name(sc.start));
             const bool repeats = names.size() + 1 == big.size();
             return distinct(counts) + " each; largest " + (repeats ? "repeats one" : "has no repeat");
           });
  add.text("slope2.boundary", "boundary of the largest slope-2 cylinder", "2",
           [&] { return std::to_string(boundary_count(dec(1).cylinders.front())); });
  add.text("slope2.longest", "longest saddle connections in the slope-2 direction", "2", [&] {
    const auto scs = saddle_connections(surface, dec(1).direction);
    Rational longest;
    int count = 0;
    for (const auto& sc : scs) {
      const Rational l = sc.length_squared();
      if (l > longest) {
        longest = l;
        count = 1;
      } else if (l == longest) {
        ++count;
      }
    }
    return std::to_string(count);
  });
  return report;
}

std::string to_text(const VerificationReport& report) {
  std::ostringstream os;
  int passed = 0;
  for (const Claim& c : report.claims) {
    os << (c.pass ? "PASS " : "FAIL ") << c.id << "\n";
    os << "     " << c.location << "\n";
    os << "     expected: " << c.expected << "\n";
    os << "     computed: " << c.computed << "\n";
    passed += c.pass ? 1 : 0;
  }
  os << passed << "/" << report.claims.size() << " claims pass (depth " << report.depth << ")\n";
  return os.str();
}

}  // namespace chamanara
