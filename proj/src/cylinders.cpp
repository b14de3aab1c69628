#include "chamanara/cylinders.hpp"

#include <algorithm>
#include <set>

namespace chamanara {

namespace {

Rational rq(const DirVec& d) { return Rational(static_cast<long>(d.q())); }
Rational rp(const DirVec& d) { return Rational(static_cast<long>(d.p())); }

SurfacePoint side_point(Side side, const Rational& coord) {
  switch (side) {
    case Side::Bottom: return {coord, Rational(0)};
    case Side::Top: return {coord, Rational(1)};
    case Side::Left: return {Rational(0), coord};
    case Side::Right: return {Rational(1), coord};
  }
  return {};
}

// Point of `side` with transversal value s, for q, p > 0.
SurfacePoint on_side(Side side, const Rational& s, const DirVec& dir) {
  switch (side) {
    case Side::Bottom: return {s / rp(dir), Rational(0)};
    case Side::Left: return {Rational(0), -s / rq(dir)};
    case Side::Top: return {(s + rq(dir)) / rp(dir), Rational(1)};
    case Side::Right: return {Rational(1), (rp(dir) - s) / rq(dir)};
  }
  return {};
}

Side entry_side_of(const SurfacePoint& pt) { return pt.y.is_zero() ? Side::Bottom : Side::Left; }
Side exit_side_of(const SurfacePoint& pt) { return pt.y == Rational(1) ? Side::Top : Side::Right; }

// Transversal range of the open segment containing `pt`.
std::pair<Rational, Rational> segment_range(const Surface& surface, Side side, const SurfacePoint& pt,
                                            const DirVec& dir) {
  const Rational coord = (side == Side::Bottom || side == Side::Top) ? pt.x : pt.y;
  const SideLocation loc = surface.locate(side, coord);
  if (!loc.segment) throw Error("internal: cylinder leg ends at the singularity");
  const auto [lo, hi] = surface.segment_bounds(side, *loc.segment);
  const Rational s1 = transversal(dir, side_point(side, lo));
  const Rational s2 = transversal(dir, side_point(side, hi));
  return s1 < s2 ? std::make_pair(s1, s2) : std::make_pair(s2, s1);
}

std::optional<Anchor> singular_at(const Surface& surface, const SurfacePoint& pt) {
  const auto where = surface.classify(pt);
  if (!where) return std::nullopt;
  return where->singular;
}

}  // namespace

const char* to_string(CylinderKind k) { return k == CylinderKind::Trapezoid ? "trapezoid" : "parallelogram"; }

Rational Cylinder::modulus() const { return wc * Rational(static_cast<long>(direction.norm2())) / hc; }
Rational Cylinder::inverse_modulus() const { return modulus().reciprocal(); }

Rational modulus(const Cylinder& c) { return c.modulus(); }
int boundary_count(const Cylinder& c) { return static_cast<int>(c.boundary.size()); }

std::optional<Cylinder> cylinder_through(const Surface& surface, const DirVec& dir, const Rational& s0) {
  if (dir.q() <= 0 || dir.p() <= 0) throw DomainError("cylinders are computed for directions with q, p > 0");
  if (s0 <= -rq(dir) || s0 >= rp(dir)) throw DomainError("transversal value outside the entry boundary");
  if (s0.is_zero()) return std::nullopt;
  const SurfacePoint start = on_side(s0.sign() > 0 ? Side::Bottom : Side::Left, s0, dir);
  if (singular_at(surface, start)) return std::nullopt;

  const TraceResult tr = surface.trace(start, dir, crossing_budget(surface.depth()));
  if (tr.outcome == TraceOutcome::SingularityHit) return std::nullopt;
  if (tr.outcome == TraceOutcome::Truncated) {
    throw ClosureBudgetExceeded("strip through transversal " + s0.str() + " did not close");
  }

  struct Slice {
    Side entry, exit;
    Rational s, lo, hi, lambda;
  };
  std::vector<Slice> slices;
  for (const Leg& leg : tr.legs) {
    if (leg.from == leg.to) continue;
    Slice sl{entry_side_of(leg.from), exit_side_of(leg.to), transversal(dir, leg.from), 0, 0,
             (leg.to.x - leg.from.x) / rq(dir)};
    const auto [elo, ehi] = segment_range(surface, sl.entry, leg.from, dir);
    const auto [xlo, xhi] = segment_range(surface, sl.exit, leg.to, dir);
    sl.lo = std::max(elo, xlo);
    sl.hi = std::min(ehi, xhi);
    slices.push_back(sl);
  }

  Rational a = slices.front().s - slices.front().lo;
  Rational b = slices.front().hi - slices.front().s;
  Rational wc;
  for (const Slice& sl : slices) {
    a = std::min(a, sl.s - sl.lo);
    b = std::min(b, sl.hi - sl.s);
    wc += sl.lambda;
  }

  Cylinder cyl{dir, wc, a + b, {}, CylinderKind::Parallelogram, {}, slices.front().s - a};
  for (const Slice& sl : slices) {
    const Rational lower = sl.s - a;
    const Rational upper = sl.s + b;
    cyl.key = std::min(cyl.key, lower);
    cyl.pieces.push_back({sl.entry, sl.exit,
                          {on_side(sl.entry, lower, dir), on_side(sl.exit, lower, dir), on_side(sl.exit, upper, dir),
                           on_side(sl.entry, upper, dir)}});
    const bool straight = (sl.entry == Side::Bottom && sl.exit == Side::Top) ||
                          (sl.entry == Side::Left && sl.exit == Side::Right);
    if (!straight) cyl.kind = CylinderKind::Trapezoid;
  }
  // A boundary saddle connection starts wherever a boundary line enters a
  // piece through the singularity.
  for (const Rational& offset : {-a, b}) {
    for (const Slice& sl : slices) {
      if (auto anchor = singular_at(surface, on_side(sl.entry, sl.s + offset, dir))) {
        cyl.boundary.push_back(saddle_connection_from(surface, *anchor, dir));
      }
    }
  }
  return cyl;
}

CylinderDecomposition decompose(const Surface& surface, int n) {
  const int depth = surface.depth();
  if (depth < 2) throw DomainError("decomposition needs depth >= 2");
  if (n < -depth || n > depth) throw DomainError("slope exponent must satisfy |n| <= depth");
  const DirVec dir = DirVec::dyadic(n);
  CylinderDecomposition out{dir, n, depth, {}, Rational(0)};

  std::set<Rational> cuts = {-rq(dir), rp(dir)};
  for (const SaddleConnection& sc : saddle_connections(surface, dir)) {
    for (const Leg& leg : sc.legs) cuts.insert(transversal(dir, leg.from));
  }

  std::vector<std::pair<Rational, Rational>> seen;  // slices of every cylinder found
  std::set<Rational> keys;
  for (auto it = cuts.begin(); std::next(it) != cuts.end(); ++it) {
    const Rational mid = (*it + *std::next(it)) / 2;
    const bool covered = std::any_of(seen.begin(), seen.end(), [&](const auto& r) { return r.first < mid && mid < r.second; });
    if (covered) continue;
    std::optional<Cylinder> cyl;
    try {
      cyl = cylinder_through(surface, dir, mid);
    } catch (const ClosureBudgetExceeded& e) {
      std::sort(out.cylinders.begin(), out.cylinders.end(),
                [](const Cylinder& x, const Cylinder& y) { return x.area() > y.area(); });
      throw DecompositionIncomplete(e.what(), out);
    }
    if (!cyl || !keys.insert(cyl->key).second) continue;
    for (const CylinderPiece& piece : cyl->pieces) {
      seen.emplace_back(transversal(dir, piece.corners[0]), transversal(dir, piece.corners[3]));
    }
    // Keep only cylinders whose whole boundary is among the enumerated connections.
    const bool resolved = std::all_of(cyl->boundary.begin(), cyl->boundary.end(), [&](const SaddleConnection& sc) {
      return generation(sc.start) <= depth || generation(sc.end) <= depth;
    });
    if (!resolved) continue;
    out.covered_area += cyl->area();
    out.cylinders.push_back(std::move(*cyl));
  }
  std::sort(out.cylinders.begin(), out.cylinders.end(), [](const Cylinder& x, const Cylinder& y) {
    if (x.area() != y.area()) return x.area() > y.area();
    return x.key < y.key;
  });
  return out;
}

CylinderDecomposition decompose(int n, int depth) {
  if (depth < 2) throw DomainError("decomposition needs depth >= 2");
  return decompose(Surface(depth), n);
}

CommensurabilityResult commensurate(const CylinderDecomposition& d) {
  if (d.cylinders.empty()) throw DomainError("commensurability needs at least one cylinder");
  std::set<Rational> inverse;
  for (const Cylinder& c : d.cylinders) inverse.insert(c.inverse_modulus());
  Rational m = *inverse.begin();
  for (const Rational& v : inverse) m = rat_gcd(m, v);
  CommensurabilityResult out{m, {}};
  for (const Cylinder& c : d.cylinders) {
    const Rational k = c.inverse_modulus() / m;
    if (!k.is_integer() || !k.numerator().fits_slong_p()) {
      throw Error("inverse modulus " + c.inverse_modulus().str() + " is not an integer multiple of " + m.str());
    }
    out.multipliers.push_back(k.numerator().get_si());
  }
  return out;
}

Mat2 shear_matrix(const DirVec& dir, const Rational& t) {
  if (t.is_zero()) throw DomainError("shear parameter must be nonzero");
  const Rational q = rq(dir);
  const Rational p = rp(dir);
  const Rational s = t / Rational(static_cast<long>(dir.norm2()));
  return Mat2(Rational(1) - s * p * q, s * q * q, -s * p * p, Rational(1) + s * p * q);
}

ParabolicSynthesis synthesize_parabolic(const CylinderDecomposition& d) {
  const CommensurabilityResult c = commensurate(d);
  const DirVec rotated = frame_rotate(d.direction);
  return {rotated, shear_matrix(rotated, c.m.reciprocal()), c.m, c.multipliers};
}

RenormalizationReport renormalization_check(const CylinderDecomposition& d) {
  RenormalizationReport r;
  std::vector<const Cylinder*> traps;
  for (const Cylinder& c : d.cylinders) {
    if (c.kind == CylinderKind::Trapezoid) traps.push_back(&c);
  }
  r.trapezoids = traps.size();
  if (traps.size() < 3) {
    r.message = "insufficient data: " + std::to_string(traps.size()) + " trapezoid cylinders, need 3";
    return r;
  }
  r.sufficient = true;
  const Rational half(1, 2);
  for (std::size_t j = 0; j + 1 < traps.size(); ++j) {
    r.ratios.push_back(traps[j + 1]->wc / traps[j]->wc);
    const bool ok = traps[j + 1]->wc == traps[j]->wc * half && traps[j + 1]->hc == traps[j]->hc * half;
    if (!ok && !r.first_failure) r.first_failure = j;
  }
  r.passed = !r.first_failure;
  r.message = r.passed ? "all " + std::to_string(traps.size() - 1) + " consecutive pairs scale by 1/2"
                       : "pair " + std::to_string(*r.first_failure) + " does not scale by 1/2";
  return r;
}

}  // namespace chamanara
