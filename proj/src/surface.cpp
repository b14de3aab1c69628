#include "chamanara/surface.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

namespace chamanara {

namespace {

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

bool is_power_of_two(std::int64_t v) { return v > 0 && (v & (v - 1)) == 0; }

int log2_exact(std::int64_t v) {
  int n = 0;
  while (v > 1) {
    v >>= 1;
    ++n;
  }
  return n;
}

Corner corner_at(const Rational& x, const Rational& y) {
  const bool right = x == Rational(1);
  const bool top = y == Rational(1);
  if (top) return right ? Corner::TopRight : Corner::TopLeft;
  return right ? Corner::BottomRight : Corner::BottomLeft;
}

SurfacePoint point_on_side(Side side, const Rational& coord) {
  switch (side) {
    case Side::Bottom: return {coord, Rational(0)};
    case Side::Top: return {coord, Rational(1)};
    case Side::Left: return {Rational(0), coord};
    case Side::Right: return {Rational(1), coord};
  }
  return {};
}

const char* corner_name(Corner c) {
  switch (c) {
    case Corner::BottomLeft: return "BL";
    case Corner::BottomRight: return "BR";
    case Corner::TopLeft: return "TL";
    case Corner::TopRight: return "TR";
  }
  return "?";
}

char side_letter(Side s) {
  switch (s) {
    case Side::Bottom: return 'B';
    case Side::Top: return 'T';
    case Side::Left: return 'L';
    case Side::Right: return 'R';
  }
  return '?';
}

struct ExitInfo {
  SurfacePoint point;
  Rational t;
  Side side = Side::Bottom;  // meaningful unless at a corner
  bool corner = false;
};

ExitInfo next_exit(const SurfacePoint& pos, const DirVec& dir) {
  const Rational q(static_cast<long>(dir.q()));
  const Rational p(static_cast<long>(dir.p()));
  std::optional<Rational> tx;
  std::optional<Rational> ty;
  if (dir.q() > 0) tx = (Rational(1) - pos.x) / q;
  if (dir.q() < 0) tx = -pos.x / q;
  if (dir.p() > 0) ty = (Rational(1) - pos.y) / p;
  if (dir.p() < 0) ty = -pos.y / p;
  ExitInfo out;
  if (tx && ty) out.t = std::min(*tx, *ty);
  else out.t = tx ? *tx : *ty;
  if (out.t.sign() <= 0) throw Error("internal: geodesic leaves the square at its starting point");
  out.point = {pos.x + out.t * q, pos.y + out.t * p};
  const bool hits_x = tx && *tx == out.t;
  const bool hits_y = ty && *ty == out.t;
  out.corner = hits_x && hits_y;
  if (hits_x && !hits_y) out.side = dir.q() > 0 ? Side::Right : Side::Left;
  if (hits_y && !hits_x) out.side = dir.p() > 0 ? Side::Top : Side::Bottom;
  return out;
}

// Parameter t >= 0 with target = origin + t*dir, if the target is on the ray.
std::optional<Rational> ray_parameter(const SurfacePoint& origin, const DirVec& dir,
                                      const SurfacePoint& target) {
  const Rational dx = target.x - origin.x;
  const Rational dy = target.y - origin.y;
  Rational t;
  if (dir.q() != 0) {
    t = dx / Rational(static_cast<long>(dir.q()));
    if (dy != t * Rational(static_cast<long>(dir.p()))) return std::nullopt;
  } else {
    if (!dx.is_zero()) return std::nullopt;
    t = dy / Rational(static_cast<long>(dir.p()));
  }
  if (t.sign() < 0) return std::nullopt;
  return t;
}

}  // namespace

// ---------------------------------------------------------------- DirVec

DirVec::DirVec(std::int64_t q, std::int64_t p) {
  if (q == 0 && p == 0) throw DomainError("direction (0,0)");
  const std::int64_t g = gcd64(q, p);
  q_ = q / g;
  p_ = p / g;
}

DirVec DirVec::dyadic(int n) {
  if (n < -62 || n > 62) throw DomainError("slope exponent out of range");
  return n >= 0 ? DirVec(1, std::int64_t{1} << n) : DirVec(std::int64_t{1} << -n, 1);
}

std::optional<int> DirVec::dyadic_exponent() const {
  const std::int64_t aq = q_ < 0 ? -q_ : q_;
  const std::int64_t ap = p_ < 0 ? -p_ : p_;
  // Negative slopes are not parabolic directions of this surface.
  if (aq == 0 || ap == 0 || (q_ < 0) != (p_ < 0)) return std::nullopt;
  if (aq == 1 && is_power_of_two(ap)) return log2_exact(ap);
  if (ap == 1 && is_power_of_two(aq)) return -log2_exact(aq);
  return std::nullopt;
}

std::string DirVec::str() const { return "(" + std::to_string(q_) + "," + std::to_string(p_) + ")"; }

// ---------------------------------------------------------------- anchors

const char* to_string(Side side) {
  switch (side) {
    case Side::Bottom: return "bottom";
    case Side::Top: return "top";
    case Side::Left: return "left";
    case Side::Right: return "right";
  }
  return "?";
}

Side opposite(Side side) {
  switch (side) {
    case Side::Bottom: return Side::Top;
    case Side::Top: return Side::Bottom;
    case Side::Left: return Side::Right;
    case Side::Right: return Side::Left;
  }
  return side;
}

std::string anchor_name(const Anchor& anchor) {
  if (const auto* c = std::get_if<Corner>(&anchor)) return corner_name(*c);
  const auto& cp = std::get<CuttingPoint>(anchor);
  return std::string(1, side_letter(cp.side)) + std::to_string(cp.generation);
}

Anchor parse_anchor(std::string_view text) {
  for (Corner c : {Corner::BottomLeft, Corner::BottomRight, Corner::TopLeft, Corner::TopRight}) {
    if (text == corner_name(c)) return c;
  }
  if (text.size() < 2) throw ParseError("expected an anchor like B3 or BL", 0);
  Side side;
  switch (text[0]) {
    case 'B': side = Side::Bottom; break;
    case 'T': side = Side::Top; break;
    case 'L': side = Side::Left; break;
    case 'R': side = Side::Right; break;
    default: throw ParseError("unknown side letter", 0);
  }
  int gen = 0;
  for (std::size_t i = 1; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') throw ParseError("expected a generation number", i);
    gen = gen * 10 + (text[i] - '0');
    if (gen > 100000) throw ParseError("generation too large", i);
  }
  if (gen < 1) throw ParseError("generation must be at least 1", 1);
  return CuttingPoint{side, gen};
}

int generation(const Anchor& anchor) {
  if (const auto* cp = std::get_if<CuttingPoint>(&anchor)) return cp->generation;
  return 0;
}

// ---------------------------------------------------------------- Surface

Surface::Surface(int depth, Gluing gluing) : depth_(depth), gluing_(gluing) {
  if (depth < 1) throw DomainError("surface depth must be at least 1");
  for (Side side : {Side::Bottom, Side::Top, Side::Left, Side::Right}) {
    for (int k = 1; k <= depth; ++k) {
      auto [lo, hi] = segment_bounds(side, k);
      segments_.push_back({side, k, lo, hi});
    }
  }
}

bool Surface::ascending(Side side) const {
  switch (side) {
    case Side::Bottom: return true;
    case Side::Top: return false;
    case Side::Left: return gluing_ == Gluing::Chamanara;
    case Side::Right: return gluing_ != Gluing::Chamanara;
  }
  return true;
}

std::pair<Rational, Rational> Surface::segment_bounds(Side side, int k) const {
  if (k < 1) throw DomainError("segment index must be at least 1");
  if (ascending(side)) return {Rational(1) - Rational::pow2(1 - k), Rational(1) - Rational::pow2(-k)};
  return {Rational::pow2(-k), Rational::pow2(1 - k)};
}

Vec2 Surface::translation(Side side, int k) const {
  const Rational along = segment_bounds(opposite(side), k).first - segment_bounds(side, k).first;
  switch (side) {
    case Side::Bottom: return {along, Rational(1)};
    case Side::Top: return {along, Rational(-1)};
    case Side::Left: return {Rational(1), along};
    case Side::Right: return {Rational(-1), along};
  }
  return {};
}

Rational Surface::cutting_coordinate(Side side, int gen) const {
  if (gen < 1) throw DomainError("cutting point generation must be at least 1");
  return ascending(side) ? Rational(1) - Rational::pow2(-gen) : Rational::pow2(-gen);
}

SurfacePoint Surface::position(const Anchor& anchor) const {
  if (const auto* c = std::get_if<Corner>(&anchor)) {
    switch (*c) {
      case Corner::BottomLeft: return {Rational(0), Rational(0)};
      case Corner::BottomRight: return {Rational(1), Rational(0)};
      case Corner::TopLeft: return {Rational(0), Rational(1)};
      case Corner::TopRight: return {Rational(1), Rational(1)};
    }
  }
  const auto& cp = std::get<CuttingPoint>(anchor);
  return point_on_side(cp.side, cutting_coordinate(cp.side, cp.generation));
}

SideLocation Surface::locate(Side side, const Rational& coord) const {
  if (coord.sign() < 0 || coord > Rational(1)) throw DomainError("coordinate outside the side");
  if (coord.is_zero() || coord == Rational(1)) {
    const SurfacePoint p = point_on_side(side, coord);
    return {std::nullopt, corner_at(p.x, p.y)};
  }
  // Distance u to the accumulation end; segment k is 2^-k < u < 2^(1-k).
  const Rational u = ascending(side) ? Rational(1) - coord : coord;
  // Start near log2(den/num) and adjust.
  const long estimate =
      static_cast<long>(mpz_sizeinbase(u.denominator().get_mpz_t(), 2)) -
      static_cast<long>(mpz_sizeinbase(u.numerator().get_mpz_t(), 2));
  int k = static_cast<int>(std::max(1L, estimate));
  while (k > 1 && Rational::pow2(1 - k) <= u) --k;
  while (Rational::pow2(-k) > u) ++k;
  if (Rational::pow2(-k) == u) return {std::nullopt, CuttingPoint{side, k}};
  return {k, std::nullopt};
}

std::optional<SideLocation> Surface::classify(const SurfacePoint& point) const {
  if (point.x.sign() < 0 || point.y.sign() < 0 || point.x > Rational(1) || point.y > Rational(1)) {
    throw DomainError("point outside the unit square");
  }
  const bool on_left = point.x.is_zero();
  const bool on_right = point.x == Rational(1);
  const bool on_bottom = point.y.is_zero();
  const bool on_top = point.y == Rational(1);
  if ((on_left || on_right) && (on_bottom || on_top)) {
    return SideLocation{std::nullopt, corner_at(point.x, point.y)};
  }
  if (on_bottom) return locate(Side::Bottom, point.x);
  if (on_top) return locate(Side::Top, point.x);
  if (on_left) return locate(Side::Left, point.y);
  if (on_right) return locate(Side::Right, point.y);
  return std::nullopt;
}

std::variant<SurfacePoint, Anchor> Surface::glue_map(const SurfacePoint& point) const {
  const auto where = classify(point);
  if (!where) throw DomainError("glue_map needs a point on the boundary of the square");
  if (where->singular) return *where->singular;
  Side side;
  if (point.y.is_zero()) side = Side::Bottom;
  else if (point.y == Rational(1)) side = Side::Top;
  else if (point.x.is_zero()) side = Side::Left;
  else side = Side::Right;
  const Vec2 t = translation(side, *where->segment);
  return SurfacePoint{point.x + t.x, point.y + t.y};
}

bool Surface::points_inward(const SurfacePoint& point, const DirVec& dir) {
  auto ok = [](const Rational& c, std::int64_t v) {
    if (c.is_zero()) return v > 0;
    if (c == Rational(1)) return v < 0;
    return true;
  };
  return ok(point.x, dir.q()) && ok(point.y, dir.p());
}

namespace {

// Follows a geodesic from `pos` until it closes at `origin`, hits the
// singularity, or runs out of crossings.
void follow(const Surface& surface, SurfacePoint pos, const DirVec& dir, int max_crossings,
            const std::optional<SurfacePoint>& origin, TraceResult& out) {
  bool first = true;
  while (true) {
    const ExitInfo exit = next_exit(pos, dir);
    if (origin && !first) {
      if (auto t0 = ray_parameter(pos, dir, *origin); t0 && *t0 < exit.t) {
        out.legs.push_back({pos, *origin});
        out.lambda += *t0;
        out.outcome = TraceOutcome::Closed;
        return;
      }
    }
    first = false;
    out.legs.push_back({pos, exit.point});
    out.lambda += exit.t;
    std::optional<int> segment;
    if (exit.corner) {
      out.hit = corner_at(exit.point.x, exit.point.y);
    } else {
      const Rational coord = (exit.side == Side::Bottom || exit.side == Side::Top) ? exit.point.x : exit.point.y;
      const SideLocation loc = surface.locate(exit.side, coord);
      if (loc.singular) out.hit = loc.singular;
      segment = loc.segment;
    }
    if (out.hit) {
      out.outcome = TraceOutcome::SingularityHit;
      return;
    }
    if (static_cast<int>(out.crossings.size()) >= max_crossings) {
      out.outcome = TraceOutcome::Truncated;
      return;
    }
    const Vec2 t = surface.translation(exit.side, *segment);
    const SurfacePoint entry{exit.point.x + t.x, exit.point.y + t.y};
    out.crossings.push_back({exit.side, *segment, exit.point, entry});
    pos = entry;
  }
}

}  // namespace

TraceResult Surface::trace(const SurfacePoint& start, const DirVec& dir, int max_crossings) const {
  if (max_crossings < 0) throw DomainError("max_crossings must be nonnegative");
  SurfacePoint origin = start;
  if (const auto where = classify(start)) {
    if (where->singular) throw DomainError("start point is singular; trace from its anchor instead");
    if (!points_inward(start, dir)) {
      const auto glued = std::get<SurfacePoint>(glue_map(start));
      if (!points_inward(glued, dir)) throw DomainError("direction runs along the edge through the start point");
      origin = glued;
    }
  }
  TraceResult out;
  follow(*this, origin, dir, max_crossings, origin, out);
  return out;
}

TraceResult Surface::trace_from(const Anchor& anchor, const DirVec& dir, int max_crossings) const {
  if (max_crossings < 0) throw DomainError("max_crossings must be nonnegative");
  const SurfacePoint start = position(anchor);
  if (!points_inward(start, dir)) {
    throw DomainError("direction " + dir.str() + " does not enter the square at " + anchor_name(anchor));
  }
  TraceResult out;
  out.start_anchor = anchor;
  follow(*this, start, dir, max_crossings, std::nullopt, out);
  return out;
}

std::vector<Anchor> Surface::anchors() const {
  std::vector<Anchor> out = {Corner::BottomLeft, Corner::BottomRight, Corner::TopLeft, Corner::TopRight};
  for (Side side : {Side::Bottom, Side::Top, Side::Left, Side::Right}) {
    for (int k = 1; k <= depth_; ++k) out.push_back(CuttingPoint{side, k});
  }
  return out;
}

namespace {

struct AnchorIndex {
  std::vector<Anchor> anchors;
  std::map<std::string, std::size_t> by_name;

  explicit AnchorIndex(std::vector<Anchor> list) : anchors(std::move(list)) {
    for (std::size_t i = 0; i < anchors.size(); ++i) by_name[anchor_name(anchors[i])] = i;
  }
  std::optional<std::size_t> find(const Anchor& a) const {
    const auto it = by_name.find(anchor_name(a));
    if (it == by_name.end()) return std::nullopt;
    return it->second;
  }
};

// Pairs of anchors identified by the one-sided limits of each gluing.
std::vector<std::pair<Anchor, Anchor>> identification_pairs(const Surface& s) {
  std::vector<std::pair<Anchor, Anchor>> out;
  for (Side side : {Side::Bottom, Side::Left}) {
    for (int k = 1; k <= s.depth(); ++k) {
      const auto [lo, hi] = s.segment_bounds(side, k);
      const auto [plo, phi] = s.segment_bounds(opposite(side), k);
      out.emplace_back(*s.locate(side, lo).singular, *s.locate(opposite(side), plo).singular);
      out.emplace_back(*s.locate(side, hi).singular, *s.locate(opposite(side), phi).singular);
    }
  }
  return out;
}

}  // namespace

std::vector<std::vector<Anchor>> Surface::identification_classes() const {
  const AnchorIndex index(anchors());
  std::vector<std::size_t> parent(index.anchors.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (const auto& [a, b] : identification_pairs(*this)) {
    const auto ia = index.find(a);
    const auto ib = index.find(b);
    if (ia && ib) parent[find(*ia)] = find(*ib);
  }
  std::map<std::size_t, std::vector<Anchor>> groups;
  for (std::size_t i = 0; i < index.anchors.size(); ++i) groups[find(i)].push_back(index.anchors[i]);
  std::vector<std::vector<Anchor>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });
  return out;
}

SingularityPath Surface::singularity_path(const Anchor& from, const Anchor& to) const {
  const AnchorIndex index(anchors());
  const auto src = index.find(from);
  const auto dst = index.find(to);
  if (!src) throw DomainError("anchor " + anchor_name(from) + " is not materialized at depth " + std::to_string(depth_));
  if (!dst) throw DomainError("anchor " + anchor_name(to) + " is not materialized at depth " + std::to_string(depth_));

  struct Edge {
    std::size_t to;
    Rational length;
    bool identification;
  };
  std::vector<std::vector<Edge>> graph(index.anchors.size());
  auto connect = [&](std::size_t a, std::size_t b, const Rational& len, bool ident) {
    graph[a].push_back({b, len, ident});
    graph[b].push_back({a, len, ident});
  };
  for (const auto& [a, b] : identification_pairs(*this)) connect(*index.find(a), *index.find(b), Rational(0), true);
  for (Side side : {Side::Bottom, Side::Top, Side::Left, Side::Right}) {
    std::vector<std::pair<Rational, std::size_t>> along;
    for (std::size_t i = 0; i < index.anchors.size(); ++i) {
      const SurfacePoint p = position(index.anchors[i]);
      const bool on_side = (side == Side::Bottom && p.y.is_zero()) || (side == Side::Top && p.y == Rational(1)) ||
                           (side == Side::Left && p.x.is_zero()) || (side == Side::Right && p.x == Rational(1));
      if (on_side) along.emplace_back((side == Side::Bottom || side == Side::Top) ? p.x : p.y, i);
    }
    std::sort(along.begin(), along.end());
    for (std::size_t i = 1; i < along.size(); ++i) {
      connect(along[i - 1].second, along[i].second, along[i].first - along[i - 1].first, false);
    }
  }

  // Dijkstra with exact weights.
  const std::size_t n = index.anchors.size();
  std::vector<std::optional<Rational>> dist(n);
  std::vector<std::optional<std::pair<std::size_t, std::size_t>>> prev(n);  // (node, edge slot)
  using Item = std::pair<Rational, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist[*src] = Rational(0);
  queue.emplace(Rational(0), *src);
  while (!queue.empty()) {
    auto [d, u] = queue.top();
    queue.pop();
    if (d != *dist[u]) continue;
    for (std::size_t e = 0; e < graph[u].size(); ++e) {
      const Edge& edge = graph[u][e];
      const Rational nd = d + edge.length;
      if (!dist[edge.to] || nd < *dist[edge.to]) {
        dist[edge.to] = nd;
        prev[edge.to] = std::make_pair(u, e);
        queue.emplace(nd, edge.to);
      }
    }
  }
  if (!dist[*dst]) throw Error("internal: anchors are not connected");

  SingularityPath out;
  out.length = QuadRat(*dist[*dst]);
  for (std::size_t v = *dst; v != *src;) {
    const auto [u, e] = *prev[v];
    const Edge& edge = graph[u][e];
    out.steps.push_back({index.anchors[u], index.anchors[v], edge.identification, position(index.anchors[u]),
                         position(index.anchors[v]), edge.length});
    v = u;
  }
  std::reverse(out.steps.begin(), out.steps.end());
  return out;
}

Surface build_surface(int depth) { return Surface(depth); }

int crossing_budget(int depth) { return 4 * depth + 16; }

Rational transversal(const DirVec& dir, const SurfacePoint& point) {
  return Rational(static_cast<long>(dir.p())) * point.x - Rational(static_cast<long>(dir.q())) * point.y;
}

namespace {

SaddleConnection to_connection(const TraceResult& r, const DirVec& dir, bool reverse) {
  if (r.outcome != TraceOutcome::SingularityHit) {
    throw ClosureBudgetExceeded("geodesic from " + anchor_name(*r.start_anchor) + " in direction " + dir.str() +
                                " did not reach the singularity within its crossing budget");
  }
  const Vec2 hol{r.lambda * Rational(static_cast<long>(dir.q())), r.lambda * Rational(static_cast<long>(dir.p()))};
  if (!reverse) return SaddleConnection{dir, hol, r.legs, r.crossings, *r.start_anchor, *r.hit};
  std::vector<Leg> legs;
  for (auto it = r.legs.rbegin(); it != r.legs.rend(); ++it) legs.push_back({it->to, it->from});
  std::vector<Crossing> crossings;
  for (auto it = r.crossings.rbegin(); it != r.crossings.rend(); ++it) {
    crossings.push_back({opposite(it->exit_side), it->index, it->entry, it->exit});
  }
  return SaddleConnection{dir, hol, legs, crossings, *r.hit, *r.start_anchor};
}

}  // namespace

SaddleConnection saddle_connection_from(const Surface& surface, const Anchor& anchor, const DirVec& dir) {
  return to_connection(surface.trace_from(anchor, dir, crossing_budget(surface.depth())), dir, false);
}

std::vector<SaddleConnection> saddle_connections(const Surface& surface, const DirVec& dir) {
  if (!dir.dyadic_exponent()) {
    throw UnsupportedDirection("saddle connection enumeration supports slopes 2^n only, got " + dir.str());
  }
  const int budget = crossing_budget(surface.depth());
  std::map<std::string, SaddleConnection> found;
  for (const Anchor& anchor : surface.anchors()) {
    const SurfacePoint at = surface.position(anchor);
    if (Surface::points_inward(at, dir)) {
      SaddleConnection sc = to_connection(surface.trace_from(anchor, dir, budget), dir, false);
      found.emplace(anchor_name(sc.start), std::move(sc));
    }
    if (Surface::points_inward(at, dir.reversed())) {
      SaddleConnection sc = to_connection(surface.trace_from(anchor, dir.reversed(), budget), dir, true);
      found.emplace(anchor_name(sc.start), std::move(sc));
    }
  }
  std::vector<SaddleConnection> out;
  for (auto& [name, sc] : found) out.push_back(std::move(sc));
  std::stable_sort(out.begin(), out.end(), [&](const SaddleConnection& a, const SaddleConnection& b) {
    return transversal(dir, surface.position(a.start)) < transversal(dir, surface.position(b.start));
  });
  return out;
}

}  // namespace chamanara
