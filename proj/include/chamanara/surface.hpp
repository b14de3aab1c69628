#pragma once

// The Chamanara surface for alpha = 1/2: the unit square whose sides are cut
// at the dyadic points and glued segment-by-segment to the opposite side.
// Every cutting point and every corner is a point of the single wild
// singularity; the surface itself is the square minus those points.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "chamanara/exactnum.hpp"

namespace chamanara {

struct Vec2 {
  Rational x;
  Rational y;
  friend bool operator==(const Vec2&, const Vec2&) = default;
};

using SurfacePoint = Vec2;

// Primitive integer direction (q, p); slope p/q.
class DirVec {
 public:
  DirVec(std::int64_t q, std::int64_t p);

  // Direction of slope 2^n with positive components.
  static DirVec dyadic(int n);

  std::int64_t q() const { return q_; }
  std::int64_t p() const { return p_; }
  // q^2 + p^2, the squared Euclidean length.
  std::int64_t norm2() const { return q_ * q_ + p_ * p_; }
  DirVec reversed() const { return DirVec(-q_, -p_); }
  // n with slope = 2^n; nullopt for other slopes, including negative ones.
  std::optional<int> dyadic_exponent() const;
  std::string str() const;

  friend bool operator==(const DirVec&, const DirVec&) = default;

 private:
  std::int64_t q_;
  std::int64_t p_;
};

enum class Side { Bottom, Top, Left, Right };
enum class Corner { BottomLeft, BottomRight, TopLeft, TopRight };

const char* to_string(Side side);
Side opposite(Side side);

// Cutting point of the given generation on a side: the point between
// segments k and k + 1.
struct CuttingPoint {
  Side side;
  int generation;
  friend bool operator==(const CuttingPoint&, const CuttingPoint&) = default;
};

using Anchor = std::variant<CuttingPoint, Corner>;

std::string anchor_name(const Anchor& anchor);
Anchor parse_anchor(std::string_view text);
// Corners count as generation 0.
int generation(const Anchor& anchor);

struct EdgeSegment {
  Side side;
  int index;
  Rational lo;  // open interval along the side
  Rational hi;
};

// Gluing pattern. MirroredVertical is a deliberately wrong surface used to
// check that verification catches a broken gluing.
enum class Gluing { Chamanara, MirroredVertical };

struct Leg {
  SurfacePoint from;
  SurfacePoint to;
};

struct Crossing {
  Side exit_side;
  int index;  // segment index on exit_side (and on its partner)
  SurfacePoint exit;
  SurfacePoint entry;
};

enum class TraceOutcome { Closed, SingularityHit, Truncated };

struct TraceResult {
  TraceOutcome outcome = TraceOutcome::Truncated;
  std::vector<Leg> legs;
  std::vector<Crossing> crossings;
  Rational lambda;  // displacement = lambda * (q, p)
  std::optional<Anchor> start_anchor;
  std::optional<Anchor> hit;
};

struct SaddleConnection {
  DirVec direction;
  Vec2 holonomy;
  std::vector<Leg> legs;
  std::vector<Crossing> crossings;
  Anchor start;
  Anchor end;

  Rational length_squared() const { return holonomy.x * holonomy.x + holonomy.y * holonomy.y; }
};

struct PathStep {
  Anchor from;
  Anchor to;
  // Zero-length identification through a gluing, or a straight run along a side.
  bool identification;
  SurfacePoint from_point;
  SurfacePoint to_point;
  Rational length;
};

struct SingularityPath {
  std::vector<PathStep> steps;
  QuadRat length;
};

// Result of locating a coordinate on a side.
struct SideLocation {
  std::optional<int> segment;  // set for segment interiors
  std::optional<Anchor> singular;
};

class Surface {
 public:
  explicit Surface(int depth, Gluing gluing = Gluing::Chamanara);

  int depth() const { return depth_; }
  Gluing gluing() const { return gluing_; }
  Rational alpha() const { return Rational(1, 2); }

  // Materialized segments, sides in order bottom, top, left, right.
  const std::vector<EdgeSegment>& segments() const { return segments_; }

  // Open interval of segment k on a side; valid for every k >= 1.
  std::pair<Rational, Rational> segment_bounds(Side side, int k) const;
  // Translation taking segment k of `side` onto its partner.
  Vec2 translation(Side side, int k) const;
  Rational cutting_coordinate(Side side, int generation) const;
  SurfacePoint position(const Anchor& anchor) const;

  SideLocation locate(Side side, const Rational& coord) const;
  // Nullopt for interior points of the open square.
  std::optional<SideLocation> classify(const SurfacePoint& point) const;

  // Identified point on the partner segment, or the anchor when the point
  // is singular.
  std::variant<SurfacePoint, Anchor> glue_map(const SurfacePoint& point) const;

  TraceResult trace(const SurfacePoint& start, const DirVec& dir, int max_crossings) const;
  TraceResult trace_from(const Anchor& anchor, const DirVec& dir, int max_crossings) const;

  // Whether a ray from `point` in direction `dir` immediately enters the open square.
  static bool points_inward(const SurfacePoint& point, const DirVec& dir);

  // Anchors of generation <= depth plus the four corners.
  std::vector<Anchor> anchors() const;

  // Classes of anchors identified through one-sided limits of the gluing.
  std::vector<std::vector<Anchor>> identification_classes() const;

  // Shortest path through identifications and side runs; its length bounds
  // the distance of the two points in the metric completion.
  SingularityPath singularity_path(const Anchor& from, const Anchor& to) const;

 private:
  bool ascending(Side side) const;

  int depth_;
  Gluing gluing_;
  std::vector<EdgeSegment> segments_;
};

Surface build_surface(int depth);

// Crossing budget for closing geodesics and strips at a given depth.
int crossing_budget(int depth);

// Saddle connections in a direction of slope 2^n, launched in both
// orientations from every anchor of generation <= surface.depth().
// Deduplicated and sorted by transversal intercept p*x - q*y of the start.
std::vector<SaddleConnection> saddle_connections(const Surface& surface, const DirVec& dir);

// The saddle connection leaving `anchor` in direction `dir`.
SaddleConnection saddle_connection_from(const Surface& surface, const Anchor& anchor,
                                        const DirVec& dir);

// Transversal coordinate p*x - q*y, constant along lines of direction (q, p).
Rational transversal(const DirVec& dir, const SurfacePoint& point);

}  // namespace chamanara
