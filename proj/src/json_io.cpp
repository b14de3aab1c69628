#include "chamanara/json_io.hpp"

#include <sstream>

namespace chamanara {

namespace {

const char* outcome_name(TraceOutcome o) {
  switch (o) {
    case TraceOutcome::Closed: return "closed";
    case TraceOutcome::SingularityHit: return "singularity";
    case TraceOutcome::Truncated: return "truncated";
  }
  return "?";
}

Json legs_json(const std::vector<Leg>& legs) {
  Json out = Json::array();
  for (const Leg& l : legs) out.push_back({{"from", to_json(l.from)}, {"to", to_json(l.to)}});
  return out;
}

Json crossings_json(const std::vector<Crossing>& cs) {
  Json out = Json::array();
  for (const Crossing& c : cs) {
    out.push_back({{"side", to_string(c.exit_side)}, {"segment", c.index}, {"exit", to_json(c.exit)},
                   {"entry", to_json(c.entry)}});
  }
  return out;
}

}  // namespace

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const QuadRat& q) { return {{"a", q.a().str()}, {"b", q.b().str()}, {"d", q.d()}}; }

Json to_json(const DirVec& d) { return {{"q", d.q()}, {"p", d.p()}}; }

Json to_json(const Vec2& v) { return {{"x", v.x.str()}, {"y", v.y.str()}}; }

Json to_json(const Mat2& m) {
  return {{"a", to_json(m.a())}, {"b", to_json(m.b())}, {"c", to_json(m.c())}, {"d", to_json(m.d())}};
}

Json to_json(const HPoint& z) {
  switch (z.kind()) {
    case HPoint::Kind::Infinity: return {{"kind", "infinity"}};
    case HPoint::Kind::Real: return {{"kind", "real"}, {"re", to_json(z.re())}};
    case HPoint::Kind::Interior: return {{"kind", "interior"}, {"re", to_json(z.re())}, {"im", to_json(z.im())}};
  }
  return nullptr;
}

Json to_json(const Word& w) {
  Json letters = Json::array();
  for (const Letter& l : w.letters()) {
    letters.push_back({{"generator", l.gen == Generator::P1 ? "P1" : "H"}, {"exponent", l.exp}});
  }
  return {{"text", w.str()}, {"letters", letters}};
}

Json to_json(const SaddleConnection& sc) {
  return {{"direction", to_json(sc.direction)},
          {"holonomy", to_json(sc.holonomy)},
          {"length_squared", to_json(sc.length_squared())},
          {"start", anchor_name(sc.start)},
          {"end", anchor_name(sc.end)},
          {"crossings", crossings_json(sc.crossings)},
          {"legs", legs_json(sc.legs)}};
}

Json to_json(const TraceResult& t) {
  Json j = {{"outcome", outcome_name(t.outcome)},
            {"lambda", to_json(t.lambda)},
            {"crossings", crossings_json(t.crossings)},
            {"legs", legs_json(t.legs)}};
  if (t.start_anchor) j["start"] = anchor_name(*t.start_anchor);
  if (t.hit) j["hit"] = anchor_name(*t.hit);
  return j;
}

Json to_json(const Cylinder& c) {
  Json boundary = Json::array();
  for (const SaddleConnection& sc : c.boundary) {
    boundary.push_back({{"start", anchor_name(sc.start)}, {"end", anchor_name(sc.end)}, {"holonomy", to_json(sc.holonomy)}});
  }
  Json pieces = Json::array();
  for (const CylinderPiece& p : c.pieces) {
    Json corners = Json::array();
    for (const auto& pt : p.corners) corners.push_back(to_json(pt));
    pieces.push_back({{"entry", to_string(p.entry_side)}, {"exit", to_string(p.exit_side)}, {"corners", corners}});
  }
  return {{"direction", to_json(c.direction)},
          {"kind", to_string(c.kind)},
          {"wc", to_json(c.wc)},
          {"hc", to_json(c.hc)},
          {"modulus", to_json(c.modulus())},
          {"inverse_modulus", to_json(c.inverse_modulus())},
          {"area", to_json(c.area())},
          {"boundary_count", boundary_count(c)},
          {"boundary", boundary},
          {"pieces", pieces}};
}

Json to_json(const CylinderDecomposition& d) {
  Json cyls = Json::array();
  for (const Cylinder& c : d.cylinders) cyls.push_back(to_json(c));
  return {{"direction", to_json(d.direction)},
          {"slope_exponent", d.slope_exponent},
          {"depth", d.depth},
          {"covered_area", to_json(d.covered_area)},
          {"cylinders", cyls}};
}

Json to_json(const Surface& s) {
  Json segs = Json::array();
  for (const EdgeSegment& e : s.segments()) {
    segs.push_back({{"side", to_string(e.side)},
                    {"index", e.index},
                    {"lo", to_json(e.lo)},
                    {"hi", to_json(e.hi)},
                    {"partner", to_string(opposite(e.side))},
                    {"translation", to_json(s.translation(e.side, e.index))}});
  }
  Json classes = Json::array();
  for (const auto& cls : s.identification_classes()) {
    Json names = Json::array();
    for (const Anchor& a : cls) names.push_back(anchor_name(a));
    classes.push_back(names);
  }
  return {{"alpha", to_json(s.alpha())},
          {"depth", s.depth()},
          {"gluing", s.gluing() == Gluing::Chamanara ? "chamanara" : "mirrored-vertical"},
          {"segments", segs},
          {"identification_classes", classes}};
}

Json to_json(const Reduction& r) {
  Json steps = Json::array();
  for (const ReductionStep& s : r.transcript) {
    steps.push_back({{"applied", Word::letter(s.applied.gen, s.applied.exp).str()}, {"wall", to_string(s.wall)}});
  }
  return {{"word", to_json(r.word)}, {"point", to_json(r.point)}, {"point_text", r.point.str()}, {"transcript", steps}};
}

Json to_json(const Membership& m) {
  Json j = {{"member", m.member}, {"residual", to_json(m.residual)}, {"residual_text", m.residual.str()}};
  if (m.member) j["word"] = to_json(m.word);
  return j;
}

Json to_json(const VerificationReport& r) {
  Json claims = Json::array();
  for (const Claim& c : r.claims) {
    claims.push_back({{"id", c.id}, {"location", c.location}, {"expected", c.expected}, {"computed", c.computed},
                      {"pass", c.pass}});
  }
  return {{"depth", r.depth}, {"passed", r.passed()}, {"claims", claims}};
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw ParseError("expected a rational string", 0);
  return Rational::parse(j.get<std::string>());
}

QuadRat quadrat_from_json(const Json& j) {
  if (j.is_string() || j.is_number_integer()) return QuadRat(rational_from_json(j));
  if (!j.is_object()) throw ParseError("expected a quadratic number object", 0);
  return QuadRat(rational_from_json(j.at("a")), rational_from_json(j.at("b")), j.at("d").get<std::int64_t>());
}

DirVec dirvec_from_json(const Json& j) { return DirVec(j.at("q").get<std::int64_t>(), j.at("p").get<std::int64_t>()); }

Vec2 vec2_from_json(const Json& j) { return {rational_from_json(j.at("x")), rational_from_json(j.at("y"))}; }

Mat2 mat2_from_json(const Json& j) {
  return Mat2(quadrat_from_json(j.at("a")), quadrat_from_json(j.at("b")), quadrat_from_json(j.at("c")),
              quadrat_from_json(j.at("d")));
}

HPoint hpoint_from_json(const Json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "infinity") return HPoint::infinity();
  if (kind == "real") return HPoint::real(quadrat_from_json(j.at("re")));
  if (kind == "interior") return HPoint::interior(quadrat_from_json(j.at("re")), quadrat_from_json(j.at("im")));
  throw ParseError("unknown point kind '" + kind + "'", 0);
}

Word word_from_json(const Json& j) {
  Word w;
  for (const Json& l : j.at("letters")) {
    const std::string g = l.at("generator").get<std::string>();
    if (g != "P1" && g != "H") throw ParseError("unknown generator '" + g + "'", 0);
    w.append(g == "P1" ? Generator::P1 : Generator::H, l.at("exponent").get<long>());
  }
  return w;
}

std::string to_csv(const CylinderDecomposition& d) {
  std::ostringstream os;
  os << "direction,kind,wc,hc,modulus,inverse_modulus,boundary_count\n";
  for (const Cylinder& c : d.cylinders) {
    os << c.direction.q() << ":" << c.direction.p() << "," << to_string(c.kind) << "," << c.wc << "," << c.hc << ","
       << c.modulus() << "," << c.inverse_modulus() << "," << boundary_count(c) << "\n";
  }
  os << "# covered_area=" << d.covered_area << "\n";
  return os.str();
}

}  // namespace chamanara
