#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <regex>
#include <sstream>

#include "chamanara/json_io.hpp"
#include "chamanara/svg.hpp"

using namespace chamanara;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("scalar round trips") {
  for (const Rational& r : {Rational(0), Rational(-3, 7), Rational::pow2(-40)}) {
    CHECK(rational_from_json(to_json(r)) == r);
    CHECK(rational_from_json(Json::parse(to_json(r).dump())) == r);
  }
  for (const QuadRat& q : {QuadRat(Rational(1, 2)), QuadRat(1, -1, 5), QuadRat::surd(Rational(-3, 4), 2)}) {
    CHECK(quadrat_from_json(Json::parse(to_json(q).dump())) == q);
  }
  CHECK(to_json(QuadRat(1, 2, 3)) == Json{{"a", "1"}, {"b", "2"}, {"d", 3}});
  CHECK(dirvec_from_json(to_json(DirVec(5, 3))) == DirVec(5, 3));
  CHECK(vec2_from_json(to_json(Vec2{Rational(1, 8), 1})) == Vec2{Rational(1, 8), 1});
  CHECK_THROWS(rational_from_json(Json(1.5)));
}

TEST_CASE("group object round trips") {
  for (const Mat2& m : {P1(), P2(), H(), M()}) CHECK(mat2_from_json(Json::parse(to_json(m).dump())) == m);
  for (const HPoint& z : {HPoint::infinity(), HPoint::real(QuadRat(-3)), HPoint::interior(QuadRat(Rational(11, 5)), QuadRat(Rational(8, 5)))}) {
    CHECK(hpoint_from_json(Json::parse(to_json(z).dump())) == z);
  }
  for (const char* text : {"I", "P1", "H P1^-2", "H P1 H^-1"}) {
    const Word w = Word::parse(text);
    CHECK(word_from_json(Json::parse(to_json(w).dump())) == w);
    CHECK(to_json(w)["text"] == (w.empty() ? "I" : text));
  }
}

TEST_CASE("decomposition json") {
  const Json j = Json::parse(to_json(decompose(0, 6)).dump());
  CHECK(j["slope_exponent"] == 0);
  CHECK(j["depth"] == 6);
  REQUIRE(j["cylinders"].size() == 6);
  for (const Json& c : j["cylinders"]) {
    CHECK(c["modulus"] == "6");
    CHECK(c["boundary_count"] == 4);
    CHECK(c["kind"] == "trapezoid");
    CHECK(rational_from_json(c["wc"]) * rational_from_json(c["hc"]) == rational_from_json(c["area"]));
  }
}

TEST_CASE("decomposition csv") {
  const std::string csv = to_csv(decompose(2, 6));
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "direction,kind,wc,hc,modulus,inverse_modulus,boundary_count");
  int rows = 0;
  bool footer = false;
  while (std::getline(in, line)) {
    if (line.rfind("# covered_area=", 0) == 0) {
      footer = true;
      continue;
    }
    ++rows;
    CHECK(line.rfind("1:4,", 0) == 0);
    CHECK(line.find(",51/4,4/51,") != std::string::npos);
  }
  CHECK(footer);
  CHECK(rows == static_cast<int>(decompose(2, 6).cylinders.size()));
}

TEST_CASE("surface and verification json") {
  const Json s = to_json(Surface(3));
  CHECK(s.contains("segments"));
  CHECK(s.contains("identification_classes"));
  const Json m = to_json(is_member(Mat2(1, 1, 0, 1)));
  CHECK(m["member"] == false);
  const Json r = to_json(reduce_to_domain(HPoint::interior(QuadRat(10), QuadRat(1))));
  CHECK(r["word"]["text"] == "H P1^-2");
}

TEST_CASE("decomposition svg") {
  const Surface s(2);
  const std::string svg = decomposition_svg(s, decompose(s, 0));
  CHECK(svg.find("viewBox=\"0 0 1 1\"") != std::string::npos);
  CHECK(count(svg, "<g class=\"cylinder\"") == 2);
  CHECK(svg.find("covered_area=15/16") != std::string::npos);
  CHECK(svg.find("<circle") != std::string::npos);
  CHECK(svg.rfind("</svg>\n") == svg.size() - 7);
  // Polygon vertices stay inside the unit square.
  const std::regex points("points=\"([^\"]*)\"");
  const std::regex coord("(-?[0-9.e-]+),(-?[0-9.e-]+)");
  int vertices = 0;
  for (auto p = std::sregex_iterator(svg.begin(), svg.end(), points); p != std::sregex_iterator(); ++p) {
    const std::string list = (*p)[1];
    for (auto it = std::sregex_iterator(list.begin(), list.end(), coord); it != std::sregex_iterator(); ++it) {
      const double x = std::stod((*it)[1]);
      const double y = std::stod((*it)[2]);
      CHECK((x >= 0 && x <= 1 && y >= 0 && y <= 1));
      ++vertices;
    }
  }
  CHECK(vertices > 0);
}

TEST_CASE("domain svg") {
  const std::string full = domain_svg();
  CHECK(count(full, "class=\"wall ") == 4);
  CHECK(count(full, " A ") >= 2);
  CHECK(full.find("free-side") != std::string::npos);
  for (const char* label : {">-3<", ">3<", ">-1/3<", ">1/3<"}) CHECK(full.find(label) != std::string::npos);
  const std::string strip = domain_svg({.strip_only = true});
  CHECK(count(strip, "class=\"wall ") == 2);
  CHECK(strip.find(" A ") == std::string::npos);
  const std::string ann = domain_svg({.annulus = true});
  CHECK(ann.find("annulus") != std::string::npos);
  CHECK(count(ann, " A ") == 2);
}
