#pragma once

// JSON and CSV encodings. Exact values are written as strings ("p/q") so
// nothing is rounded on the way out or back in.

#include <json.hpp>
#include <string>

#include "chamanara/cylinders.hpp"
#include "chamanara/fuchsian.hpp"
#include "chamanara/surface.hpp"
#include "chamanara/verify.hpp"

namespace chamanara {

using Json = nlohmann::json;

Json to_json(const Rational& r);
Json to_json(const QuadRat& q);
Json to_json(const DirVec& d);
Json to_json(const Vec2& v);
Json to_json(const Mat2& m);
Json to_json(const HPoint& z);
Json to_json(const Word& w);
Json to_json(const SaddleConnection& sc);
Json to_json(const TraceResult& t);
Json to_json(const Cylinder& c);
Json to_json(const CylinderDecomposition& d);
Json to_json(const Surface& s);
Json to_json(const Reduction& r);
Json to_json(const Membership& m);
Json to_json(const VerificationReport& r);

Rational rational_from_json(const Json& j);
QuadRat quadrat_from_json(const Json& j);
DirVec dirvec_from_json(const Json& j);
Vec2 vec2_from_json(const Json& j);
Mat2 mat2_from_json(const Json& j);
HPoint hpoint_from_json(const Json& j);
Word word_from_json(const Json& j);

// Header: direction,kind,wc,hc,modulus,inverse_modulus,boundary_count;
// a trailing comment line carries the covered area.
std::string to_csv(const CylinderDecomposition& d);

}  // namespace chamanara
