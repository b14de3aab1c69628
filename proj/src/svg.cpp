#include "chamanara/svg.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "chamanara/fuchsian.hpp"

namespace chamanara {

namespace {

std::string num(double v) {
  if (v == 0) v = 0;  // no "-0"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string num(const Rational& r) { return num(r.to_double()); }

std::string fill_colour(std::size_t i) {
  const double hue = std::fmod(static_cast<double>(i) * 137.508, 360.0);
  return "hsl(" + num(std::round(hue * 10) / 10) + ",65%,72%)";
}

}  // namespace

std::string decomposition_svg(const Surface& surface, const CylinderDecomposition& d) {
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 1 1\" width=\"800\" height=\"800\">\n"
     << "<desc>slope 2^" << d.slope_exponent << " direction (" << d.direction.q() << "," << d.direction.p()
     << ") depth " << d.depth << " cylinders " << d.cylinders.size() << " covered_area=" << d.covered_area
     << "</desc>\n"
     << "<g transform=\"matrix(1 0 0 -1 0 1)\">\n"
     << "<rect x=\"0\" y=\"0\" width=\"1\" height=\"1\" fill=\"white\" stroke=\"none\"/>\n";
  for (std::size_t i = 0; i < d.cylinders.size(); ++i) {
    const Cylinder& c = d.cylinders[i];
    os << "<g class=\"cylinder\" data-kind=\"" << to_string(c.kind) << "\" data-modulus=\"" << c.modulus()
       << "\" fill=\"" << fill_colour(i) << "\" stroke=\"none\">\n";
    for (const CylinderPiece& p : c.pieces) {
      os << "<polygon points=\"";
      for (std::size_t k = 0; k < p.corners.size(); ++k) {
        os << (k ? " " : "") << num(p.corners[k].x) << "," << num(p.corners[k].y);
      }
      os << "\"/>\n";
    }
    os << "</g>\n";
  }
  os << "<g class=\"saddle-connections\" stroke=\"black\" stroke-width=\"0.002\">\n";
  for (const SaddleConnection& sc : saddle_connections(surface, d.direction)) {
    for (const Leg& l : sc.legs) {
      os << "<line x1=\"" << num(l.from.x) << "\" y1=\"" << num(l.from.y) << "\" x2=\"" << num(l.to.x) << "\" y2=\""
         << num(l.to.y) << "\"/>\n";
    }
  }
  os << "</g>\n"
     << "<rect x=\"0\" y=\"0\" width=\"1\" height=\"1\" fill=\"none\" stroke=\"black\" stroke-width=\"0.004\"/>\n"
     << "<g class=\"singularity\" fill=\"red\">\n";
  for (const Anchor& a : surface.anchors()) {
    const SurfacePoint p = surface.position(a);
    os << "<circle cx=\"" << num(p.x) << "\" cy=\"" << num(p.y) << "\" r=\"0.006\"/>\n";
  }
  os << "</g>\n</g>\n</svg>\n";
  return os.str();
}

std::string domain_svg(const DomainSvgOptions& opts) {
  // Plot window [-4, 4] x [0, 4]; SVG y grows downwards so y is negated.
  const double top = 3.8;
  auto pt = [](double x, double y) { return num(x) + "," + num(-y); };
  const FundDomain F;
  const double lr = FundDomain::wall_circle(F.inner_left).second.to_double();
  const double rr = FundDomain::wall_circle(F.inner_right).second.to_double();
  const double s = F.strip.to_double();

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"-4.2 -4 8.4 4.6\" width=\"840\" "
        "height=\"460\">\n"
     << "<rect x=\"-4.2\" y=\"-4\" width=\"8.4\" height=\"4.6\" fill=\"white\"/>\n"
     << "<line class=\"real-axis\" x1=\"-4.2\" y1=\"0\" x2=\"4.2\" y2=\"0\" stroke=\"gray\" stroke-width=\"0.02\"/>\n";
  auto label = [&](double x, const std::string& text) {
    os << "<text x=\"" << num(x) << "\" y=\"0.3\" font-size=\"0.22\" text-anchor=\"middle\">" << text << "</text>\n";
  };

  if (opts.annulus) {
    os << "<path class=\"annulus\" d=\"M " << pt(-2, 0) << " A 2 2 0 0 1 " << pt(2, 0) << " L " << pt(0.5, 0)
       << " A 0.5 0.5 0 0 0 " << pt(-0.5, 0) << " Z\" fill=\"#cfe3f7\" stroke=\"black\" stroke-width=\"0.02\"/>\n";
    for (double x : {-2.0, -0.5, 0.5, 2.0}) label(x, num(x));
    os << "</svg>\n";
    return os.str();
  }

  if (opts.strip_only) {
    os << "<path class=\"strip\" d=\"M " << pt(-s, top) << " L " << pt(-s, 0) << " L " << pt(s, 0) << " L "
       << pt(s, top) << " Z\" fill=\"#cfe3f7\" stroke=\"none\"/>\n";
  } else {
    os << "<path class=\"domain\" d=\"M " << pt(-s, top) << " L " << pt(-s, 0) << " A " << num(lr) << " " << num(lr)
       << " 0 0 1 " << pt(F.inner_left.second.to_double(), 0) << " L " << pt(F.inner_right.first.to_double(), 0)
       << " A " << num(rr) << " " << num(rr) << " 0 0 1 " << pt(s, 0) << " L " << pt(s, top)
       << " Z\" fill=\"#cfe3f7\" stroke=\"none\"/>\n";
  }
  os << "<g class=\"walls\" stroke=\"black\" stroke-width=\"0.03\" fill=\"none\">\n"
     << "<line class=\"wall strip-left\" x1=\"" << num(-s) << "\" y1=\"0\" x2=\"" << num(-s) << "\" y2=\"" << num(-top)
     << "\"/>\n"
     << "<line class=\"wall strip-right\" x1=\"" << num(s) << "\" y1=\"0\" x2=\"" << num(s) << "\" y2=\"" << num(-top)
     << "\"/>\n";
  if (!opts.strip_only) {
    os << "<path class=\"wall inner-left\" d=\"M " << pt(F.inner_left.first.to_double(), 0) << " A " << num(lr) << " "
       << num(lr) << " 0 0 1 " << pt(F.inner_left.second.to_double(), 0) << "\"/>\n"
       << "<path class=\"wall inner-right\" d=\"M " << pt(F.inner_right.first.to_double(), 0) << " A " << num(rr)
       << " " << num(rr) << " 0 0 1 " << pt(F.inner_right.second.to_double(), 0) << "\"/>\n";
  }
  os << "</g>\n";
  if (!opts.strip_only) {
    os << "<line class=\"free-side\" x1=\"" << num(F.free_side.first) << "\" y1=\"0\" x2=\"" << num(F.free_side.second)
       << "\" y2=\"0\" stroke=\"red\" stroke-width=\"0.05\"/>\n";
  }
  os << "<g class=\"cusps\" fill=\"black\">\n";
  for (double x : {-s, s}) os << "<circle cx=\"" << num(x) << "\" cy=\"0\" r=\"0.06\"/>\n";
  os << "</g>\n";
  label(-s, "-3");
  label(s, "3");
  if (!opts.strip_only) {
    label(F.inner_left.second.to_double() - 0.05, "-1/3");
    label(F.inner_right.first.to_double() + 0.05, "1/3");
  }
  os << "<text x=\"0\" y=\"-3.75\" font-size=\"0.22\" text-anchor=\"middle\">\xE2\x88\x9E</text>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace chamanara
