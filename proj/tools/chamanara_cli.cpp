// Command-line front end.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "chamanara/cylinders.hpp"
#include "chamanara/fuchsian.hpp"
#include "chamanara/json_io.hpp"
#include "chamanara/svg.hpp"
#include "chamanara/verify.hpp"

using namespace chamanara;

namespace {

int default_depth() {
  if (const char* env = std::getenv("CHAMANARA_DEPTH")) {
    try {
      std::size_t used = 0;
      const int d = std::stoi(env, &used);
      if (used == std::string(env).size() && d >= 1) return d;
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring CHAMANARA_DEPTH=" << env << "\n";
  }
  return 8;
}

std::vector<std::string> split_commas(const std::string& text, std::size_t expected, const char* what) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    parts.push_back(text.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (parts.size() != expected) {
    throw ParseError(std::string("expected ") + std::to_string(expected) + " comma-separated values for " + what,
                     text.size());
  }
  return parts;
}

// Parses one field, shifting parse positions to the whole argument.
QuadRat parse_field(const std::vector<std::string>& parts, std::size_t i) {
  std::size_t offset = 0;
  for (std::size_t k = 0; k < i; ++k) offset += parts[k].size() + 1;
  try {
    return QuadRat::parse(parts[i]);
  } catch (const ParseError& e) {
    std::string msg = e.what();
    msg = msg.substr(0, msg.rfind(" at position "));
    throw ParseError(msg, offset + e.position());
  }
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw Error("cannot write " + out);
  f << text;
  if (!f) throw Error("cannot write " + out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations on the Chamanara surface and its Veech group"};
  app.require_subcommand(1);

  const int env_depth = default_depth();

  // verify-paper
  auto* verify = app.add_subcommand("verify-paper", "Recompute the published constants");
  int verify_depth = env_depth;
  std::string verify_format = "text";
  bool corrupt = false;
  verify->add_option("--depth", verify_depth, "Surface depth")->check(CLI::Range(2, 16));
  verify->add_option("--format", verify_format, "text or json")->check(CLI::IsMember({"text", "json"}));
  verify->add_flag("--debug-corrupt-gluing", corrupt, "Use a deliberately wrong gluing (fault injection)");

  // decompose
  auto* dec = app.add_subcommand("decompose", "Cylinder decomposition in the direction of slope 2^n");
  int slope_exp = 0;
  int dec_depth = env_depth;
  std::string dec_format = "csv";
  std::string dec_out;
  dec->add_option("--slope-exp,-n", slope_exp, "Slope exponent n")->required()->check(CLI::Range(-4, 4));
  dec->add_option("--depth,-K", dec_depth, "Surface depth")->check(CLI::Range(2, 12));
  dec->add_option("--format", dec_format, "json, csv or svg")->check(CLI::IsMember({"json", "csv", "svg"}));
  dec->add_option("--out,-o", dec_out, "Output file (default stdout)");

  // reduce
  auto* red = app.add_subcommand("reduce", "Reduce a point of the upper half plane into the fundamental domain");
  std::string point_text;
  bool red_json = false;
  red->add_option("--point", point_text, "\"re,im\" with exact entries, e.g. \"10,1\" or \"1/2,sqrt3/2\"")->required();
  red->add_flag("--json", red_json);

  // member
  auto* mem = app.add_subcommand("member", "Decide membership of a matrix in G = <P1, H>");
  std::string matrix_text;
  bool mem_json = false;
  mem->add_option("--matrix", matrix_text, "\"a,b,c,d\" with exact entries")->required();
  mem->add_flag("--json", mem_json);

  // domain
  auto* dom = app.add_subcommand("domain", "SVG of the fundamental domain");
  std::string dom_out;
  DomainSvgOptions dom_opts;
  dom->add_option("--svg", dom_out, "Output file (default stdout)");
  auto* strip_flag = dom->add_flag("--strip-only", dom_opts.strip_only, "Only the strip walls Re z = +-3");
  dom->add_flag("--annulus", dom_opts.annulus, "The annulus 1/2 < |z| < 2")->excludes(strip_flag);

  // surface
  auto* surf = app.add_subcommand("surface", "JSON dump of the glued square");
  int surf_depth = env_depth;
  surf->add_option("--depth", surf_depth, "Number of segments per side")->check(CLI::Range(1, 64));

  // trace
  auto* tr = app.add_subcommand("trace", "Trace a geodesic and dump its crossings as JSON");
  std::string tr_anchor, tr_point, tr_dir;
  int tr_depth = env_depth;
  int tr_max = -1;
  auto* anchor_opt = tr->add_option("--anchor", tr_anchor, "Start at a cutting point or corner, e.g. B2 or BL");
  tr->add_option("--point", tr_point, "Start at \"x,y\"")->excludes(anchor_opt);
  tr->add_option("--dir", tr_dir, "Direction \"q,p\"")->required();
  tr->add_option("--depth", tr_depth, "Surface depth")->check(CLI::Range(1, 64));
  tr->add_option("--max-crossings", tr_max, "Crossing budget (default from depth)");

  // scan
  auto* scan = app.add_subcommand("scan", "Fixed points of parabolic words up to a given length");
  int scan_len = 8;
  scan->add_option("--length,-L", scan_len, "Maximal word length")->check(CLI::Range(1, 10));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) {
      const VerificationReport r = verify_paper(verify_depth, corrupt ? Gluing::MirroredVertical : Gluing::Chamanara);
      if (verify_format == "json") std::cout << to_json(r).dump(2) << "\n";
      else std::cout << to_text(r);
      return r.passed() ? 0 : 1;
    }
    if (*dec) {
      if (slope_exp < -dec_depth || slope_exp > dec_depth) throw DomainError("|n| must not exceed the depth");
      const Surface surface(dec_depth);
      const CylinderDecomposition d = decompose(surface, slope_exp);
      if (dec_format == "json") emit(to_json(d).dump(2) + "\n", dec_out);
      else if (dec_format == "csv") emit(to_csv(d), dec_out);
      else emit(decomposition_svg(surface, d), dec_out);
      return 0;
    }
    if (*red) {
      const auto parts = split_commas(point_text, 2, "--point");
      const HPoint z = HPoint::interior(parse_field(parts, 0), parse_field(parts, 1));
      const Reduction r = reduce_to_domain(z);
      if (red_json) std::cout << to_json(r).dump(2) << "\n";
      else std::cout << "word: " << r.word.str() << "\npoint: " << r.point.str() << "\n";
      return 0;
    }
    if (*mem) {
      const auto parts = split_commas(matrix_text, 4, "--matrix");
      const Mat2 m(parse_field(parts, 0), parse_field(parts, 1), parse_field(parts, 2), parse_field(parts, 3));
      const Membership r = is_member(m);
      if (mem_json) {
        std::cout << to_json(r).dump(2) << "\n";
      } else if (r.member) {
        std::cout << "member: yes\nword: " << r.word.str() << "\n";
      } else {
        std::cout << "member: no\nresidual: " << r.residual.str() << " (" << to_string(classify(r.residual)) << ")\n";
      }
      return 0;
    }
    if (*dom) {
      emit(domain_svg(dom_opts), dom_out);
      return 0;
    }
    if (*surf) {
      std::cout << to_json(Surface(surf_depth)).dump(2) << "\n";
      return 0;
    }
    if (*tr) {
      const auto dparts = split_commas(tr_dir, 2, "--dir");
      auto as_int = [](const QuadRat& v) {
        const Rational& r = v.as_rational();
        if (!r.is_integer() || !r.numerator().fits_slong_p()) throw DomainError("direction components must be integers");
        return static_cast<std::int64_t>(r.numerator().get_si());
      };
      const DirVec dir(as_int(parse_field(dparts, 0)), as_int(parse_field(dparts, 1)));
      const Surface surface(tr_depth);
      const int budget = tr_max >= 0 ? tr_max : crossing_budget(tr_depth);
      TraceResult result;
      if (!tr_anchor.empty()) {
        result = surface.trace_from(parse_anchor(tr_anchor), dir, budget);
      } else if (!tr_point.empty()) {
        const auto parts = split_commas(tr_point, 2, "--point");
        result = surface.trace({parse_field(parts, 0).as_rational(), parse_field(parts, 1).as_rational()}, dir, budget);
      } else {
        throw DomainError("give --anchor or --point");
      }
      std::cout << to_json(result).dump(2) << "\n";
      return 0;
    }
    if (*scan) {
      const ParabolicScan s = parabolic_direction_scan(scan_len);
      std::cout << "words: " << s.words_checked << "\nparabolic: " << s.parabolics
                << "\nfixed points in (-1,1): " << s.counterexamples.size() << "\n";
      for (const auto& [w, fp] : s.sample) std::cout << "  " << w.str() << " fixes " << fp.str() << "\n";
      for (const auto& [w, fp] : s.counterexamples) std::cout << "  COUNTEREXAMPLE " << w.str() << " fixes " << fp.str() << "\n";
      return s.passed() ? 0 : 1;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
