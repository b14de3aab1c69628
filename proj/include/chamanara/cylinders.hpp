#pragma once

// Cylinder decompositions of the surface in directions of slope 2^n, their
// moduli, and the parabolic affine elements they induce.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "chamanara/fuchsian.hpp"
#include "chamanara/surface.hpp"

namespace chamanara {

enum class CylinderKind { Trapezoid, Parallelogram };
const char* to_string(CylinderKind k);

// One passage of a cylinder through the square: a quadrilateral between two
// parallel lines, entering through `entry_side` and leaving through `exit_side`.
struct CylinderPiece {
  Side entry_side;
  Side exit_side;
  // entry(lo), exit(lo), exit(hi), entry(hi)
  std::array<SurfacePoint, 4> corners;
};

struct Cylinder {
  DirVec direction;
  // Circumference w = wc * L and height h = hc / L with L = |(q, p)|.
  Rational wc;
  Rational hc;
  std::vector<SaddleConnection> boundary;  // with multiplicity
  CylinderKind kind = CylinderKind::Trapezoid;
  std::vector<CylinderPiece> pieces;
  // Transversal coordinate of the lower boundary in its first piece.
  Rational key;

  Rational modulus() const;
  Rational inverse_modulus() const;
  Rational area() const { return wc * hc; }
};

Rational modulus(const Cylinder& c);
int boundary_count(const Cylinder& c);

struct CylinderDecomposition {
  DirVec direction;
  int slope_exponent;
  int depth;
  std::vector<Cylinder> cylinders;  // by decreasing area
  Rational covered_area;
};

// A strip did not close within its crossing budget.
class DecompositionIncomplete : public Error {
 public:
  DecompositionIncomplete(const std::string& what, CylinderDecomposition partial)
      : Error(what), partial_(std::move(partial)) {}
  const CylinderDecomposition& partial() const noexcept { return partial_; }

 private:
  CylinderDecomposition partial_;
};

// The maximal cylinder through the transversal value s0 of the entry
// boundary (bottom and left sides), or nullopt when that line meets the
// singularity.
std::optional<Cylinder> cylinder_through(const Surface& surface, const DirVec& dir, const Rational& s0);

CylinderDecomposition decompose(const Surface& surface, int n);
CylinderDecomposition decompose(int n, int depth);

struct CommensurabilityResult {
  Rational m;
  std::vector<long> multipliers;  // one per cylinder, in decomposition order
};

CommensurabilityResult commensurate(const CylinderDecomposition& d);

// Parabolic with eigenvector (q, p) shearing by t along it.
Mat2 shear_matrix(const DirVec& dir, const Rational& t);

struct ParabolicSynthesis {
  DirVec rotated_direction;
  Mat2 matrix;
  Rational m;
  std::vector<long> twists;
};

ParabolicSynthesis synthesize_parabolic(const CylinderDecomposition& d);

struct RenormalizationReport {
  bool sufficient = false;
  bool passed = false;
  std::size_t trapezoids = 0;
  std::optional<std::size_t> first_failure;  // index j of the failing pair (j, j+1)
  std::vector<Rational> ratios;               // wc ratio of consecutive trapezoids
  std::string message;
};

RenormalizationReport renormalization_check(const CylinderDecomposition& d);

}  // namespace chamanara
