#pragma once
// Tailored pants ("membranes") sewn from multi-sheeted annuli spread over
// the p-sphere.  The building blocks are the annuli between the circle
//   C = { |p - 1/mu| = r },  r = sqrt(1/mu^2 - 1),  mu = sqrt((3-l)/(2l)),
// and the lines eps*R^, eps^2*R^ (cases A/B1), or between eps*R^ and its
// image under the composite reflection chi(D D1) (case B2).  Each fashion
// removes straight or circular slots and optionally grafts a second annulus
// along a cut; the B2 fashions finally take the quotient by the lifted
// involution Xi.
//
// Every annulus is uniformized by a Moebius map onto q < |xi| < 1; the
// m-sheeted cover then lives on q^(1/m) < |zeta| < 1 with projection
// p = from_base(zeta^m).  Curves (slots, seams) are stored as dense sample
// lists in both chart and sphere coordinates.

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "ps3/mobius.hpp"
#include "ps3/pants.hpp"  // Color

namespace ps3 {

// ---- generalized circles and annulus uniformization ---------------------

struct Gcircle {
  bool is_line = false;
  cplx center;  // circle: center/radius; line: point p0 and unit direction
  double radius = 0.0;
  cplx p0, dir;

  cplx reflect(cplx z) const;    // inversion / mirror image
  cplx point(double t) const;    // a parametrization (t in [0,1))
  double side(cplx z) const;     // signed distance-like classifier
};

Gcircle circle_from_points(cplx a, cplx b, cplx c);

// spectral-parameter geometry
double mu_of_lambda(double lambda);  // sqrt((3-lambda)/(2*lambda))
Gcircle gcircle_C(double lambda);     // |p - 1/mu| = sqrt(1/mu^2 - 1)
Gcircle line_eps();                  // eps * R^,   eps = exp(2 pi i/3)
Gcircle line_eps2();                 // eps^2 * R^
Gcircle line_real();
Mobius chi_DD1(double lambda);       // p -> 1/mu + r^2/(p - 1/mu)
Gcircle circle_chiDD1_eps(double lambda);

// Moebius map sending the annulus between two disjoint circles onto
// q < |xi| < 1, with `first` landing on the unit circle
struct AnnulusChart {
  Mobius to_xi;
  double q = 0.0;
};
AnnulusChart uniformize_annulus(const Gcircle& first, const Gcircle& second);

bool inside_annulus(const AnnulusChart& a, cplx p, double margin = 0.0);

// ---- membrane specifications (Tables of admissible parameters) ----------

enum class Fashion { PA1, PA2, PA3, PA12, PA13, PB1, PB21, PB22, PB23 };
const char* to_string(Fashion f);
Fashion fashion_from_string(const std::string& s);

struct MembraneSpec {
  Fashion fashion = Fashion::PB1;
  double lambda = 1.5;
  double h1 = 0.0, h2 = 0.0;  // PA1 uses h = h1 + i h2; PA12/PA13 use h1
  int m1 = 1, m2 = 0;         // PB fashions use m := m1
};

// empty list == admissible; entries name the violated range inequality
std::vector<std::string> validate_spec(const MembraneSpec& s);

// ---- charted surfaces ----------------------------------------------------

struct Chart {
  std::string base;  // "alpha", "alphabar", "beta"
  int sheets = 1;    // cover multiplicity m
  double inner = 0;  // zeta annulus inner radius (outer radius is 1)
  AnnulusChart xi;   // base annulus uniformizer (q = inner^sheets)
  Color outer_color = Color::red, inner_color = Color::green;

  cplx project(cplx zeta) const;  // zeta -> p
};

struct Slit {
  int chart = 0;
  Color color = Color::blue;
  std::vector<cplx> zeta, p;  // dense samples, matching indices
};

struct Seam {  // grafting cut identified between two charts
  int chart_a = 0, chart_b = 1;
  std::vector<cplx> zeta_a, zeta_b, p;
};

struct OvalRef {
  Color color;
  int winding = 0;
  std::string kind;  // "outer", "inner", "slit", "composite"
  std::vector<int> charts;  // participating charts
  int slit = -1;            // for kind == "slit"
};

struct SurfaceAtlas {
  MembraneSpec spec;
  double mu_inv = 0, r = 0;
  std::vector<Chart> charts;
  std::vector<Slit> slits;
  std::vector<Seam> seams;
  std::vector<OvalRef> ovals;
  bool planar = false;       // one chart, no seams (quotients still allowed)
  bool quotient_Xi = false;  // PB2 fashions: surface is pre-quotient/Xi
};

SurfaceAtlas build_membrane(const MembraneSpec& s);

// the lifted involution on m*beta in (rho, phi) coordinates about 1/mu;
// phi is tracked modulo 2 pi m
std::pair<double, double> involution_Xi(std::pair<double, double> pt, int m,
                                        const MembraneSpec& s);

struct BoundaryTrace {
  Color color;
  int winding = 0;          // net turns around the covered circle
  std::vector<cplx> p;      // ordered closed-curve samples on the sphere
};
BoundaryTrace boundary_trace(const SurfaceAtlas& atlas, int oval);

// Euler characteristic from the seam graph (must be -1 for pants)
int euler_characteristic(const SurfaceAtlas& atlas);

}  // namespace ps3
