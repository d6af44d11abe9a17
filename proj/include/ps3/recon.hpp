#pragma once
// Conformal welding of a real slit pants onto a tailored membrane, and the
// reconstruction of the eigenfunction from the boundary values of the
// welding map p.
//
// The welding never builds the map in the interior.  Both surfaces are
// taken to the same canonical annulus-with-a-radial-slit by a condenser
// solve with one oval insulated; the potential level along the insulated
// oval is then a conformal invariant, so equal levels identify boundary
// points of the two surfaces directly.  Two such solves are used:
//
//   * insulating the red ovals (the banks of [-1,1] on the pants side, the
//     covered circle |p - 1/mu| = r on the membrane side) matches the banks
//     level-by-level and yields p(y +- i0) and, through the level
//     derivatives, p'(y +- i0);
//   * insulating the slit-colored ovals locates the two boundary critical
//     points y1, y2 of p: they are the pants-side points at the potential
//     levels of the two slit tips, where the projection to the sphere
//     branches like a square root.
//
// Supported sources are pants with one slot of each color whose red slot is
// exactly [-1,1]; supported targets are planar one-chart membranes with a
// single slit (fashion PB1 at any cover multiplicity, and the planar PA
// one-slit fashions).  Grafted and quotient membranes would need seam-aware
// condensers and two-valued bank data and are rejected up front.

#include <array>
#include <vector>

#include "ps3/membrane.hpp"
#include "ps3/pants.hpp"

namespace ps3 {

struct ReconOptions {
  int order = 24;            // condenser expansion order
  int samples = 160;         // bank samples (first-kind Chebyshev grid in y)
  double moduli_tol = 2e-3;  // allowed relative mismatch of the two triples
  bool moduli_check = true;  // skip the (costly) pre-check when false
};

// boundary values of the welding map p on the banks of [-1,1]
struct BoundaryMap {
  Fashion fashion = Fashion::PB1;
  int m = 1;                   // cover multiplicity of the membrane
  double lambda = 0;           // spectral parameter of the membrane
  double mu_inv = 0, r = 0;    // the covered circle: |p - mu_inv| = r
  std::array<double, 4> a{};   // slot endpoints: blue a[0],a[1], green a[2],a[3]
  std::vector<double> y;       // ascending sample grid in (-1,1)
  std::vector<cplx> p_plus, p_minus;    // p(y + i0), p(y - i0)
  std::vector<cplx> dp_plus, dp_minus;  // p'(y + i0), p'(y - i0)
  cplx y1, y2;                 // boundary critical points of p (real here)
};

// throws ModuliMismatch if the two surfaces are not conformally equivalent
// within opt.moduli_tol, MapDegenerate if the level correspondence breaks
// down, InvalidInput for unsupported shapes
BoundaryMap conformal_map(const RealSlitPants& pants, const SurfaceAtlas& atlas,
                          const ReconOptions& opt = {});

// the eigenfunction from the boundary map,
//   u = sqrt((y-y1)(y-y2) / (p'(y+i0) p'(y-i0))) (p(y+i0)-p(y-i0)) / w(y),
//   w^2 = (y^2-1) (y-a1)(y-a2)(y-a3)(y-a4),
// on the sample grid of the map.  Factors with an endpoint at infinity drop
// out (they only scale u, which is normalized to max |u| = 1).  Square-root
// branches are tracked by continuity from the left endpoint; the remaining
// global phase is fixed by making sum u^2 positive, which leaves the
// overall sign to the analytic branches (replacing p by its unit-circle
// antisymmetrization 1/conj(p) flips it).
struct ReconstructedU {
  std::vector<double> y;     // grid (same as the boundary map)
  std::vector<double> u;     // normalized samples, max |u| = 1
  double imag_residual = 0;  // discarded imaginary part, relative
  int zero_count = 0;        // zeros on the closed interval, endpoints incl.
};
ReconstructedU reconstruct_u(const BoundaryMap& bm);

// project the reconstruction on the weighted Chebyshev basis and test it
// against the direct collocation solver: sup-norm equation residual at the
// given lambda (with the best free constant) and distance to the nearest
// direct eigenvalue
struct VerifyReport {
  double lambda_nearest = 0;
  double lambda_rel_err = 0;
  double residual = 0;      // sup |lambda Hu - Ku - c*|
  double residual_rel = 0;  // residual / (pi max|u|)
  int zero_count = 0;       // zeros of the projection, endpoints included
};
VerifyReport verify_pair(const RationalDeg3& R, double lambda,
                         const ReconstructedU& rec, int N = 48);

}  // namespace ps3
