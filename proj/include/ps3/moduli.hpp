#pragma once
// Conformal invariants of pants: the triple of extremal distances between
// the three (color-ordered) pairs of boundary ovals, computed by condenser
// solves, plus the transcendental matcher recovering (lambda, h1, h2) of a
// membrane family from a target triple.
//
// Ordering convention: ovals are sorted red < green < blue; when two ovals
// share a color the one closer (smaller extremal distance) to the uniquely
// colored oval comes first.  The triple lists the pair distances
// (o1,o2), (o2,o3), (o3,o1) in that sorted order, which for an {r,g,b}
// palette is (red-green, green-blue, blue-red).

#include <array>

#include "ps3/membrane.hpp"
#include "ps3/pants.hpp"

namespace ps3 {

struct ModuliTriple {
  double d12 = 0, d23 = 0, d31 = 0;
  std::array<double, 3> as_array() const { return {d12, d23, d31}; }
};

ModuliTriple moduli_of_slit_pants(const RealSlitPants& p, int order = 24);

// single-chart membranes only (PB1, planar PA2/PA3, and the PB2 quotients,
// which are solved upstairs with Xi-symmetric data, halving the energy);
// grafted membranes raise SolverFailure
ModuliTriple moduli_of_membrane(const SurfaceAtlas& a, int order = 24);

struct MatchResult {
  MembraneSpec spec;   // fashion + integers + matched (lambda, h1, h2)
  double residual = 0; // sup-norm moduli mismatch
  int iterations = 0;  // Newton steps of the successful start
};

// damped quasi-Newton with finite-difference Jacobian and multistart over
// the admissible box; integers m1/m2 are inputs, not unknowns
MatchResult match(const ModuliTriple& target, Fashion fashion, int m1, int m2,
                  double tol = 1e-6, int order = 24);

}  // namespace ps3
