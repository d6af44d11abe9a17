#pragma once
// Minimal dense real polynomial helpers (coefficients ascending by degree).
// Degrees stay tiny here (<= 8), so companion-matrix root finding plus a
// Newton polish is plenty.

#include <complex>
#include <vector>

namespace ps3 {

using cplx = std::complex<double>;
using Poly = std::vector<double>;

int poly_degree(const Poly& p, double tol = 0.0);
Poly poly_trim(const Poly& p, double rel_tol = 1e-13);
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, double s);
Poly poly_derivative(const Poly& p);
double poly_eval(const Poly& p, double x);
cplx poly_eval(const Poly& p, cplx x);

// divide by (x - r)^k assuming r is a root of that multiplicity; returns
// the quotient (remainder discarded -- caller guarantees divisibility)
Poly poly_deflate(const Poly& p, double r, int k = 1);

// all complex roots, companion matrix + Newton polish
std::vector<cplx> poly_roots(const Poly& p);

// roots that are real to within tol (returned as doubles)
std::vector<double> poly_real_roots(const Poly& p, double tol = 1e-9);

}  // namespace ps3
