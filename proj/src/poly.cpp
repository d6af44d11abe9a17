#include "ps3/poly.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "ps3/errors.hpp"

namespace ps3 {

int poly_degree(const Poly& p, double tol) {
  for (int i = (int)p.size() - 1; i >= 0; --i)
    if (std::abs(p[i]) > tol) return i;
  return -1;
}

Poly poly_trim(const Poly& p, double rel_tol) {
  double m = 0;
  for (double c : p) m = std::max(m, std::abs(c));
  Poly out = p;
  while (!out.empty() && std::abs(out.back()) <= rel_tol * m) out.pop_back();
  return out;
}

Poly poly_add(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), 0.0);
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

Poly poly_sub(const Poly& a, const Poly& b) {
  return poly_add(a, poly_scale(b, -1.0));
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0.0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

Poly poly_scale(const Poly& a, double s) {
  Poly out = a;
  for (double& c : out) c *= s;
  return out;
}

Poly poly_derivative(const Poly& p) {
  if (p.size() <= 1) return {};
  Poly out(p.size() - 1);
  for (size_t i = 1; i < p.size(); ++i) out[i - 1] = i * p[i];
  return out;
}

double poly_eval(const Poly& p, double x) {
  double v = 0;
  for (int i = (int)p.size() - 1; i >= 0; --i) v = v * x + p[i];
  return v;
}

cplx poly_eval(const Poly& p, cplx x) {
  cplx v = 0;
  for (int i = (int)p.size() - 1; i >= 0; --i) v = v * x + p[i];
  return v;
}

Poly poly_deflate(const Poly& p, double r, int k) {
  Poly cur = p;
  for (int pass = 0; pass < k; ++pass) {
    int n = (int)cur.size() - 1;
    if (n < 1) throw InvalidInput("poly_deflate: degree too small");
    Poly q(n);  // quotient has degree n-1
    double carry = cur[n];
    for (int i = n - 1; i >= 0; --i) {
      q[i] = carry;
      carry = cur[i] + r * carry;
    }
    cur = q;
  }
  return cur;
}

std::vector<cplx> poly_roots(const Poly& pin) {
  Poly p = poly_trim(pin);
  int n = poly_degree(p);
  if (n <= 0) return {};
  Eigen::MatrixXd C = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) C(i, n - 1) = -p[i] / p[n];
  for (int i = 1; i < n; ++i) C(i, i - 1) = 1.0;
  Eigen::EigenSolver<Eigen::MatrixXd> es(C, /*computeEigenvectors=*/false);
  std::vector<cplx> roots;
  Poly dp = poly_derivative(p);
  for (int i = 0; i < n; ++i) {
    cplx z = es.eigenvalues()[i];
    // a few Newton steps to polish
    for (int it = 0; it < 8; ++it) {
      cplx f = poly_eval(p, z), df = poly_eval(dp, z);
      if (std::abs(df) < 1e-300) break;
      cplx step = f / df;
      z -= step;
      if (std::abs(step) < 1e-15 * (1.0 + std::abs(z))) break;
    }
    roots.push_back(z);
  }
  std::sort(roots.begin(), roots.end(), [](cplx a, cplx b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return roots;
}

std::vector<double> poly_real_roots(const Poly& p, double tol) {
  std::vector<double> out;
  for (cplx z : poly_roots(p))
    if (std::abs(z.imag()) <= tol * (1.0 + std::abs(z.real())))
      out.push_back(z.real());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ps3
