#include "ps3/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "ps3/errors.hpp"

namespace ps3 {

namespace {
constexpr double kPi = 3.14159265358979323846;

bool on_slot(cplx z, double tol = 1e-12) {
  return std::abs(z.imag()) <= tol && std::abs(z.real()) <= 1.0 + tol;
}

// sum over the poles of R (with multiplicity, missing ones at infinity
// contribute rho = 0) of -pi * rho(p)^n, for n = 1..N; this is the
// x-independent functional  c -> int u(t) Q'(t)/Q(t) dt
Eigen::VectorXd pole_functional(const RationalDeg3& R, int N) {
  Eigen::VectorXd q = Eigen::VectorXd::Zero(N);
  Poly Q = poly_trim(R.den);
  for (cplx p : poly_roots(Q)) {
    if (on_slot(p))
      throw PreimageOnSlot("denominator root on the slot [-1,1]");
    cplx r = rho(p), pw = 1.0;
    for (int n = 1; n <= N; ++n) {
      pw *= r;
      q(n - 1) += -kPi * pw.real();
    }
  }
  return q;
}
}  // namespace

cplx rho(cplx z) {
  if (std::abs(z.real()) > 1e140 || std::abs(z.imag()) > 1e140) return 0.0;
  cplx s = std::sqrt(z * z - 1.0);
  cplx r1 = z - s, r2 = z + s;
  return std::abs(r1) <= std::abs(r2) ? r1 : r2;
}

std::vector<double> chebyshev_nodes(int M) {
  std::vector<double> x(M);
  for (int i = 0; i < M; ++i) x[i] = std::cos(kPi * (2 * i + 1) / (2.0 * M));
  return x;
}

Eigen::MatrixXd hilbert_block(int N, const std::vector<double>& nodes) {
  if (N < 1) throw InvalidInput("basis size must be positive");
  Eigen::MatrixXd H(nodes.size(), N);
  for (size_t i = 0; i < nodes.size(); ++i) {
    double th = std::acos(std::clamp(nodes[i], -1.0, 1.0));
    for (int n = 1; n <= N; ++n) H(i, n - 1) = -kPi * std::cos(n * th);
  }
  return H;
}

Eigen::MatrixXd hilbert_block(int N) { return hilbert_block(N, chebyshev_nodes(N)); }

std::array<cplx, 2> secondary_preimages(const RationalDeg3& R, double x) {
  double y = R(x);
  if (!std::isfinite(y)) throw InvalidInput("R has a pole at the query point");
  Poly g = poly_sub(R.num, poly_scale(R.den, y));
  double scale = 0.0;
  for (double v : g) scale = std::max(scale, std::abs(v));
  Poly gt;
  for (double v : g) gt.push_back(std::abs(v) > 1e-12 * scale ? v : 0.0);
  gt = poly_trim(gt, 1e-14);
  int d = poly_degree(gt);
  if (d < 1) throw DegenerateBranching("constant map while splitting preimages");
  Poly h = poly_deflate(gt, x);  // x is always a root
  // remaining roots; degree drops mean preimages at infinity (rho = 0 there,
  // represented by a huge real value so rho() still does the right thing)
  std::array<cplx, 2> out{cplx(1e300, 0.0), cplx(1e300, 0.0)};
  int hd = poly_degree(h);
  if (hd == 1) {
    out[0] = cplx(-h[0] / h[1], 0.0);
  } else if (hd == 2) {
    cplx disc = std::sqrt(cplx(h[1] * h[1] - 4.0 * h[2] * h[0], 0.0));
    out[0] = (-h[1] + disc) / (2.0 * h[2]);
    out[1] = (-h[1] - disc) / (2.0 * h[2]);
  }
  for (cplx z : out)
    if (std::abs(z) < 1e299 && on_slot(z, 1e-11) && std::abs(z.real() - x) > 1e-9)
      throw PreimageOnSlot("secondary preimage landed on [-1,1]");
  return out;
}

Eigen::MatrixXd kernel_block(const RationalDeg3& R, int N,
                             const std::vector<double>& nodes) {
  validate(R);
  Eigen::MatrixXd K = hilbert_block(N, nodes);  // z_1(x) = x term
  Eigen::VectorXd q = pole_functional(R, N);
  for (size_t i = 0; i < nodes.size(); ++i) {
    auto zs = secondary_preimages(R, nodes[i]);
    cplx r2 = rho(zs[0]), r3 = rho(zs[1]);
    cplx p2 = 1.0, p3 = 1.0;
    for (int n = 1; n <= N; ++n) {
      p2 *= r2;
      p3 *= r3;
      K(i, n - 1) += -kPi * (p2 + p3).real() - q(n - 1);
    }
  }
  return K;
}

Eigen::MatrixXd kernel_block(const RationalDeg3& R, int N) {
  return kernel_block(R, N, chebyshev_nodes(N));
}

SpectrumResult solve_spectrum(const RationalDeg3& R, int N) {
  if (N < 8) throw InvalidInput("need at least 8 basis functions");
  std::vector<double> nodes = chebyshev_nodes(N + 1);
  const int M = N + 1;
  Eigen::MatrixXd H = hilbert_block(N, nodes);
  Eigen::MatrixXd K = kernel_block(R, N, nodes);

  // lambda * H c = K c + const * 1  as a generalized pencil in (c, const)
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(M, M), B = Eigen::MatrixXd::Zero(M, M);
  A.leftCols(N) = K;
  A.col(N).setOnes();
  B.leftCols(N) = H;

  Eigen::GeneralizedEigenSolver<Eigen::MatrixXd> ges;
  ges.compute(A, B, true);
  if (ges.info() != Eigen::Success)
    throw NoConvergence("generalized eigensolver did not converge");

  struct Pair {
    double lam;
    Eigen::VectorXd c;
    double cval;
  };
  std::vector<Pair> pairs;
  for (int j = 0; j < M; ++j) {
    cplx beta = ges.betas()(j);
    cplx alpha = ges.alphas()(j);
    if (std::abs(beta) < 1e-12 * (1.0 + std::abs(alpha))) continue;
    cplx lam = alpha / beta;
    if (std::abs(lam.imag()) >= 1e-6) continue;
    double l = lam.real();
    if (l <= 1e-4 || l >= 3.0 - 1e-4) continue;
    // the difference K - H is smoothing, so the discrete pencil carries a
    // large spurious cluster at exactly lambda = 1 (which the continuous
    // problem excludes); genuine eigenvalues only accumulate toward 1
    if (std::abs(l - 1.0) < 1e-8) continue;
    Eigen::VectorXcd v = ges.eigenvectors().col(j);
    int iphase;
    v.cwiseAbs().maxCoeff(&iphase);
    v *= std::conj(v(iphase)) / std::abs(v(iphase));  // remove overall phase
    if (v.imag().norm() > 1e-6 * v.norm()) continue;
    Eigen::VectorXd vr = v.real();
    if (!vr.allFinite()) continue;
    double nc = vr.head(N).norm();
    if (nc < 1e-14) continue;
    vr /= nc;
    int imax;
    vr.head(N).cwiseAbs().maxCoeff(&imax);
    if (vr(imax) < 0) vr = -vr;
    pairs.push_back({l, vr.head(N), vr(N)});
  }
  std::sort(pairs.begin(), pairs.end(),
            [](const Pair& a, const Pair& b) { return a.lam < b.lam; });

  SpectrumResult out;
  for (const Pair& p : pairs) {
    out.eigenvalues.push_back(p.lam);
    out.eigenvectors.push_back(p.c);
    out.const_values.push_back(p.cval);
    out.residuals.push_back(residual(R, p.lam, p.c, p.cval));
  }
  return out;
}

double residual(const RationalDeg3& R, double lambda,
                const Eigen::VectorXd& coeffs, double cval) {
  const int N = static_cast<int>(coeffs.size());
  std::vector<double> pts;
  for (int i = 0; i < 4 * N; ++i)
    pts.push_back(std::cos(kPi * (i + 0.37) / (4.0 * N)));  // off-grid
  Eigen::MatrixXd H = hilbert_block(N, pts);
  Eigen::MatrixXd K = kernel_block(R, N, pts);
  Eigen::VectorXd r = lambda * (H * coeffs) - K * coeffs;
  return (r.array() - cval).abs().maxCoeff();
}

double eval_u(const Eigen::VectorXd& coeffs, double x) {
  double th = std::acos(std::clamp(x, -1.0, 1.0));
  double s = 0.0;
  for (int n = 1; n <= coeffs.size(); ++n) s += coeffs(n - 1) * std::sin(n * th);
  return s;
}

int count_zeros(const Eigen::VectorXd& coeffs) {
  const int G = 10 * static_cast<int>(coeffs.size());
  int changes = 0;
  double prev = 0.0;
  bool have = false;
  for (int i = 1; i < G; ++i) {
    double th = kPi * i / G;
    double v = eval_u(coeffs, std::cos(th));
    if (std::abs(v) < 1e-13) continue;
    if (have && v * prev < 0) ++changes;
    prev = v;
    have = true;
  }
  return changes;
}

cplx CauchyTransform::operator()(cplx x) const {
  if (on_slot(x, 1e-9)) throw OnSlot("evaluation point on the slot");
  cplx r = rho(x), pw = 1.0, s = 0.0;
  for (int n = 1; n <= coeffs.size(); ++n) {
    pw *= r;
    s += coeffs(n - 1) * pw;
  }
  return -kPi * s + const_star;
}

cplx CauchyTransform::bank(double t, int sign) const {
  double th = std::acos(std::clamp(t, -1.0, 1.0));
  // rho(t +- i0) = exp(-+ i theta)
  cplx r = std::exp(cplx(0.0, sign > 0 ? -th : th)), pw = 1.0, s = 0.0;
  for (int n = 1; n <= coeffs.size(); ++n) {
    pw *= r;
    s += coeffs(n - 1) * pw;
  }
  return -kPi * s + const_star;
}

CauchyTransform cauchy_transform(const RationalDeg3& R, double lambda,
                                 const Eigen::VectorXd& coeffs, double cval) {
  if (std::abs(lambda - 3.0) < 1e-9)
    throw RangeViolation("the reduction degenerates at lambda = 3");
  Eigen::VectorXd q = pole_functional(R, static_cast<int>(coeffs.size()));
  double logint = q.dot(coeffs);
  return CauchyTransform{coeffs, (logint - cval) / (lambda - 3.0)};
}

}  // namespace ps3
