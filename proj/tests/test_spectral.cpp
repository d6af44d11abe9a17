#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "ps3/errors.hpp"
#include "ps3/spectral.hpp"

using namespace ps3;

namespace {
constexpr double kPi = 3.14159265358979323846;

// u_n(cos th) = sin(n th); all oracles integrate in the theta variable where
// the basis functions are entire, via composite Simpson
template <class F>
double simpson(F f, double a, double b, int panels) {
  double h = (b - a) / panels, s = f(a) + f(b);
  for (int i = 1; i < panels; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return s * h / 3.0;
}

// V.p. int_{-1}^{1} sqrt(1-t^2) U_{n-1}(t) / (t - x) dt by symmetrized
// quadrature: subtract the value at the singular angle; the leftover
// V.p. int_0^pi dth/(cos th - cos th0) vanishes identically
double pv_hilbert(int n, double x) {
  double th0 = std::acos(x);
  auto f = [&](double th) {
    double num = std::sin(n * th) * std::sin(th) - std::sin(n * th0) * std::sin(th0);
    double den = std::cos(th) - x;
    if (std::abs(den) < 1e-13) return n * std::cos(n * th0) + std::sin(n * th0) * (x / std::sin(th0)); // limit
    return num / den;
  };
  return simpson(f, 0.0, kPi, 20000);
}

std::complex<double> cauchy_quad(int n, std::complex<double> z) {
  auto fr = [&](double th) {
    return (std::sin(n * th) * std::sin(th) / (std::cos(th) - z)).real();
  };
  auto fi = [&](double th) {
    return (std::sin(n * th) * std::sin(th) / (std::cos(th) - z)).imag();
  };
  return {simpson(fr, 0.0, kPi, 20000), simpson(fi, 0.0, kPi, 20000)};
}

// V.p. int u_n(t) R'(t)/(R(t)-R(x)) dt: split off the 1/(t-x) singularity,
// whose principal value is the Hilbert closed form, and integrate the
// smooth remainder
double pv_kernel(const RationalDeg3& R, int n, double x) {
  double Rx = R(x), dRx = R.deriv(x);
  auto smooth = [&](double th) {
    double t = std::cos(th);
    double m;
    if (std::abs(t - x) < 1e-5) {
      // kernel minus 1/(t-x) tends to R''/(2R') at t = x; second difference
      double h = 1e-4;
      double k1 = R.deriv(x + h) / (R(x + h) - Rx) - 1.0 / h;
      double k2 = R.deriv(x - h) / (R(x - h) - Rx) + 1.0 / h;
      m = 0.5 * (k1 + k2);
    } else {
      m = R.deriv(t) / (R(t) - Rx) - 1.0 / (t - x);
    }
    return std::sin(n * th) * std::sin(th) * m;
  };
  (void)dRx;
  double th0 = std::acos(x);
  return -kPi * std::cos(n * th0) + simpson(smooth, 0.0, kPi, 20000);
}
}  // namespace

TEST_CASE("hilbert block closed form against principal value quadrature") {
  CHECK(hilbert_block(1, {0.0})(0, 0) == doctest::Approx(0.0).epsilon(1e-12));
  std::vector<double> xs{-0.83, -0.31, 0.07, 0.46, 0.92};
  Eigen::MatrixXd H = hilbert_block(6, xs);
  for (int i = 0; i < 5; ++i)
    for (int n = 1; n <= 6; ++n) {
      CHECK(H(i, n - 1) == doctest::Approx(pv_hilbert(n, xs[i])).epsilon(0).scale(1).epsilon(1e-8));
      CHECK(std::abs(H(i, n - 1)) <= kPi + 1e-12);
    }
  // node form: entry is -pi cos(n theta_i)
  auto nodes = chebyshev_nodes(8);
  Eigen::MatrixXd Hn = hilbert_block(8);
  for (int i = 0; i < 8; ++i) {
    double th = std::acos(nodes[i]);
    for (int n = 1; n <= 8; ++n)
      CHECK(Hn(i, n - 1) == doctest::Approx(-kPi * std::cos(n * th)).epsilon(1e-12));
  }
}

TEST_CASE("rho branch selection and cauchy closed form") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> U(-4.0, 4.0);
  int checked = 0;
  while (checked < 1000) {
    std::complex<double> z{U(rng), U(rng)};
    if (std::abs(z.imag()) < 1e-3 && std::abs(z.real()) < 1.1) continue;
    CHECK(std::abs(rho(z)) < 1.0);
    ++checked;
  }
  // quadrature check of int sqrt(1-t^2) U_{n-1}/(t-z) = -pi rho(z)^n
  for (std::complex<double> z : {std::complex<double>{1.7, 0.0},
                                 {-0.3, 0.8},
                                 {2.0, -1.5},
                                 {-4.2, 0.01}})
    for (int n : {1, 2, 5}) {
      auto lhs = cauchy_quad(n, z);
      auto rhs = -kPi * std::pow(rho(z), n);
      CHECK(std::abs(lhs - rhs) < 1e-8);
    }
  // banks: rho(t +- i0) = exp(-+ i theta)
  double t = 0.4, th = std::acos(t);
  CHECK(std::abs(rho({t, 1e-9}) - std::exp(std::complex<double>(0, -th))) < 1e-7);
  CHECK(std::abs(rho({t, -1e-9}) - std::exp(std::complex<double>(0, th))) < 1e-7);
}

TEST_CASE("kernel block against adaptive quadrature on a reference map") {
  RationalDeg3 R = fixture(CaseLabel::A);
  std::vector<double> pts{-0.77, -0.21, 0.11, 0.53, 0.88};
  const int N = 6;
  Eigen::MatrixXd K = kernel_block(R, N, pts);
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> pick_i(0, 4), pick_n(1, N);
  for (int rep = 0; rep < 5; ++rep) {
    int i = pick_i(rng), n = pick_n(rng);
    CHECK(K(i, n - 1) == doctest::Approx(pv_kernel(R, n, pts[i])).epsilon(1e-7));
  }
}

TEST_CASE("kernel block degenerates to the hilbert block without extra terms") {
  // synthetic check: if both secondary preimages sit at infinity and there
  // are no finite poles, only the z_1 = x fraction survives
  std::vector<double> pts{-0.5, 0.0, 0.5};
  Eigen::MatrixXd H = hilbert_block(4, pts);
  for (size_t i = 0; i < pts.size(); ++i)
    for (int n = 1; n <= 4; ++n) {
      double extra = -kPi * std::pow(std::abs(rho(std::complex<double>(1e300, 0))), n);
      CHECK(H(i, n - 1) + 2 * extra == doctest::Approx(H(i, n - 1)));
    }
}

TEST_CASE("spectrum of the reference maps") {
  for (CaseLabel cl : {CaseLabel::A, CaseLabel::B1}) {
    RationalDeg3 R = fixture(cl);
    SpectrumResult s = solve_spectrum(R, 64);
    REQUIRE(s.eigenvalues.size() >= 3);
    for (size_t j = 0; j < s.eigenvalues.size(); ++j) {
      CHECK(s.eigenvalues[j] > 0.0);
      CHECK(s.eigenvalues[j] < 3.0);
      if (j) CHECK(s.eigenvalues[j] >= s.eigenvalues[j - 1]);
      CHECK(std::isfinite(s.residuals[j]));
    }
    // eigenvalues accumulate toward 1: distances decrease along the tail
    std::vector<double> gaps;
    for (double l : s.eigenvalues)
      if (l > 1.0) gaps.push_back(l - 1.0);
    std::sort(gaps.rbegin(), gaps.rend());
    REQUIRE(gaps.size() >= 5);
    for (size_t j = gaps.size() - 5; j + 1 < gaps.size(); ++j)
      CHECK(gaps[j + 1] < gaps[j]);
    // certified leading eigenpairs are genuine solutions off the grid
    for (int j = 0; j < 3; ++j)
      CHECK(s.residuals[j] < 1e-6 * s.eigenvectors[j].norm());
  }
}

TEST_CASE("spectrum is invariant under domain gauges") {
  RationalDeg3 R = fixture(CaseLabel::A);
  SpectrumResult base = solve_spectrum(R, 64);
  for (Gauge g : {Gauge{0.3, 1}, Gauge{-0.45, -1}}) {
    SpectrumResult moved = solve_spectrum(gauge_apply(R, g, GaugeSide::pre), 64);
    size_t m = std::min<size_t>({base.eigenvalues.size(), moved.eigenvalues.size(), 6});
    REQUIRE(m >= 4);
    for (size_t j = 0; j < m; ++j)
      CHECK(moved.eigenvalues[j] == doctest::Approx(base.eigenvalues[j]).epsilon(1e-6));
  }
}

TEST_CASE("refinement stability of leading eigenvalues") {
  RationalDeg3 R = fixture(CaseLabel::B1);
  SpectrumResult a = solve_spectrum(R, 64), b = solve_spectrum(R, 128);
  REQUIRE(a.eigenvalues.size() >= 4);
  for (int j = 0; j < 4; ++j)
    CHECK(a.eigenvalues[j] == doctest::Approx(b.eigenvalues[j]).epsilon(1e-8));
}

TEST_CASE("residual and zero counting basics") {
  RationalDeg3 R = fixture(CaseLabel::A);
  Eigen::VectorXd zero = Eigen::VectorXd::Zero(16);
  CHECK(residual(R, 1.7, zero, 0.0) == 0.0);
  Eigen::VectorXd rnd = Eigen::VectorXd::LinSpaced(16, 1.0, -0.7);
  CHECK(residual(R, 1.7, rnd, 0.0) > 1e-3);

  Eigen::VectorXd e1 = Eigen::VectorXd::Zero(8), e2 = Eigen::VectorXd::Zero(8);
  e1(0) = 1.0;
  e2(1) = 1.0;
  CHECK(count_zeros(e1) == 0);
  CHECK(count_zeros(e2) == 1);
  // zero counts of the lowest eigenfunctions form small nonnegative integers
  SpectrumResult s = solve_spectrum(R, 64);
  for (int j = 0; j < 3; ++j) {
    int z = count_zeros(s.eigenvectors[j]);
    CHECK(z >= 0);
    CHECK(z <= 6);
  }
}

TEST_CASE("cauchy transform: jump, decay, functional equation") {
  RationalDeg3 R = fixture(CaseLabel::B1);
  SpectrumResult s = solve_spectrum(R, 96);
  REQUIRE(!s.eigenvalues.empty());
  double lam = s.eigenvalues[0];
  const Eigen::VectorXd& c = s.eigenvectors[0];
  CauchyTransform phi = cauchy_transform(R, lam, c, s.const_values[0]);

  CHECK_THROWS_AS(phi(std::complex<double>(0.2, 0.0)), OnSlot);

  for (double t : {-0.6, -0.1, 0.35, 0.8}) {
    auto jump = phi({t, 1e-6}) - phi({t, -1e-6});
    auto expect = std::complex<double>(0.0, 2.0 * kPi) * eval_u(c, t);
    CHECK(std::abs(jump - expect) < 1e-4 * (1.0 + std::abs(expect)));
  }
  CHECK(std::abs(phi({1e9, 1e9}) - std::complex<double>(phi.const_star, 0.0)) < 1e-8);

  // Phi(x+i0) + Phi(x-i0) = delta * (Phi(z2) + Phi(z3)) on the slot
  double delta = 2.0 / (lam - 1.0);
  double tol = std::max(100.0 * s.residuals[0], 1e-7);
  for (int i = 1; i <= 10; ++i) {
    double x = -0.9 + 1.7 * i / 10.0;
    auto zs = secondary_preimages(R, x);
    auto lhs = phi.bank(x, +1) + phi.bank(x, -1);
    auto rhs = delta * (phi(zs[0]) + phi(zs[1]));
    CHECK(std::abs(lhs - rhs) < tol);
  }
}
