#include "ps3/layerpot.hpp"

#include <cmath>

#include "ps3/errors.hpp"
#include "ps3/spectral.hpp"  // rho

namespace ps3 {

namespace {
constexpr double kPi = 3.14159265358979323846;

double chebT(int n, double t) { return std::cos(n * std::acos(std::min(1.0, std::max(-1.0, t)))); }

double chebU(int n, double t) {  // U_n, n >= 0
  double th = std::acos(std::min(1.0, std::max(-1.0, t)));
  double s = std::sin(th);
  if (std::abs(s) < 1e-9) {  // endpoint limit U_n(+-1) = (n+1)(+-1)^n
    double sgn = t > 0 ? 1.0 : (n % 2 ? -1.0 : 1.0);
    return (n + 1) * sgn;
  }
  return std::sin((n + 1) * th) / s;
}

cplx clenshaw(const std::vector<cplx>& c, double t) {
  cplx b1 = 0, b2 = 0;
  for (int k = static_cast<int>(c.size()) - 1; k >= 1; --k) {
    cplx b0 = c[k] + 2.0 * t * b1 - b2;
    b2 = b1;
    b1 = b0;
  }
  return c.empty() ? cplx(0) : c[0] + t * b1 - b2;
}

std::vector<cplx> cheb_derivative(const std::vector<cplx>& c) {
  int n = static_cast<int>(c.size());
  std::vector<cplx> d(std::max(1, n - 1), cplx(0));
  if (n < 2) return d;
  // standard recurrence d_{k-1} = d_{k+1} + 2k c_k
  std::vector<cplx> dd(n + 1, cplx(0));
  for (int k = n - 1; k >= 1; --k) dd[k - 1] = dd[k + 1] + 2.0 * double(k) * c[k];
  dd[0] *= 0.5;
  d.assign(dd.begin(), dd.begin() + (n - 1));
  return d;
}
}  // namespace

cplx Contour::point(double t) const {
  if (closed) return center + radius * std::polar(1.0, t);
  return clenshaw(cheb, t);
}

cplx Contour::dpoint(double t) const {
  if (closed) return radius * std::polar(1.0, t) * cplx(0, 1);
  return clenshaw(cheb_derivative(cheb), t);
}

Contour make_segment(cplx a, cplx b) {
  Contour c;
  c.cheb = {(a + b) / 2.0, (b - a) / 2.0};
  return c;
}

Contour make_circle(cplx c0, double r) {
  Contour c;
  c.closed = true;
  c.center = c0;
  c.radius = r;
  return c;
}

Contour fit_arc(const std::vector<cplx>& samples, int degree) {
  int m = static_cast<int>(samples.size());
  if (m < degree + 1) degree = m - 1;
  Eigen::MatrixXd V(m, degree + 1);
  for (int i = 0; i < m; ++i) {
    double t = m == 1 ? 0.0 : -1.0 + 2.0 * i / (m - 1);
    for (int k = 0; k <= degree; ++k) V(i, k) = chebT(k, t);
  }
  Eigen::VectorXd re(m), im(m);
  for (int i = 0; i < m; ++i) {
    re[i] = samples[i].real();
    im[i] = samples[i].imag();
  }
  Eigen::VectorXd cr = V.colPivHouseholderQr().solve(re);
  Eigen::VectorXd ci = V.colPivHouseholderQr().solve(im);
  Contour c;
  c.cheb.resize(degree + 1);
  for (int k = 0; k <= degree; ++k) c.cheb[k] = cplx(cr[k], ci[k]);
  return c;
}

// ---- per-piece bookkeeping -------------------------------------------------

struct CondenserProblem::Block {
  int offset = 0, dof = 0;
  int ncol = 0;           // collocation points (oversampled, least squares)
  bool straight = false;  // exact closed forms available
  cplx mid, half;         // straight segments
  std::vector<double> colloc_t;
  std::vector<cplx> colloc_z, colloc_n;
  // quadrature tables
  std::vector<double> tq1;          // Gauss-Chebyshev, weight 1/sqrt
  std::vector<double> tq2, wq2;     // Gauss-Chebyshev, weight sqrt
  std::vector<double> thq;          // trapezoid on circles
  std::vector<cplx> zq1, dzq1, zq2, dzq2, zqc;
  std::vector<cplx> dcheb, ddcheb;  // arc derivative expansions
};

CondenserProblem::CondenserProblem(std::vector<BoundaryPiece> pieces, int order)
    : pieces_(std::move(pieces)), order_(order) {
  int offset = 0;
  for (auto& p : pieces_) {
    Block b;
    b.offset = offset;
    const Contour& c = p.contour;
    if (c.closed) {
      int K = order_;
      // odd mode counts keep the top cos/sin pair away from the Nyquist
      // degeneracy; oversampled collocation suppresses aliasing junk in
      // the top modes (the system is solved by least squares)
      b.dof = (p.kind == BCKind::dirichlet) ? 2 * K + 1 : 2 * K - 1;
      b.ncol = 2 * b.dof;
      for (int j = 0; j < b.ncol; ++j) {
        double th = 2 * kPi * (j + 0.3) / b.ncol;
        b.colloc_t.push_back(th);
        b.colloc_z.push_back(c.point(th));
        b.colloc_n.push_back(std::polar(1.0, th));
      }
      int Mq = 8 * order_ + 7;
      for (int k = 0; k < Mq; ++k) {
        b.thq.push_back(2 * kPi * k / Mq);
        b.zqc.push_back(c.point(b.thq.back()));
      }
    } else {
      b.dof = order_;
      b.ncol = 2 * b.dof;
      b.straight = c.cheb.size() == 2;
      if (b.straight) {
        b.mid = c.cheb[0];
        b.half = c.cheb[1];
      }
      b.dcheb = cheb_derivative(c.cheb);
      b.ddcheb = cheb_derivative(b.dcheb);
      for (int j = 0; j < b.ncol; ++j) {
        double s = std::cos(kPi * (j + 0.5) / b.ncol);
        b.colloc_t.push_back(s);
        b.colloc_z.push_back(c.point(s));
        cplx d = c.dpoint(s);
        b.colloc_n.push_back(cplx(0, 1) * d / std::abs(d));
      }
      int Mq = 8 * order_ + 7;
      for (int k = 0; k < Mq; ++k) {
        double t1 = std::cos(kPi * (k + 0.5) / Mq);
        b.tq1.push_back(t1);
        b.zq1.push_back(c.point(t1));
        b.dzq1.push_back(c.dpoint(t1));
        double t2 = std::cos(kPi * (k + 1.0) / (Mq + 1));
        double w2 = kPi / (Mq + 1) * std::pow(std::sin(kPi * (k + 1.0) / (Mq + 1)), 2);
        b.tq2.push_back(t2);
        b.wq2.push_back(w2);
        b.zq2.push_back(c.point(t2));
        b.dzq2.push_back(c.dpoint(t2));
      }
    }
    blocks_.push_back(std::move(b));
    offset += blocks_.back().dof;
  }
}

namespace {

// single layer on a straight segment, density T_n(t)/sqrt(1-t^2) dt:
// value and complex derivative anywhere (w = scaled coordinate)
double sl_segment_value(cplx mid, cplx half, int n, cplx z) {
  cplx w = (z - mid) / half;
  cplx r = rho(w);
  if (n == 0) return kPi * (std::log(std::abs(half)) - std::log(2.0) - std::log(std::abs(r)));
  return -(kPi / n) * std::real(std::pow(r, n));
}

cplx sl_segment_fprime(cplx mid, cplx half, int n, cplx z) {
  cplx w = (z - mid) / half;
  cplx r = rho(w);
  return kPi * std::pow(r, n) / (w - r) / half;
}

}  // namespace

CondenserProblem::~CondenserProblem() = default;
CondenserProblem::CondenserProblem(CondenserProblem&&) noexcept = default;
CondenserProblem& CondenserProblem::operator=(CondenserProblem&&) noexcept =
    default;

void CondenserProblem::solve() {
  int nb = static_cast<int>(blocks_.size());
  int total = 0, nrows = 1;
  for (const Block& b : blocks_) {
    total += b.dof;
    nrows += b.ncol;
  }
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(nrows, total + 1);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(nrows);

  int row = 0;
  for (int pi = 0; pi < nb; ++pi) {
    const Block& bp = blocks_[pi];
    const BoundaryPiece& pp = pieces_[pi];
    for (int j = 0; j < bp.ncol; ++j, ++row) {
      cplx x = bp.colloc_z[j];
      cplx nx = bp.colloc_n[j];
      double s = bp.colloc_t[j];
      for (int qi = 0; qi < nb; ++qi) {
        const Block& bq = blocks_[qi];
        const BoundaryPiece& pq = pieces_[qi];
        const Contour& cq = pq.contour;
        for (int n = 0; n < bq.dof; ++n) {
          double entry = 0.0;
          if (pp.kind == BCKind::dirichlet) {
            // value of layer (qi, n) at x; single-layer values are
            // continuous across their element, so the side is immaterial
            entry = qi == pi ? own_value_entry(qi, n, s, +1)
                             : layer_value_entry(qi, n, x);
          } else {
            // normal derivative of layer (qi, n) at x; the tangential
            // density jump of a double layer has no normal component
            cplx Fp = qi == pi ? own_fprime_entry(qi, n, s, +1)
                               : layer_fprime_entry(qi, n, x);
            entry = std::real(nx * Fp);
          }
          A(row, bq.offset + n) = entry;
        }
      }
      if (pp.kind == BCKind::dirichlet) {
        A(row, total) = 1.0;  // free constant
        rhs[row] = pp.value;
      }
    }
  }
  // zero total charge
  for (int qi = 0; qi < nb; ++qi) {
    if (pieces_[qi].kind != BCKind::dirichlet) continue;
    A(row, blocks_[qi].offset) = pieces_[qi].contour.closed ? 2 * kPi : kPi;
  }
  ++row;

  // balance the least-squares weights across rows of very different scales
  for (int i = 0; i < nrows; ++i) {
    double s = A.row(i).cwiseAbs().maxCoeff();
    if (s > 0) {
      A.row(i) /= s;
      rhs[i] /= s;
    }
  }
  Eigen::VectorXd sol = A.colPivHouseholderQr().solve(rhs);
  if (!sol.allFinite()) throw SolverFailure("condenser system is singular");
  coef_ = sol.head(total);
  constant_ = sol[total];
  solved_ = true;
}

// value of a single mode of piece qi at a point off that piece
double CondenserProblem::layer_value_entry(int qi, int n, cplx z) const {
  const Block& b = blocks_[qi];
  const BoundaryPiece& p = pieces_[qi];
  const Contour& c = p.contour;
  if (p.kind == BCKind::dirichlet) {
    if (c.closed) {
      int Mq = static_cast<int>(b.thq.size());
      int m = (n + 1) / 2;
      double acc = 0.0;
      for (int k = 0; k < Mq; ++k) {
        double g = n == 0 ? 1.0
                          : (n % 2 ? std::cos(m * b.thq[k]) : std::sin(m * b.thq[k]));
        acc += g * std::log(std::abs(z - b.zqc[k]));
      }
      return (2 * kPi / Mq) * acc;
    }
    if (b.straight) return sl_segment_value(b.mid, b.half, n, z);
    int Mq = static_cast<int>(b.tq1.size());
    double acc = 0.0;
    for (int k = 0; k < Mq; ++k)
      acc += chebT(n, b.tq1[k]) * std::log(std::abs(z - b.zq1[k]));
    return (kPi / Mq) * acc;
  }
  // double layer value
  if (c.closed) {
    cplx w = z - c.center;
    bool in = std::abs(w) < c.radius;
    int k = n / 2 + 1;
    cplx F = in ? std::pow(w / c.radius, k) : -std::pow(c.radius / w, k);
    cplx Fm = (n % 2 == 0) ? F * 0.5 : (in ? F : -F) / cplx(0, 2);
    return std::real(Fm);
  }
  int Mq = static_cast<int>(b.tq2.size());
  cplx acc = 0.0;
  for (int k = 0; k < Mq; ++k)
    acc += b.wq2[k] * chebU(n, b.tq2[k]) * b.dzq2[k] / (b.zq2[k] - z);
  return std::real(acc / (2 * kPi * cplx(0, 1)));
}

cplx CondenserProblem::layer_fprime_entry(int qi, int n, cplx z) const {
  const Block& b = blocks_[qi];
  const BoundaryPiece& p = pieces_[qi];
  const Contour& c = p.contour;
  if (p.kind == BCKind::dirichlet) {
    if (c.closed) {
      int Mq = static_cast<int>(b.thq.size());
      int m = (n + 1) / 2;
      cplx acc = 0.0;
      for (int k = 0; k < Mq; ++k) {
        double g = n == 0 ? 1.0
                          : (n % 2 ? std::cos(m * b.thq[k]) : std::sin(m * b.thq[k]));
        acc += g / (z - b.zqc[k]);
      }
      return (2 * kPi / Mq) * acc;
    }
    if (b.straight) return sl_segment_fprime(b.mid, b.half, n, z);
    int Mq = static_cast<int>(b.tq1.size());
    cplx acc = 0.0;
    for (int k = 0; k < Mq; ++k) acc += chebT(n, b.tq1[k]) / (z - b.zq1[k]);
    return (kPi / Mq) * acc;
  }
  if (c.closed) {
    cplx w = z - c.center;
    bool in = std::abs(w) < c.radius;
    int k = n / 2 + 1;
    cplx Fp = in ? double(k) * std::pow(w / c.radius, k - 1) / c.radius
                 : double(k) * std::pow(c.radius, k) / std::pow(w, k + 1);
    return (n % 2 == 0) ? Fp * 0.5 : (in ? Fp : -Fp) / cplx(0, 2);
  }
  int Mq = static_cast<int>(b.tq2.size());
  cplx acc = 0.0;
  for (int k = 0; k < Mq; ++k)
    acc += b.wq2[k] * chebU(n, b.tq2[k]) * b.dzq2[k] /
           ((b.zq2[k] - z) * (b.zq2[k] - z));
  return acc / (2 * kPi * cplx(0, 1));
}

// boundary limit of the value of mode (qi, n) on its own element at
// parameter s; side +1 is the limit from z(s) + i 0 z'(s)
double CondenserProblem::own_value_entry(int qi, int n, double s, int side) const {
  const Block& b = blocks_[qi];
  const BoundaryPiece& p = pieces_[qi];
  const Contour& c = p.contour;
  if (p.kind == BCKind::dirichlet) {
    // single-layer values are continuous across the element
    if (c.closed) {
      int m = (n + 1) / 2;
      return n == 0 ? 2 * kPi * std::log(c.radius)
                    : -(kPi / m) * (n % 2 ? std::cos(m * s) : std::sin(m * s));
    }
    if (b.straight) return sl_segment_value(b.mid, b.half, n, c.point(s));
    // split log: exact Chebyshev part + smooth remainder
    double entry = n == 0 ? -kPi * std::log(2.0) : -(kPi / n) * chebT(n, s);
    cplx x = c.point(s);
    int Mq = static_cast<int>(b.tq1.size());
    double acc = 0.0;
    for (int k = 0; k < Mq; ++k) {
      double dt = std::abs(s - b.tq1[k]);
      double g = dt < 1e-9 ? std::log(std::abs(c.dpoint(s)))
                           : std::log(std::abs(x - b.zq1[k]) / dt);
      acc += chebT(n, b.tq1[k]) * g;
    }
    return entry + (kPi / Mq) * acc;
  }
  // double layer
  if (c.closed) {
    // one-sided closed form on the circle, taken from the domain side
    int k = n / 2 + 1;
    bool in = p.domain_inside;
    cplx F = in ? std::polar(1.0, k * s) : -std::polar(1.0, -k * s);
    cplx Fm = (n % 2 == 0) ? F * 0.5 : (in ? F : -F) / cplx(0, 2);
    return std::real(Fm);
  }
  // principal value by splitting off the flat-segment Hilbert kernel, whose
  // action on sqrt(1-t^2) U_n is -pi T_{n+1}, plus half the density jump
  cplx zs = c.point(s), ds = c.dpoint(s);
  int Mq = static_cast<int>(b.tq1.size());
  cplx acc = -kPi * chebT(n + 1, s);
  for (int k = 0; k < Mq; ++k) {
    double t = b.tq1[k];
    cplx rker;
    if (std::abs(t - s) < 1e-9)
      rker = clenshaw(b.ddcheb, s) / (2.0 * ds);
    else
      rker = b.dzq1[k] / (b.zq1[k] - zs) - 1.0 / (t - s);
    acc += (kPi / Mq) * (1 - t * t) * chebU(n, t) * rker;
  }
  double pv = std::real(acc / (2 * kPi * cplx(0, 1)));
  double mu = std::sqrt(std::max(0.0, 1 - s * s)) * chebU(n, s);
  return pv + side * 0.5 * mu;
}

// boundary limit of F' of mode (qi, n) on its own element; diverges at the
// open-arc endpoints s = +-1
cplx CondenserProblem::own_fprime_entry(int qi, int n, double s, int side) const {
  const Block& b = blocks_[qi];
  const BoundaryPiece& p = pieces_[qi];
  const Contour& c = p.contour;
  if (p.kind == BCKind::dirichlet) {
    // single layer
    if (c.closed) {
      bool in = p.domain_inside;
      cplx w = c.radius * std::polar(1.0, s);  // z - center
      if (n == 0) return in ? cplx(0) : 2.0 * kPi / w;
      int m = (n + 1) / 2;
      double R = c.radius;
      cplx base = in ? std::pow(w / R, m - 1) / R : std::pow(R, m) / std::pow(w, m + 1);
      if (n % 2) return (in ? -kPi : kPi) * base;  // cos modes
      return cplx(0, kPi) * base;                  // sin modes
    }
    cplx zs = c.point(s), ds = c.dpoint(s);
    cplx acc = n == 0 ? cplx(0) : -kPi * chebU(n - 1, s) / ds;
    int Mq = static_cast<int>(b.tq1.size());
    for (int k = 0; k < Mq; ++k) {
      double t = b.tq1[k];
      cplx rker;
      if (std::abs(t - s) < 1e-9)
        rker = clenshaw(b.ddcheb, s) / (2.0 * ds * ds);
      else
        rker = 1.0 / (zs - b.zq1[k]) - 1.0 / (ds * (s - t));
      acc += (kPi / Mq) * chebT(n, t) * rker;
    }
    cplx jump = cplx(0, kPi) * chebT(n, s) / (std::sqrt(1 - s * s) * ds);
    return acc - double(side) * jump;
  }
  // double layer
  if (c.closed) {
    int k = n / 2 + 1;
    bool in = p.domain_inside;
    cplx w = c.radius * std::polar(1.0, s);
    cplx Fp = in ? double(k) * std::pow(w / c.radius, k - 1) / c.radius
                 : double(k) * std::pow(c.radius, k) / std::pow(w, k + 1);
    return (n % 2 == 0) ? Fp * 0.5 : (in ? Fp : -Fp) / cplx(0, 2);
  }
  // hypersingular part via integration by parts: Cauchy integral of
  // mu' = -(n+1) T_{n+1}/sqrt plus regular kernel, then the tangential jump
  int nn = n + 1;  // density sqrt(1-t^2) U_n
  cplx zs = c.point(s), ds = c.dpoint(s);
  cplx pv = -double(nn) * kPi * chebU(nn - 1, s) / ds;
  int Mq = static_cast<int>(b.tq1.size());
  cplx acc = 0.0;
  for (int k = 0; k < Mq; ++k) {
    double t = b.tq1[k];
    cplx kreg;
    if (std::abs(t - s) < 1e-9) {
      cplx d2 = clenshaw(b.ddcheb, s);
      kreg = -d2 / (2.0 * ds * ds);
    } else {
      kreg = 1.0 / (b.zq1[k] - zs) - 1.0 / (ds * (t - s));
    }
    acc += -double(nn) * chebT(nn, t) * kreg;
  }
  cplx Fp = (pv + (kPi / Mq) * acc) / (2 * kPi * cplx(0, 1));
  double mup = -double(nn) * chebT(nn, s) / std::sqrt(1 - s * s);
  return Fp + double(side) * mup / (2.0 * ds);
}

double CondenserProblem::bank_value(int piece, double t, int side) const {
  if (!solved_) throw SolverFailure("solve() must run first");
  cplx z = pieces_[piece].contour.point(t);
  double u = constant_;
  for (size_t i = 0; i < blocks_.size(); ++i)
    for (int n = 0; n < blocks_[i].dof; ++n)
      u += coef_[blocks_[i].offset + n] *
           (static_cast<int>(i) == piece ? own_value_entry(piece, n, t, side)
                                         : layer_value_entry(static_cast<int>(i), n, z));
  return u;
}

cplx CondenserProblem::bank_fprime(int piece, double t, int side) const {
  if (!solved_) throw SolverFailure("solve() must run first");
  cplx z = pieces_[piece].contour.point(t);
  cplx f = 0.0;
  for (size_t i = 0; i < blocks_.size(); ++i)
    for (int n = 0; n < blocks_[i].dof; ++n)
      f += coef_[blocks_[i].offset + n] *
           (static_cast<int>(i) == piece ? own_fprime_entry(piece, n, t, side)
                                         : layer_fprime_entry(static_cast<int>(i), n, z));
  return f;
}

double CondenserProblem::charge(int piece) const {
  if (!solved_) throw SolverFailure("solve() must run first");
  const BoundaryPiece& p = pieces_[piece];
  if (p.kind != BCKind::dirichlet) return 0.0;
  double c0 = coef_[blocks_[piece].offset];
  return p.contour.closed ? 2 * kPi * c0 : kPi * c0;
}

double CondenserProblem::energy() const {
  double q1 = 0.0;
  for (size_t i = 0; i < pieces_.size(); ++i)
    if (pieces_[i].kind == BCKind::dirichlet && pieces_[i].value > 0.5)
      q1 += charge(static_cast<int>(i));
  double e = -2 * kPi * q1;
  if (!(e > 0)) throw SolverFailure("non-positive condenser energy");
  return e;
}

double CondenserProblem::potential(cplx z) const {
  if (!solved_) throw SolverFailure("solve() must run first");
  double u = constant_;
  for (size_t i = 0; i < blocks_.size(); ++i)
    for (int n = 0; n < blocks_[i].dof; ++n)
      u += coef_[blocks_[i].offset + n] *
           layer_value_entry(static_cast<int>(i), n, z);
  return u;
}

cplx CondenserProblem::conj_gradient(cplx z) const {
  if (!solved_) throw SolverFailure("solve() must run first");
  cplx f = 0.0;
  for (size_t i = 0; i < blocks_.size(); ++i)
    for (int n = 0; n < blocks_[i].dof; ++n)
      f += coef_[blocks_[i].offset + n] *
           layer_fprime_entry(static_cast<int>(i), n, z);
  return f;
}

double extremal_distance(std::vector<BoundaryPiece> pieces, int order) {
  CondenserProblem prob(std::move(pieces), order);
  prob.solve();
  return 1.0 / prob.energy();
}

}  // namespace ps3
