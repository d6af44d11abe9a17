#include "ps3/recon.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "ps3/errors.hpp"
#include "ps3/layerpot.hpp"
#include "ps3/membrane.hpp"
#include "ps3/moduli.hpp"
#include "ps3/monodromy.hpp"
#include "ps3/spectral.hpp"

namespace ps3 {

namespace {

constexpr double kPi = 3.14159265358979323846;

double chebT(int n, double t) {
  return std::cos(n * std::acos(std::min(1.0, std::max(-1.0, t))));
}

cplx mobius_deriv(const Mobius& m, cplx z) {
  cplx den = m.c * z + m.d;
  return (m.a * m.d - m.b * m.c) / (den * den);
}

// evaluation point for potentials along the real axis; the slot sent to
// infinity by the normalizing Moebius map is harmless there (the potential
// is regular at infinity thanks to the zero-total-charge constraint)
cplx zcap(double z) {
  return at_infinity(z) ? cplx(1e9, 0) : cplx(z, 0);
}

int color_rank(Color c) { return static_cast<int>(c); }

const Slot& slot_of(const RealSlitPants& p, Color c) {
  for (const Slot& s : p.slots)
    if (s.color == c) return s;
  throw InvalidInput(std::string("pants has no ") + to_string(c) + " slot");
}

// midpoint of the widest gap between the slots of the pants.  The source
// condensers send this point to infinity: every slot then maps to a finite
// segment and, unlike a pole placed inside a slot, it stays away from all
// the points where we later evaluate the field (the least-squares charges
// do not balance exactly, so the numerical field degrades near infinity)
double gap_point(const RealSlitPants& pants) {
  std::vector<std::pair<double, double>> iv;  // start angle, width
  for (const Slot& s : pants.slots) {
    double a = circle_angle(s.arc.lo);
    double w = circle_angle(s.arc.hi) - a;
    if (w <= 0) w += 2 * kPi;
    iv.push_back({a, w});
  }
  std::sort(iv.begin(), iv.end());
  double best_mid = 0, best_gap = -1;
  for (size_t i = 0; i < iv.size(); ++i) {
    double end = iv[i].first + iv[i].second;
    double next = iv[(i + 1) % iv.size()].first + (i + 1 == iv.size() ? 2 * kPi : 0);
    double gap = next - end;
    if (gap > best_gap) {
      best_gap = gap;
      best_mid = end + gap / 2;
    }
  }
  if (best_gap <= 0) throw InvalidInput("overlapping pants slots");
  return circle_point(best_mid);
}

// ---- source side: two-segment condensers with the insulated slot dropped.
// All slots are real, so the field of two real Dirichlet segments is
// conjugation-symmetric and the Neumann condition holds on the rest of the
// real axis automatically; the insulated slot needs no element at all.
struct SourceField {
  RealMobius M;  // sends a gap point between the slots to infinity
  CondenserProblem prob;

  double level(double y) const { return prob.potential(zcap(M(y))); }
  double level_deriv(double y) const {
    return std::real(prob.conj_gradient(zcap(M(y)))) * M.deriv(y);
  }
};

SourceField make_source(const RealSlitPants& pants, Color insulated,
                        int order, double pole) {
  RealMobius M = at_infinity(pole) ? RealMobius{1, 0, 0, 1}
                                   : RealMobius{0, -1, 1, -pole};
  std::vector<Color> diri;
  for (const Slot& s : pants.slots)
    if (s.color != insulated) diri.push_back(s.color);
  std::sort(diri.begin(), diri.end(),
            [](Color a, Color b) { return color_rank(a) < color_rank(b); });
  std::vector<BoundaryPiece> pieces;
  for (size_t i = 0; i < diri.size(); ++i) {
    const Arc& arc = slot_of(pants, diri[i]).arc;
    double a = M(arc.lo), b = M(arc.hi);
    if (at_infinity(a) || at_infinity(b))
      throw MapDegenerate("slot endpoint landed at infinity");
    BoundaryPiece bp;
    bp.contour = make_segment(a, b);
    bp.value = static_cast<double>(i);
    pieces.push_back(bp);
  }
  SourceField sf{M, CondenserProblem(std::move(pieces), order)};
  sf.prob.solve();
  return sf;
}

// ---- target side: the one-chart membrane in zeta coordinates ------------
struct TargetField {
  std::vector<Color> piece_color;  // per piece: outer, inner, slit
  int insulated = -1;              // piece index
  CondenserProblem prob;
};

TargetField make_target(const SurfaceAtlas& atlas, Color insulated,
                        int order) {
  const Chart& ch = atlas.charts[0];
  std::vector<BoundaryPiece> pieces;
  std::vector<Color> color;
  {
    BoundaryPiece outer;
    outer.contour = make_circle(0.0, 1.0);
    outer.domain_inside = true;
    pieces.push_back(outer);
    color.push_back(ch.outer_color);
    BoundaryPiece inner;
    inner.contour = make_circle(0.0, ch.inner);
    inner.domain_inside = false;
    pieces.push_back(inner);
    color.push_back(ch.inner_color);
    BoundaryPiece arc;
    arc.contour = fit_arc(atlas.slits[0].zeta);
    pieces.push_back(arc);
    color.push_back(atlas.slits[0].color);
  }
  std::vector<std::pair<Color, int>> diri;
  int ins = -1;
  for (int i = 0; i < 3; ++i) {
    if (color[i] == insulated) {
      pieces[i].kind = BCKind::neumann;
      ins = i;
    } else {
      diri.push_back({color[i], i});
    }
  }
  if (ins < 0 || diri.size() != 2)
    throw InvalidInput("membrane ovals do not carry three distinct colors");
  std::sort(diri.begin(), diri.end(), [](auto& a, auto& b) {
    return color_rank(a.first) < color_rank(b.first);
  });
  pieces[diri[0].second].value = 0.0;
  pieces[diri[1].second].value = 1.0;
  TargetField tf{color, ins, CondenserProblem(std::move(pieces), order)};
  tf.prob.solve();
  return tf;
}

// generic bisection of a monotone function on [0, 1]
template <typename F>
double invert01(F&& f, double lvl, int iters = 52) {
  double f0 = f(0.0) - lvl, f1 = f(1.0) - lvl;
  if (f0 == 0) return 0.0;
  if (f1 == 0) return 1.0;
  if ((f0 > 0) == (f1 > 0)) {
    // clamp: levels may stick out by solver noise near the turning points
    return std::abs(f0) < std::abs(f1) ? 0.0 : 1.0;
  }
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < iters; ++it) {
    double mi = 0.5 * (lo + hi);
    double fm = f(mi) - lvl;
    if (fm == 0) return mi;
    if ((fm > 0) == (f0 > 0))
      lo = mi;
    else
      hi = mi;
  }
  return 0.5 * (lo + hi);
}

// golden-section refinement of an extremum bracketed by [lo, hi]
template <typename F>
double refine_extremum(F&& f, double lo, double hi, bool maximize) {
  const double g = 0.61803398874989484820;
  double a = lo, b = hi;
  double x1 = b - g * (b - a), x2 = a + g * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < 80 && b - a > 1e-13; ++it) {
    bool left = maximize ? (f1 > f2) : (f1 < f2);
    if (left) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - g * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + g * (b - a);
      f2 = f(x2);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

BoundaryMap conformal_map(const RealSlitPants& pants, const SurfaceAtlas& atlas,
                          const ReconOptions& opt) {
  validate(pants);
  // shape requirements
  if (atlas.charts.size() != 1 || !atlas.seams.empty() || atlas.quotient_Xi ||
      atlas.slits.size() != 1)
    throw InvalidInput(
        "conformal_map supports planar one-chart membranes with one slit");
  for (Color c : {Color::red, Color::green, Color::blue}) slot_of(pants, c);
  const Arc& red = slot_of(pants, Color::red).arc;
  if (std::abs(red.lo + 1) > 1e-9 || std::abs(red.hi - 1) > 1e-9)
    throw InvalidInput("the red slot of the source must be [-1,1]");
  const Chart& ch = atlas.charts[0];
  if (ch.outer_color != Color::red)
    throw InvalidInput("the covered circle of the membrane must be red");
  Color cs = atlas.slits[0].color;
  if (cs == Color::red)
    throw InvalidInput("a red membrane slit is not supported");

  if (opt.moduli_check) {
    ModuliTriple ts = moduli_of_slit_pants(pants, opt.order);
    ModuliTriple tt = moduli_of_membrane(atlas, opt.order);
    double worst = 0;
    for (int i = 0; i < 3; ++i) {
      double ds = ts.as_array()[i], dt = tt.as_array()[i];
      worst = std::max(worst, std::abs(ds - dt) / std::max(1e-12, ds));
    }
    if (worst > opt.moduli_tol)
      throw ModuliMismatch("moduli differ by " + std::to_string(worst) +
                           " (relative), beyond " +
                           std::to_string(opt.moduli_tol));
  }

  // ---- bank correspondence: insulate red on both sides ------------------
  double pole = gap_point(pants);
  SourceField s1 = make_source(pants, Color::red, opt.order, pole);
  TargetField t1 = make_target(atlas, Color::red, opt.order);
  int rp = 0;  // the red piece: the covered outer circle
  auto ut = [&](double psi) { return t1.prob.bank_value(rp, psi); };

  // the two turning points of the level along the covered circle
  const int NG = 1024;
  std::vector<double> ug(NG);
  for (int i = 0; i < NG; ++i) ug[i] = ut(2 * kPi * i / NG);
  std::vector<double> psis;
  std::vector<bool> ismax;
  for (int i = 0; i < NG; ++i) {
    double um = ug[(i + NG - 1) % NG], u0 = ug[i], up = ug[(i + 1) % NG];
    if ((u0 > um && u0 >= up) || (u0 < um && u0 <= up)) {
      bool mx = u0 > um;
      double lo = 2 * kPi * (i - 1) / NG, hi = 2 * kPi * (i + 1) / NG;
      psis.push_back(refine_extremum(ut, lo, hi, mx));
      ismax.push_back(mx);
    }
  }
  if (psis.size() != 2)
    throw MapDegenerate("expected exactly two turning points on the circle, got " +
                        std::to_string(psis.size()));

  // pair the pants junctions y = -1, +1 with the turning points by level
  double Lm = s1.level(-1.0), Lp = s1.level(1.0);
  double l0 = ut(psis[0]), l1 = ut(psis[1]);
  double span = std::abs(l0 - l1);
  bool first_to_minus = std::abs(l0 - Lm) + std::abs(l1 - Lp) <
                        std::abs(l0 - Lp) + std::abs(l1 - Lm);
  double psi_a = first_to_minus ? psis[0] : psis[1];  // junction y = -1
  double psi_b = first_to_minus ? psis[1] : psis[0];  // junction y = +1
  double La = ut(psi_a), Lb = ut(psi_b);
  if (std::abs(La - Lm) > 0.05 * span || std::abs(Lb - Lp) > 0.05 * span)
    throw ModuliMismatch("turning-point levels do not match the junctions");

  // the upper bank maps onto the counterclockwise arc psi_a -> psi_b
  // (both traversals keep the domain on the left), the lower bank onto the
  // complementary arc
  double Wab = std::fmod(psi_b - psi_a + 4 * kPi, 2 * kPi);
  if (Wab < 1e-12 || 2 * kPi - Wab < 1e-12)
    throw MapDegenerate("degenerate bank arcs");

  BoundaryMap bm;
  bm.fashion = atlas.spec.fashion;
  bm.m = ch.sheets;
  bm.lambda = atlas.spec.lambda;
  bm.mu_inv = atlas.mu_inv;
  bm.r = atlas.r;
  {
    const Arc& blue = slot_of(pants, Color::blue).arc;
    const Arc& green = slot_of(pants, Color::green).arc;
    bm.a = {blue.lo, blue.hi, green.lo, green.hi};
  }
  int S = opt.samples + (opt.samples % 2);  // even: keeps y = 0 off the grid
  bm.y = chebyshev_nodes(S);
  std::sort(bm.y.begin(), bm.y.end());
  bm.p_plus.resize(S);
  bm.p_minus.resize(S);
  bm.dp_plus.resize(S);
  bm.dp_minus.resize(S);

  Mobius from_xi = ch.xi.to_xi.inverse();
  auto fill_bank = [&](bool upper) {
    // counterclockwise arc and the level direction along it
    double start = upper ? psi_a : psi_b;
    double width = upper ? Wab : 2 * kPi - Wab;
    for (int k = 0; k < S; ++k) {
      double y = bm.y[k];
      double lvl = s1.level(y);
      double tau = invert01(
          [&](double t) { return ut(start + width * t); }, lvl);
      double psi = start + width * tau;
      cplx zeta = std::polar(1.0, psi);
      cplx xi = std::pow(zeta, ch.sheets);
      cplx p = from_xi(xi);
      // dp/dy through the level parametrization
      double dut = std::real(t1.prob.bank_fprime(rp, psi) * cplx(0, 1) * zeta);
      double dus = s1.level_deriv(y);
      if (dut == 0) throw MapDegenerate("level derivative vanishing on the circle");
      cplx dpdpsi = mobius_deriv(from_xi, xi) * cplx(0, 1) *
                    double(ch.sheets) * xi;
      cplx dp = dpdpsi * (dus / dut);
      (upper ? bm.p_plus : bm.p_minus)[k] = p;
      (upper ? bm.dp_plus : bm.dp_minus)[k] = dp;
    }
  };
  fill_bank(true);
  fill_bank(false);

  // ---- boundary critical points: insulate the slit color ----------------
  SourceField s2 = make_source(pants, cs, opt.order, pole);
  TargetField t2 = make_target(atlas, cs, opt.order);
  double tipA = t2.prob.bank_value(t2.insulated, 1.0);
  double tipB = t2.prob.bank_value(t2.insulated, -1.0);
  const Arc& csarc = slot_of(pants, cs).arc;
  double phi_lo = circle_angle(csarc.lo), phi_hi = circle_angle(csarc.hi);
  double dphi = phi_hi - phi_lo;
  if (dphi <= 0) dphi += 2 * kPi;
  auto yof = [&](double tau) { return circle_point(phi_lo + tau * dphi); };
  auto lvl2 = [&](double tau) { return s2.level(yof(tau)); };
  double yA = yof(invert01(lvl2, tipA));
  double yB = yof(invert01(lvl2, tipB));
  if (at_infinity(yA) || at_infinity(yB))
    throw MapDegenerate("boundary critical point at infinity");
  bm.y1 = cplx(std::min(yA, yB), 0);
  bm.y2 = cplx(std::max(yA, yB), 0);
  return bm;
}

ReconstructedU reconstruct_u(const BoundaryMap& bm) {
  size_t n = bm.y.size();
  if (n < 8 || bm.p_plus.size() != n || bm.p_minus.size() != n ||
      bm.dp_plus.size() != n || bm.dp_minus.size() != n)
    throw InvalidInput("boundary map is incomplete");
  auto W2 = [&](double y) {
    double v = y * y - 1.0;
    for (double a : bm.a)
      if (std::isfinite(a)) v *= (y - a);
    return v;
  };
  bool neg0 = W2(bm.y[0]) < 0;
  // the membrane projection restricted to the banks gives one of the two
  // projective structures; the other one is recovered through the jump map
  // chi(D) of the red slot, which swaps the structures across it
  Mobius chiD = chi_D(bm.lambda);
  double mu = mu_of_lambda(bm.lambda);
  std::vector<cplx> u(n);
  cplx prev;
  for (size_t k = 0; k < n; ++k) {
    double y = bm.y[k];
    double w2 = W2(y);
    if ((w2 < 0) != neg0 || w2 == 0)
      throw BranchFailure("w^2 changes sign inside the red slot");
    cplx w = std::sqrt(cplx(w2, 0));
    cplx A = bm.p_plus[k], dA = bm.dp_plus[k];
    cplx B = chiD(bm.p_minus[k]);
    cplx dB = mobius_deriv(chiD, bm.p_minus[k]) * bm.dp_minus[k];
    cplx q = (y - bm.y1) * (y - bm.y2) / (dA * dB);
    cplx s = std::sqrt(q);
    if (k > 0 && std::real(std::conj(prev) * s) < 0) s = -s;
    prev = s;
    u[k] = s * (A * B - mu * (A + B) + 1.0) / w;
  }
  // the branch choices leave one global phase; u^2 is phase-coherent, so
  // rotating sum u^2 onto the positive axis recovers +-(real samples)
  cplx ssq = 0;
  for (const cplx& v : u) ssq += v * v;
  cplx rot = std::polar(1.0, -0.5 * std::arg(ssq));
  double maxre = 0, maxim = 0;
  for (cplx& v : u) {
    v *= rot;
    maxre = std::max(maxre, std::abs(std::real(v)));
    maxim = std::max(maxim, std::abs(std::imag(v)));
  }
  if (maxre == 0) throw MapDegenerate("reconstruction vanished identically");
  ReconstructedU rec;
  rec.y = bm.y;
  rec.imag_residual = maxim / maxre;
  rec.u.resize(n);
  for (size_t k = 0; k < n; ++k) rec.u[k] = std::real(u[k]) / maxre;
  int changes = 0, last = 0;
  for (size_t k = 0; k < n; ++k) {
    if (std::abs(rec.u[k]) < 1e-9) continue;
    int sg = rec.u[k] > 0 ? 1 : -1;
    if (last != 0 && sg != last) ++changes;
    last = sg;
  }
  rec.zero_count = changes + 2;  // the endpoint zeros of the sqrt weight
  return rec;
}

VerifyReport verify_pair(const RationalDeg3& R, double lambda,
                         const ReconstructedU& rec, int N) {
  int S = static_cast<int>(rec.y.size());
  if (S < 16) throw InvalidInput("too few reconstruction samples");
  // Chebyshev fit of the weight-stripped profile g(y) = u(y)/sqrt(1-y^2)
  int J = std::min(S / 2, 120);
  Eigen::MatrixXd V(S, J);
  Eigen::VectorXd gv(S);
  for (int i = 0; i < S; ++i) {
    double y = rec.y[i];
    gv[i] = rec.u[i] / std::sqrt(1 - y * y);
    for (int j = 0; j < J; ++j) V(i, j) = chebT(j, y);
  }
  Eigen::VectorXd gc = V.colPivHouseholderQr().solve(gv);
  auto g = [&](double y) {
    double acc = 0;
    for (int j = 0; j < J; ++j) acc += gc[j] * chebT(j, y);
    return acc;
  };
  // transplant: the reconstruction lives on the red slot of the y-sphere,
  // the integral-equation unknown is u(x) = utilde(R(x)) on x in [-1,1]
  int M = 8 * N;
  Eigen::VectorXd c = Eigen::VectorXd::Zero(N);
  double umax = 0;
  for (int i = 0; i < M; ++i) {
    double th = kPi * (i + 1.0) / (M + 1);
    double x = std::cos(th);
    double w = kPi / (M + 1) * std::sin(th) * std::sin(th);
    double Rx = std::min(1.0, std::max(-1.0, R(x)));
    double f = std::sqrt(std::max(0.0, (1 - Rx * Rx) / (1 - x * x))) * g(Rx);
    umax = std::max(umax, std::abs(f) * std::sin(th));
    for (int nn = 1; nn <= N; ++nn)
      c[nn - 1] += (2.0 / kPi) * w * f * std::sin(nn * th) / std::sin(th);
  }
  Eigen::MatrixXd H = hilbert_block(N), K = kernel_block(R, N);
  Eigen::VectorXd rv = lambda * (H * c) - K * c;
  double cval = rv.mean();
  VerifyReport rep;
  rep.residual = residual(R, lambda, c, cval);
  rep.residual_rel = rep.residual / (kPi * std::max(1e-300, umax));
  rep.zero_count = count_zeros(c) + 2;
  SpectrumResult sp = solve_spectrum(R, N);
  rep.lambda_nearest = 0;
  double best = kInf;
  for (double ev : sp.eigenvalues) {
    if (std::abs(ev - lambda) < best) {
      best = std::abs(ev - lambda);
      rep.lambda_nearest = ev;
    }
  }
  rep.lambda_rel_err = best / std::max(1e-300, std::abs(lambda));
  return rep;
}

}  // namespace ps3
