#include "ps3/moduli.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "ps3/errors.hpp"
#include "ps3/layerpot.hpp"

namespace ps3 {

namespace {

int color_rank(Color c) {
  switch (c) {
    case Color::red: return 0;
    case Color::green: return 1;
    case Color::blue: return 2;
  }
  return 3;
}

// sort three ovals by color (red < green < blue); a same-color pair is
// ordered so that the one at smaller extremal distance from the uniquely
// colored oval comes first
ModuliTriple assemble_triple(const std::array<Color, 3>& col,
                             const std::function<double(int, int)>& dist) {
  double d[3][3] = {};
  d[0][1] = d[1][0] = dist(0, 1);
  d[1][2] = d[2][1] = dist(1, 2);
  d[2][0] = d[0][2] = dist(2, 0);
  std::array<int, 3> idx = {0, 1, 2};
  std::sort(idx.begin(), idx.end(),
            [&](int a, int b) { return color_rank(col[a]) < color_rank(col[b]); });
  for (int i = 0; i < 3; ++i) {
    int a = idx[i], b = idx[(i + 1) % 3], u = idx[(i + 2) % 3];
    if (col[a] == col[b] && d[u][b] < d[u][a]) std::swap(idx[i], idx[(i + 1) % 3]);
  }
  return {d[idx[0]][idx[1]], d[idx[1]][idx[2]], d[idx[2]][idx[0]]};
}

}  // namespace

ModuliTriple moduli_of_slit_pants(const RealSlitPants& p, int order) {
  validate(p);
  auto dist = [&](int i, int j) {
    int k = 3 - i - j;
    // send the interior of the insulating slot to infinity: the condenser
    // field is conjugation-symmetric, so the Neumann condition on the real
    // axis away from the two Dirichlet segments holds automatically
    double mid = p.slots[k].arc.midpoint();
    RealMobius M =
        at_infinity(mid) ? RealMobius{1, 0, 0, 1} : RealMobius{0, -1, 1, -mid};
    auto seg = [&](int q) {
      double a = M(p.slots[q].arc.lo), b = M(p.slots[q].arc.hi);
      if (at_infinity(a) || at_infinity(b))
        throw SolverFailure("slot endpoint landed at infinity");
      return make_segment(a, b);
    };
    std::vector<BoundaryPiece> pieces(2);
    pieces[0].contour = seg(i);
    pieces[0].value = 0.0;
    pieces[1].contour = seg(j);
    pieces[1].value = 1.0;
    return extremal_distance(std::move(pieces), order);
  };
  return assemble_triple(
      {p.slots[0].color, p.slots[1].color, p.slots[2].color}, dist);
}

ModuliTriple moduli_of_membrane(const SurfaceAtlas& a, int order) {
  if (a.charts.size() != 1 || !a.seams.empty())
    throw SolverFailure(
        "moduli of grafted (multi-chart) membranes are not supported");
  const Chart& ch = a.charts[0];

  // pieces in zeta coordinates: outer unit circle, inner circle, slit arcs
  std::vector<BoundaryPiece> proto;
  {
    BoundaryPiece outer;
    outer.contour = make_circle(0.0, 1.0);
    outer.domain_inside = true;
    proto.push_back(outer);
    BoundaryPiece inner;
    inner.contour = make_circle(0.0, ch.inner);
    inner.domain_inside = false;
    proto.push_back(inner);
    for (const Slit& sl : a.slits) {
      BoundaryPiece arc;
      arc.contour = fit_arc(sl.zeta);
      proto.push_back(arc);
    }
  }
  // which pieces belong to which oval
  std::vector<std::vector<int>> members(a.ovals.size());
  for (size_t oi = 0; oi < a.ovals.size(); ++oi) {
    const OvalRef& o = a.ovals[oi];
    if (o.kind == "outer")
      members[oi] = a.quotient_Xi ? std::vector<int>{0, 1} : std::vector<int>{0};
    else if (o.kind == "inner")
      members[oi] = {1};
    else if (o.kind == "slit")
      members[oi] = {2 + o.slit};
    else
      throw SolverFailure("composite ovals need a grafted solver");
  }

  auto dist = [&](int i, int j) {
    int k = 3 - i - j;
    std::vector<BoundaryPiece> pieces = proto;
    for (int q : members[i]) {
      pieces[q].kind = BCKind::dirichlet;
      pieces[q].value = 0.0;
    }
    for (int q : members[j]) {
      pieces[q].kind = BCKind::dirichlet;
      pieces[q].value = 1.0;
    }
    for (int q : members[k]) pieces[q].kind = BCKind::neumann;
    CondenserProblem prob(std::move(pieces), order);
    prob.solve();
    double e = prob.energy();
    // Xi-quotients are solved upstairs with symmetric data: the unfolded
    // energy is twice the quotient energy
    if (a.quotient_Xi) e /= 2.0;
    return 1.0 / e;
  };
  return assemble_triple(
      {a.ovals[0].color, a.ovals[1].color, a.ovals[2].color}, dist);
}

// ---- matcher ---------------------------------------------------------------

namespace {

using Vec3 = Eigen::Vector3d;

double lambda_upper(Fashion f) {
  return (f == Fashion::PB21 || f == Fashion::PB22 || f == Fashion::PB23) ? 3.0
                                                                          : 2.0;
}

double pb1_bound(double lambda) {
  double mu = mu_of_lambda(lambda);
  return 1.0 / mu + std::sqrt(1.0 / (mu * mu) - 1.0);
}

MembraneSpec make_spec(Fashion f, int m1, int m2, const Vec3& x) {
  MembraneSpec s;
  s.fashion = f;
  s.m1 = m1;
  s.m2 = m2;
  s.lambda = x[0];
  s.h1 = x[1];
  s.h2 = x[2];
  return s;
}

// pull an iterate back into the admissible box (best effort; leftover
// violations surface as a failed damping step)
void project(Fashion f, Vec3& x) {
  double up = lambda_upper(f);
  x[0] = std::min(std::max(x[0], 1.0 + 1e-3), up - 1e-3);
  switch (f) {
    case Fashion::PB1: {
      double b = pb1_bound(x[0]);
      x[1] = std::max(x[1], b + 1e-4);
      x[2] = std::max(x[2], x[1] + 1e-4);
      break;
    }
    case Fashion::PA2:
    case Fashion::PA3:
      x[1] = std::min(std::max(x[1], 1e-3), 50.0);
      x[2] = std::max({x[2], x[1] + 1e-4, 1.0 / x[1]});
      break;
    case Fashion::PB21:
      x[1] = std::max(x[1], 1e-4);
      x[2] = std::max(x[2], 1e-4);
      break;
    case Fashion::PB22:
    case Fashion::PB23:
      x[1] = std::max(x[1], 1e-4);
      x[2] = std::max(x[2], 1e-4);
      break;
    default:
      break;
  }
}

}  // namespace

MatchResult match(const ModuliTriple& target, Fashion fashion, int m1, int m2,
                  double tol, int order) {
  const std::array<double, 3> tgt = target.as_array();
  auto residual_vec = [&](const Vec3& x, Vec3& out) -> bool {
    MembraneSpec s = make_spec(fashion, m1, m2, x);
    try {
      ModuliTriple t = moduli_of_membrane(build_membrane(s), order);
      std::array<double, 3> v = t.as_array();
      for (int i = 0; i < 3; ++i) out[i] = v[i] - tgt[i];
      return true;
    } catch (const SolverFailure&) {
      throw;  // structural problem (grafted fashion): no start can work
    } catch (const Error&) {
      return false;  // inadmissible parameters for this iterate
    }
  };

  // multistart grid over the admissible box
  std::vector<Vec3> starts;
  double up = lambda_upper(fashion);
  const double uu[5] = {0.08, 0.25, 0.6, 1.2, 2.2};
  const double fr[5] = {0.15, 0.35, 0.55, 0.75, 0.92};
  for (int i = 0; i < 5; ++i) {
    double lam = 1.0 + (up - 1.0) * (i + 0.5) / 5.0;
    lam = std::min(std::max(lam, 1.0 + 1e-3), up - 1e-3);
    for (int j = 0; j < 5; ++j)
      for (int k = 0; k < 5; ++k) {
        Vec3 x;
        x[0] = lam;
        switch (fashion) {
          case Fashion::PB1:
            x[1] = pb1_bound(lam) + uu[j];
            x[2] = x[1] + uu[k];
            break;
          case Fashion::PA2:
          case Fashion::PA3:
            x[1] = 0.3 + 0.35 * j;
            x[2] = std::max(x[1], 1.0 / x[1]) + uu[k];
            break;
          case Fashion::PB21:
            x[1] = 0.1 + 0.3 * j;
            x[2] = x[1] * fr[k];
            break;
          case Fashion::PB22:
            x[1] = m1 * 3.14159265358979 * fr[j];
            x[2] = std::min(x[1], m1 * 3.14159265358979 - x[1]) * fr[k];
            break;
          case Fashion::PB23:
            x[1] = 0.1 + 0.35 * j;
            x[2] = m1 * 3.14159265358979 * fr[k];
            break;
          default:  // grafted families have no moduli backend
            x[1] = 0.5 + 0.4 * j;
            x[2] = x[1] + uu[k];
            break;
        }
        starts.push_back(x);
      }
  }

  // rank the starts by residual
  std::vector<std::pair<double, Vec3>> ranked;
  for (const Vec3& x : starts) {
    Vec3 r;
    if (residual_vec(x, r)) ranked.push_back({r.cwiseAbs().maxCoeff(), x});
  }
  if (ranked.empty())
    throw NoRoot("no admissible start point for the matcher");
  std::sort(ranked.begin(), ranked.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  const int kStarts = std::min<int>(6, static_cast<int>(ranked.size()));
  MatchResult best;
  best.residual = 1e300;
  for (int si = 0; si < kStarts; ++si) {
    Vec3 x = ranked[si].second;
    Vec3 r;
    if (!residual_vec(x, r)) continue;
    double rn = r.cwiseAbs().maxCoeff();
    int it = 0;
    for (; it < 40 && rn >= tol; ++it) {
      // finite-difference Jacobian
      Eigen::Matrix3d J;
      bool ok = true;
      for (int c = 0; c < 3 && ok; ++c) {
        double h = 1e-5 * std::max(1.0, std::abs(x[c]));
        Vec3 xp = x;
        xp[c] += h;
        project(fashion, xp);
        Vec3 rp;
        ok = residual_vec(xp, rp) && std::abs(xp[c] - x[c]) > 1e-12;
        if (ok) J.col(c) = (rp - r) / (xp[c] - x[c]);
      }
      if (!ok) break;
      Vec3 step = J.colPivHouseholderQr().solve(-r);
      if (!step.allFinite()) break;
      // damping
      double damp = 1.0;
      bool improved = false;
      for (int d = 0; d < 8; ++d, damp *= 0.5) {
        Vec3 xn = x + damp * step;
        project(fashion, xn);
        Vec3 rnv;
        if (!residual_vec(xn, rnv)) continue;
        double rnn = rnv.cwiseAbs().maxCoeff();
        if (rnn < rn) {
          x = xn;
          r = rnv;
          rn = rnn;
          improved = true;
          break;
        }
      }
      if (!improved) break;
    }
    if (rn < best.residual) {
      best.spec = make_spec(fashion, m1, m2, x);
      best.residual = rn;
      best.iterations = it;
    }
    if (best.residual < tol) break;
  }
  if (best.residual >= tol)
    throw NoRoot("matcher failed from every start (residual " +
                 std::to_string(best.residual) + ")");
  return best;
}

}  // namespace ps3
