#include "isoperiod/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>

#include "isoperiod/errors.hpp"

namespace isoperiod {

namespace {

double poly_eval(const std::vector<double>& c, double x) {
  double acc = 0.0;
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + c[k];
  return acc;
}

double poly_eval_deriv(const std::vector<double>& c, double x) {
  double acc = 0.0;
  for (std::size_t k = c.size(); k-- > 1;) acc = acc * x + double(k) * c[k];
  return acc;
}

// Brent root refinement on a bracketing interval [a, b], f(a) f(b) < 0.
double brent(const std::function<double(double)>& f, double a, double b, double fa,
             double fb, double rel_tol) {
  double c = a, fc = fa, d = b - a, e = d;
  for (int iter = 0; iter < 200; ++iter) {
    if (std::abs(fc) < std::abs(fb)) {
      a = b; b = c; c = a;
      fa = fb; fb = fc; fc = fa;
    }
    double tol = 2.0 * std::numeric_limits<double>::epsilon() * std::abs(b) +
                 0.5 * rel_tol * (std::abs(b) + 1e-30);
    double m = 0.5 * (c - b);
    if (std::abs(m) <= tol || fb == 0.0) return b;
    if (std::abs(e) < tol || std::abs(fa) <= std::abs(fb)) {
      d = e = m;
    } else {
      double s = fb / fa, p, q;
      if (a == c) {
        p = 2.0 * m * s;
        q = 1.0 - s;
      } else {
        double qq = fa / fc, r = fb / fc;
        p = s * (2.0 * m * qq * (qq - r) - (b - a) * (r - 1.0));
        q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0) q = -q; else p = -p;
      if (2.0 * p < std::min(3.0 * m * q - std::abs(tol * q), std::abs(e * q))) {
        e = d; d = p / q;
      } else {
        d = e = m;
      }
    }
    a = b; fa = fb;
    b += (std::abs(d) > tol) ? d : (m > 0 ? tol : -tol);
    fb = f(b);
    if ((fb > 0) == (fc > 0)) { c = a; fc = fa; e = d = b - a; }
  }
  return b;
}

// Gauss 7 / Kronrod 15 pair on [-1, 1].
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {0.129484966168870, 0.279705391489277,
                           0.381830050505119, 0.417959183673469};

void gk15(const std::function<double(double)>& f, double a, double b, double& kron,
          double& err) {
  double hl = 0.5 * (b - a), c = 0.5 * (a + b);
  double fk = 0.0, fg = 0.0;
  for (int j = 0; j < 8; ++j) {
    double fv = (j == 7) ? f(c) : f(c - hl * kXgk[j]) + f(c + hl * kXgk[j]);
    fk += kWgk[j] * fv;
    if (j % 2 == 1) fg += kWg[j / 2] * fv;
  }
  kron = fk * hl;
  err = std::abs((fk - fg) * hl);
}

double adaptive_gk(const std::function<double(double)>& f, double a, double b,
                   double abs_tol, int depth = 0) {
  double kron, err;
  gk15(f, a, b, kron, err);
  if (err <= abs_tol || depth >= 48) return kron;
  double m = 0.5 * (a + b);
  return adaptive_gk(f, a, m, 0.5 * abs_tol, depth + 1) +
         adaptive_gk(f, m, b, 0.5 * abs_tol, depth + 1);
}

double turning_point_poly(const std::vector<double>& coeffs, double h, Side side,
                          double domain_bound, double rel_tol) {
  double sgn = (side == Side::Right) ? 1.0 : -1.0;
  auto f = [&](double x) { return poly_eval(coeffs, x) - h; };
  double prev = 0.0, fprev = -h;
  double d = 1e-18;
  while (d <= domain_bound) {
    double x = sgn * d;
    double fx = f(x);
    if (fx == 0.0) return x;
    if ((fx > 0) != (fprev > 0)) return brent(f, prev, x, fprev, fx, rel_tol);
    prev = x;
    fprev = fx;
    d *= 2.0;
  }
  double x = sgn * domain_bound;
  double fx = f(x);
  if ((fx > 0) != (fprev > 0)) return brent(f, prev, x, fprev, fx, rel_tol);
  throw NoTurningPoint("turning_point: no sign change of V - h inside domain_bound");
}

}  // namespace

double turning_point(const Potential& V, double h, Side side, const QuadTolerances& tol) {
  if (h <= 0) throw NoTurningPoint("turning_point: h must be positive");
  return turning_point_poly(V.coeffs_double(), h, side, V.domain_bound(), tol.turning_rel);
}

double branch_time_numeric_poly(const std::vector<double>& coeffs, double h, Side side,
                                double domain_bound, const QuadTolerances& tol) {
  double xt = turning_point_poly(coeffs, h, side, domain_bound, tol.turning_rel);
  double vp = poly_eval_deriv(coeffs, xt);
  if (std::abs(vp) < 1e-10)
    throw NonSimpleTurningPoint(
        "branch_time_numeric: degenerate contact at the turning point");
  // Deflate p(x) = h - V(x) by its root x_t: p = (x - x_t) q(x).
  std::vector<double> p(coeffs.size());
  for (std::size_t k = 0; k < coeffs.size(); ++k) p[k] = -coeffs[k];
  p[0] += h;
  std::vector<double> q(p.size() > 1 ? p.size() - 1 : 1, 0.0);
  double rem = p.back();
  for (std::size_t k = p.size() - 1; k-- > 0;) {
    q[k] = rem;
    rem = p[k] + rem * xt;
  }
  // W(x) = (h - V)/(x_t - x) on the right, (h - V)/(x - x_t) on the left.
  double wsign = (side == Side::Right) ? -1.0 : 1.0;
  double sigma = (side == Side::Right) ? 1.0 : -1.0;
  double vmax = std::sqrt(std::abs(xt));
  auto integrand = [&](double v) {
    double x = xt - sigma * v * v;
    double w = wsign * poly_eval(q, x);
    return std::sqrt(2.0) / std::sqrt(std::max(w, 1e-300));
  };
  double t = adaptive_gk(integrand, 0.0, vmax, tol.quadrature_abs);
  return 2.0 * t;
}

double branch_time_numeric(const Potential& V, double h, Side side,
                           const QuadTolerances& tol) {
  return branch_time_numeric_poly(V.coeffs_double(), h, side, V.domain_bound(), tol);
}

namespace {

// Upper-half (full-width) transit of a potential well at energy h.
double well_half_period(const Potential& V, double h, const QuadTolerances& tol) {
  return 0.5 * (branch_time_numeric(V, h, Side::Left, tol) +
                branch_time_numeric(V, h, Side::Right, tol));
}

}  // namespace

PeriodSample period_numeric(const PiecewiseSystem& sys, double h,
                            const QuadTolerances& tol) {
  CenterCase cc = classify_system(sys);
  if (!cc.monodromic())
    throw NotMonodromicError("period_numeric: " + cc.reason);
  PeriodSample s;
  s.h = h;
  switch (sys.topology) {
    case Topology::VerticalSwitch: {
      s.t_minus = branch_time_numeric(sys.v_minus, h, Side::Left, tol);
      s.t_plus = branch_time_numeric(sys.v_plus, h, Side::Right, tol);
      s.cross_1 = std::sqrt(2.0 * h);
      s.cross_2 = -s.cross_1;
      break;
    }
    case Topology::HorizontalMixed: {
      double xr = turning_point(sys.v_plus, h, Side::Right, tol);
      s.t_minus = branch_time_numeric(sys.v_minus, 0.5 * xr * xr, Side::Left, tol);
      // The lower transit maps (xr, 0) to (-xr, 0); the next upper arc runs at
      // the energy of that landing point.
      double h2 = sys.v_plus.eval(-xr);
      s.t_plus = well_half_period(sys.v_plus, h2, tol);
      double ret = turning_point(sys.v_plus, h2, Side::Right, tol);
      s.cross_1 = xr;
      s.cross_2 = -xr;
      s.non_closed = std::abs(ret - xr) > 1e-9 * std::max(1.0, std::abs(xr));
      break;
    }
    case Topology::HorizontalPotentials: {
      double a = turning_point(sys.v_plus, h, Side::Right, tol);
      double hm = sys.v_minus.eval(a);
      s.t_minus = well_half_period(sys.v_minus, hm, tol);
      double bl = turning_point(sys.v_minus, hm, Side::Left, tol);
      double hp = sys.v_plus.eval(bl);
      s.t_plus = well_half_period(sys.v_plus, hp, tol);
      double ret = turning_point(sys.v_plus, hp, Side::Right, tol);
      s.cross_1 = a;
      s.cross_2 = bl;
      s.non_closed = std::abs(ret - a) > 1e-9 * std::max(1.0, std::abs(a));
      break;
    }
  }
  s.t_total = s.t_minus + s.t_plus;
  return s;
}

PeriodTable period_table(const PiecewiseSystem& sys, const std::vector<double>& energies,
                         const QuadTolerances& tol) {
  PeriodTable t;
  t.case_name = classify_system(sys).name();
  t.tol = tol;
  for (double h : energies) t.rows.push_back(period_numeric(sys, h, tol));
  std::sort(t.rows.begin(), t.rows.end(),
            [](const PeriodSample& a, const PeriodSample& b) { return a.h < b.h; });
  return t;
}

std::string period_table_csv(const PeriodTable& table) {
  std::string out = "h,T_total,T_minus,T_plus,cross_1,cross_2,non_closed\n";
  char buf[256];
  for (const auto& r : table.rows) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%d\n", r.h,
                  r.t_total, r.t_minus, r.t_plus, r.cross_1, r.cross_2,
                  r.non_closed ? 1 : 0);
    out += buf;
  }
  return out;
}

DivergenceFit divergence_probe(const Potential& V, const std::vector<double>& rho_grid,
                               const QuadTolerances& tol) {
  SideBehavior b = classify_side(V, Side::Left);
  DivergenceFit fit;
  if (auto* d = std::get_if<SideBehavior::DegenerateCenter>(&b.v)) {
    fit.r = d->r;
    fit.i = 0;
  } else if (auto* c = std::get_if<SideBehavior::Cusp>(&b.v)) {
    fit.r = c->r;
    fit.i = 1;
  } else {
    throw NotDegenerate("divergence_probe: side is " + b.name() +
                        "; requires a degenerate center or cusp");
  }
  int m = 2 * fit.r + fit.i;
  fit.predicted_exponent = -0.5 * (2.0 * (fit.r - 1) + fit.i);

  std::vector<double> cs = V.coeffs_double();
  for (double rho : rho_grid) {
    // x = rho s turns the transit at h = rho^m into the transit of the scaled
    // potential at energy 1, times rho^(1 - m/2).
    std::vector<double> scaled(cs.size(), 0.0);
    for (std::size_t k = 1; k < cs.size(); ++k)
      scaled[k] = cs[k] * std::pow(rho, double(k) - double(m));
    double domain_s = std::min(1e6, V.domain_bound() / rho);
    double t = std::pow(rho, 1.0 - 0.5 * double(m)) *
               branch_time_numeric_poly(scaled, 1.0, Side::Left, domain_s, tol);
    fit.rho_values.push_back(rho);
    fit.times.push_back(t);
  }
  // Least-squares slope of log T against log rho.
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t n = fit.rho_values.size();
  for (std::size_t j = 0; j < n; ++j) {
    double x = std::log(fit.rho_values[j]), y = std::log(fit.times[j]);
    sx += x; sy += y; sxx += x * x; sxy += x * y;
  }
  fit.fitted_exponent = (double(n) * sxy - sx * sy) / (double(n) * sxx - sx * sx);
  return fit;
}

double return_displacement(const PiecewiseSystem& sys, double a,
                           const QuadTolerances& tol) {
  switch (sys.topology) {
    case Topology::VerticalSwitch:
      // H is continuous across x = 0 (V+-(0) = 0), so the crossings
      // (0, +-sqrt(2h)) always match.
      return 0.0;
    case Topology::HorizontalMixed: {
      // Lower arc maps (a, 0) to (-a, 0); the upper arc lands at the right
      // root of V+(x) = V+(-a).
      double b = turning_point(sys.v_plus, sys.v_plus.eval(-a), Side::Right, tol);
      return b - a;
    }
    case Topology::HorizontalPotentials: {
      double bl = turning_point(sys.v_minus, sys.v_minus.eval(a), Side::Left, tol);
      double b = turning_point(sys.v_plus, sys.v_plus.eval(bl), Side::Right, tol);
      return b - a;
    }
  }
  return 0.0;
}

double default_h_max(const PiecewiseSystem& sys) {
  auto ok = [&](double h) {
    try {
      period_numeric(sys, h);
      return true;
    } catch (const Error&) {
      return false;
    }
  };
  double h = 1e-6;
  if (!ok(h)) return 0.9 * h;
  while (h <= 1e12 && ok(2.0 * h)) h *= 2.0;
  if (h > 1e12) return 0.9 * h;
  // Bisect for the smallest failing energy, then back off.
  double lo = h, hi = 2.0 * h;
  for (int i = 0; i < 60; ++i) {
    double mid = 0.5 * (lo + hi);
    (ok(mid) ? lo : hi) = mid;
  }
  return 0.9 * hi;
}

std::vector<double> energy_grid(double min, double max, std::size_t count, bool log_scale) {
  std::vector<double> g;
  if (count < 2) {
    g.push_back(min);
    return g;
  }
  for (std::size_t j = 0; j < count; ++j) {
    double t = double(j) / double(count - 1);
    g.push_back(log_scale ? min * std::pow(max / min, t) : min + (max - min) * t);
  }
  return g;
}

}  // namespace isoperiod
