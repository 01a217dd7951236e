#include "isoperiod/simulate.hpp"

#include <cmath>
#include <cstdio>

#include "isoperiod/errors.hpp"

namespace isoperiod {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                 b5 = -2187.0 / 6784, b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
// Hairer's dense-output coefficients.
constexpr double d1 = -12715105075.0 / 11282082432.0;
constexpr double d3 = 87487479700.0 / 32700410799.0;
constexpr double d4 = -10690763975.0 / 1880347072.0;
constexpr double d5 = 701980252875.0 / 199316789632.0;
constexpr double d6 = -1453857185.0 / 822651844.0;
constexpr double d7 = 69997945.0 / 29380423.0;

State axpy(const State& y, double h, const State& k) {
  return {y[0] + h * k[0], y[1] + h * k[1]};
}

struct StepResult {
  DenseStep dense;
  double err = 0;  // scaled error estimate
};

StepResult dp5_step_err(const std::function<State(double, const State&)>& f, double t0,
                        const State& y0, double h, double abs_tol, double rel_tol) {
  State k1 = f(t0, y0);
  State k2 = f(t0 + h / 5, axpy(y0, h * a21, k1));
  State k3 = f(t0 + 3 * h / 10, {y0[0] + h * (a31 * k1[0] + a32 * k2[0]),
                                 y0[1] + h * (a31 * k1[1] + a32 * k2[1])});
  State k4 = f(t0 + 4 * h / 5, {y0[0] + h * (a41 * k1[0] + a42 * k2[0] + a43 * k3[0]),
                                y0[1] + h * (a41 * k1[1] + a42 * k2[1] + a43 * k3[1])});
  State k5 = f(t0 + 8 * h / 9,
               {y0[0] + h * (a51 * k1[0] + a52 * k2[0] + a53 * k3[0] + a54 * k4[0]),
                y0[1] + h * (a51 * k1[1] + a52 * k2[1] + a53 * k3[1] + a54 * k4[1])});
  State k6 = f(t0 + h, {y0[0] + h * (a61 * k1[0] + a62 * k2[0] + a63 * k3[0] +
                                     a64 * k4[0] + a65 * k5[0]),
                        y0[1] + h * (a61 * k1[1] + a62 * k2[1] + a63 * k3[1] +
                                     a64 * k4[1] + a65 * k5[1])});
  State y1 = {y0[0] + h * (b1 * k1[0] + b3 * k3[0] + b4 * k4[0] + b5 * k5[0] + b6 * k6[0]),
              y0[1] + h * (b1 * k1[1] + b3 * k3[1] + b4 * k4[1] + b5 * k5[1] + b6 * k6[1])};
  State k7 = f(t0 + h, y1);

  StepResult r;
  r.dense.t0 = t0;
  r.dense.h = h;
  r.dense.y0 = y0;
  r.dense.y1 = y1;
  double errsum = 0;
  for (int i = 0; i < 2; ++i) {
    double ei = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] +
                     e7 * k7[i]);
    double sc = abs_tol + rel_tol * std::max(std::abs(y0[i]), std::abs(y1[i]));
    errsum += (ei / sc) * (ei / sc);
    double dy = y1[i] - y0[i];
    r.dense.rcont[0][i] = y0[i];
    r.dense.rcont[1][i] = dy;
    r.dense.rcont[2][i] = h * k1[i] - dy;
    r.dense.rcont[3][i] = dy - h * k7[i] - r.dense.rcont[2][i];
    r.dense.rcont[4][i] = h * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] + d5 * k5[i] +
                               d6 * k6[i] + d7 * k7[i]);
  }
  r.err = std::sqrt(errsum / 2.0);
  return r;
}

}  // namespace

State DenseStep::eval(double theta) const {
  State s;
  double th1 = 1.0 - theta;
  for (int i = 0; i < 2; ++i)
    s[i] = rcont[0][i] +
           theta * (rcont[1][i] +
                    th1 * (rcont[2][i] + theta * (rcont[3][i] + th1 * rcont[4][i])));
  return s;
}

DenseStep dp5_step(const std::function<State(double, const State&)>& f, double t0,
                   const State& y0, double h) {
  return dp5_step_err(f, t0, y0, h, 1.0, 1.0).dense;
}

std::pair<double, State> locate_switch_event(
    const DenseStep& step, const std::function<double(const State&)>& switch_fn,
    double event_tol) {
  double glo = switch_fn(step.eval(0.0));
  double ghi = switch_fn(step.eval(1.0));
  if (glo == 0.0) return {step.t0, step.y0};
  if ((glo > 0) == (ghi > 0))
    throw EventNotBracketed("locate_switch_event: no sign change across the step");
  double lo = 0.0, hi = 1.0;
  double tm = 0.5, gm = 0.0;
  State sm{};
  for (int it = 0; it < 200; ++it) {
    tm = 0.5 * (lo + hi);
    sm = step.eval(tm);
    gm = switch_fn(sm);
    if (std::abs(gm) <= event_tol || hi - lo < 1e-17) break;
    if ((gm > 0) == (glo > 0)) {
      lo = tm;
      glo = gm;
    } else {
      hi = tm;
    }
  }
  return {step.t0 + tm * step.h, sm};
}

namespace {

int switch_index(Topology t) { return t == Topology::VerticalSwitch ? 0 : 1; }

std::function<State(double, const State&)> side_field(const PiecewiseSystem& sys,
                                                      int side) {
  if (sys.topology == Topology::HorizontalMixed && side < 0) {
    const Potential vm = sys.v_minus;
    return [vm](double, const State& s) -> State {
      return {vm.eval(s[1], 1), -s[0]};
    };
  }
  const Potential v = (side > 0) ? sys.v_plus : sys.v_minus;
  return [v](double, const State& s) -> State { return {s[1], -v.eval(s[0], 1)}; };
}

}  // namespace

double side_hamiltonian(const PiecewiseSystem& sys, const State& s, int side) {
  if (sys.topology == Topology::HorizontalMixed && side < 0)
    return 0.5 * s[0] * s[0] + sys.v_minus.eval(s[1]);
  const Potential& v = (side > 0) ? sys.v_plus : sys.v_minus;
  return 0.5 * s[1] * s[1] + v.eval(s[0]);
}

OrbitRun integrate_return(const PiecewiseSystem& sys, const State& start,
                          const SimOptions& opts) {
  const int si = switch_index(sys.topology);
  const double bound =
      std::max(sys.v_minus.domain_bound(), sys.v_plus.domain_bound());

  // Initial side from the crossing direction at the start point.
  auto probe = side_field(sys, +1);
  double ds = probe(0.0, start)[si];
  if (ds == 0.0) ds = side_field(sys, -1)(0.0, start)[si];
  if (ds == 0.0)
    throw EventNotBracketed("integrate_return: start is not a transversal crossing");
  int side = ds > 0 ? +1 : -1;
  const int start_side = side;

  OrbitRun run;
  run.times.push_back(0.0);
  run.states.push_back(start);

  double t = 0.0;
  State y = start;
  auto field = side_field(sys, side);
  double h = 1e-4;
  std::size_t steps = 0;

  while (true) {
    if (++steps > opts.max_steps)
      throw MaxStepsExceeded("integrate_return: step budget exhausted");
    if (std::abs(y[0]) > bound || std::abs(y[1]) > bound)
      throw EscapedDomain("integrate_return: orbit left the trusted domain");

    StepResult sr = dp5_step_err(field, t, y, h, opts.abs_tol, opts.rel_tol);
    if (sr.err > 1.0) {
      h *= std::max(0.2, 0.9 * std::pow(sr.err, -0.2));
      continue;
    }
    double hnext = h * std::min(5.0, std::max(0.2, 0.9 * std::pow(
                                                        std::max(sr.err, 1e-10), -0.2)));
    hnext = std::min(hnext, 0.1);

    // Did the accepted step cross the switching line? The step start may sit
    // exactly on the line, so compare against the current side, not sign(y0).
    double g1 = sr.dense.y1[si];
    if (g1 != 0.0 && (g1 > 0 ? +1 : -1) != side) {
      auto [tev, sev] = locate_switch_event(
          sr.dense, [si](const State& s) { return s[si]; }, opts.event_tol);
      // Re-take the partial step directly for full-order accuracy at the
      // event, with a couple of Newton corrections on the event time.
      double tau = tev - t;
      for (int it = 0; it < 3 && tau > 0; ++it) {
        sev = dp5_step(field, t, y, tau).y1;
        double g = sev[si];
        double dg = field(t + tau, sev)[si];
        if (g == 0.0 || dg == 0.0) break;
        double dtau = g / dg;
        if (std::abs(dtau) > 0.5 * std::abs(tau)) break;
        tau -= dtau;
      }
      tev = t + tau;
      sev[si] = 0.0;
      SwitchEvent ev;
      ev.t = tev;
      ev.state = sev;
      ev.side_from = side;
      ev.side_to = -side;
      run.events.push_back(ev);
      run.times.push_back(tev);
      run.states.push_back(sev);
      t = tev;
      y = sev;
      side = -side;
      field = side_field(sys, side);
      h = std::min(hnext, 1e-2);
      if (side == start_side) {
        // Back on the starting section with the starting crossing direction.
        run.return_time = tev;
        run.return_state = sev;
        int oi = 1 - si;
        run.closed = std::abs(sev[oi] - start[oi]) <= opts.closure_tol;
        return run;
      }
      continue;
    }

    t += h;
    y = sr.dense.y1;
    run.times.push_back(t);
    run.states.push_back(y);
    h = hnext;
  }
}

std::string orbit_csv(const PiecewiseSystem& sys, const OrbitRun& run) {
  const int si = switch_index(sys.topology);
  std::string out = "t,x,y,side\n";
  char buf[160];
  for (std::size_t j = 0; j < run.times.size(); ++j) {
    double g = run.states[j][si];
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%d\n", run.times[j],
                  run.states[j][0], run.states[j][1], g >= 0 ? 1 : -1);
    out += buf;
  }
  return out;
}

}  // namespace isoperiod
