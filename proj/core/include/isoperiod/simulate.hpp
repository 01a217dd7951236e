#ifndef ISOPERIOD_SIMULATE_HPP
#define ISOPERIOD_SIMULATE_HPP

#include <array>
#include <functional>
#include <vector>

#include "isoperiod/potential.hpp"

namespace isoperiod {

using State = std::array<double, 2>;  // (x, y)

struct SimOptions {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  double event_tol = 1e-13;
  double closure_tol = 1e-7;
  std::size_t max_steps = 2'000'000;
};

struct SwitchEvent {
  double t = 0;
  State state{};
  int side_from = 0;  // sign of the switching function before the event
  int side_to = 0;
};

struct OrbitRun {
  std::vector<double> times;
  std::vector<State> states;
  std::vector<SwitchEvent> events;
  double return_time = 0;
  bool closed = false;
  State return_state{};
};

// One accepted Dormand-Prince 5(4) step with its dense-output coefficients.
struct DenseStep {
  double t0 = 0;
  double h = 0;
  State y0{}, y1{};
  std::array<State, 5> rcont{};
  // Fifth-order continuous extension, theta in [0, 1].
  State eval(double theta) const;
};

// One explicit Dormand-Prince 5(4) step of size h, with dense-output
// coefficients filled in.
DenseStep dp5_step(const std::function<State(double, const State&)>& f, double t0,
                   const State& y0, double h);

// Bisects the dense output for the root of switch_fn over the step; the step
// endpoints must bracket a sign change (EventNotBracketed). Returns
// (t_event, interpolated state) with |switch_fn| <= event_tol.
std::pair<double, State> locate_switch_event(
    const DenseStep& step, const std::function<double(const State&)>& switch_fn,
    double event_tol = 1e-13);

// Integrates the piecewise field from a switching-line start until the orbit
// first returns to the starting section with matching crossing direction.
OrbitRun integrate_return(const PiecewiseSystem& sys, const State& start,
                          const SimOptions& opts = {});

// Side Hamiltonian at a state (for drift checks); side: -1 lower/left,
// +1 upper/right.
double side_hamiltonian(const PiecewiseSystem& sys, const State& s, int side);

// Trajectory CSV: t,x,y,side
std::string orbit_csv(const PiecewiseSystem& sys, const OrbitRun& run);

}  // namespace isoperiod

#endif
