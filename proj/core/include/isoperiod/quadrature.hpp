#ifndef ISOPERIOD_QUADRATURE_HPP
#define ISOPERIOD_QUADRATURE_HPP

#include <string>
#include <vector>

#include "isoperiod/potential.hpp"

namespace isoperiod {

struct QuadTolerances {
  double quadrature_abs = 1e-12;
  double turning_rel = 1e-14;
};

// Root of V(x) = h nearest 0 on the given side; geometric bracket expansion
// from 0 capped at domain_bound, then Brent refinement. Throws NoTurningPoint
// when the bracket hits domain_bound without a sign change.
double turning_point(const Potential& V, double h, Side side,
                     const QuadTolerances& tol = {});

// Full transit time on one side: 2 * int from the turning point to 0 of
// dx / sqrt(2(h - V)). The endpoint singularity is removed by x = x_t -/+ v^2
// after deflating h - V by its root at x_t. Throws NonSimpleTurningPoint when
// |V'(x_t)| < 1e-10.
double branch_time_numeric(const Potential& V, double h, Side side,
                           const QuadTolerances& tol = {});

// Same, for a dense double-coefficient polynomial (index k -> c_k); used by
// the rho-scaled divergence path.
double branch_time_numeric_poly(const std::vector<double>& coeffs, double h,
                                Side side, double domain_bound,
                                const QuadTolerances& tol = {});

struct PeriodSample {
  double h = 0;
  double t_total = 0;
  double t_minus = 0;
  double t_plus = 0;
  double cross_1 = 0;  // starting crossing coordinate
  double cross_2 = 0;  // second switching-line crossing
  bool non_closed = false;
};

// Side transits assembled for the topology; for horizontal topologies with a
// non-closing orbit this is the first-return time through the starting
// crossing, with non_closed set.
PeriodSample period_numeric(const PiecewiseSystem& sys, double h,
                            const QuadTolerances& tol = {});

struct PeriodTable {
  std::vector<PeriodSample> rows;
  std::string case_name;
  QuadTolerances tol;
};

PeriodTable period_table(const PiecewiseSystem& sys, const std::vector<double>& energies,
                         const QuadTolerances& tol = {});

// CSV per the published schema: h,T_total,T_minus,T_plus,cross_1,cross_2,non_closed
std::string period_table_csv(const PeriodTable& table);

struct DivergenceFit {
  std::vector<double> rho_values;
  std::vector<double> times;
  double fitted_exponent = 0;
  double predicted_exponent = 0;
  int r = 0;
  int i = 0;  // 0 degenerate center, 1 cusp
};

// Side transit at h = rho^(2r+i) computed through the rho-scaled integrand
// (x = rho s), then a least-squares log-log slope fit against the predicted
// exponent -(2(r-1)+i)/2. The potential must classify as DegenerateCenter or
// Cusp on the left (NotDegenerate otherwise).
DivergenceFit divergence_probe(const Potential& V, const std::vector<double>& rho_grid,
                               const QuadTolerances& tol = {});

// Signed displacement of the switching-line crossing after one full turn,
// from the exact level-set geometry. Zero iff the orbit closes.
double return_displacement(const PiecewiseSystem& sys, double start_crossing,
                           const QuadTolerances& tol = {});

// 0.9 x the smallest energy at which the turning-point search fails on a
// needed side (capped scan), per the h_max default rule.
double default_h_max(const PiecewiseSystem& sys);

std::vector<double> energy_grid(double min, double max, std::size_t count, bool log_scale);

}  // namespace isoperiod

#endif
