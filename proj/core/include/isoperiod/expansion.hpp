#ifndef ISOPERIOD_EXPANSION_HPP
#define ISOPERIOD_EXPANSION_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "isoperiod/exact.hpp"
#include "isoperiod/potential.hpp"
#include "isoperiod/series.hpp"

namespace isoperiod {

// Period expansion near the center.
//
// Parametrization conventions:
//   ByEnergy:    T(h) = leading + sum_{i>=1} constants[i] * h^(i/2)
//                (half-integer powers of h live at odd indices).
//   ByXCrossing: T(x) = leading + sum constants[i] * x^i, x the crossing
//                coordinate on y = 0.
//   ByYCrossing: T(y0) = leading + sum constants[i] * y0^i, y0 = sqrt(2h) the
//                crossing coordinate on x = 0.
struct PeriodExpansion {
  enum class Param { ByEnergy, ByXCrossing, ByYCrossing };

  Param param = Param::ByEnergy;
  ExactScalar leading;
  std::vector<ExactScalar> constants;  // index 0 unused (kept 0)
  // omega^2 of the governing center side, when there is a single one.
  std::optional<Rational> omega_sq;

  std::size_t order() const { return constants.empty() ? 0 : constants.size() - 1; }
  const ExactScalar& constant(std::size_t i) const { return constants.at(i); }

  // Evaluates at the parameter value (energy h for ByEnergy, crossing
  // coordinate otherwise).
  double eval(double p) const;

  static const char* param_name(Param p);
};

struct Omega {
  Rational omega_sq;               // c2, exact
  std::optional<Rational> exact;   // set when c2 is a perfect rational square
  double value;                    // sqrt(c2)
};

// omega = sqrt(V''(0)/2); requires a nondegenerate-center side (NotACenter).
Omega omega_of(const Potential& V);

// x(z) = z + sum_{i>=2} b_i z^i with V(x(z)) = omega^2 z^2 exactly up to
// order N+1. Requires a nondegenerate-center side.
TruncatedSeries z_substitution(const Potential& V, std::size_t order);

// Half-plane transit of the symmetric-in-z arc of a nondegenerate center:
// T~(h) = pi/(sqrt(2) omega) * (1 + sum_i T~_{2i} h^i), carried on the
// ByEnergy half-power grid (entries at even indices only).
PeriodExpansion center_half_period_series(const Potential& V, std::size_t order);

// Full transit (down and back across the half plane) along the monotone
// branch of V on the given side, as a ByEnergy expansion with half-integer
// powers. Supports nondegenerate-center and tangency sides; throws
// NotMonotoneBranch otherwise. For a tangency side this equals
// T_bar(.)/2 of the fold-fold expansion.
PeriodExpansion branch_time_series(const Potential& V, Side side, std::size_t order);

// Assembled two-sided expansion for the finite-period configurations
// (TheoremA, CaseI, CaseIV, CaseV). Throws UnsupportedCase for the divergent
// cases and NotMonodromicError otherwise.
PeriodExpansion coupled_expansion(const PiecewiseSystem& sys, std::size_t order);

struct FirstNonzero {
  std::size_t index;
  ExactScalar value;
};

// Smallest i >= 1 with T_i != 0, decided exactly; nullopt = all zero up to N.
std::optional<FirstNonzero> first_nonzero_constant(const PeriodExpansion& exp);

// Exact rational value of Gamma(i + 3/2) / (sqrt(pi) Gamma(i + 1)).
Rational gamma_ratio(unsigned i);

}  // namespace isoperiod

#endif
