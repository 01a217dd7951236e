#ifndef ISOPERIOD_VERDICT_HPP
#define ISOPERIOD_VERDICT_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "isoperiod/exact.hpp"
#include "isoperiod/expansion.hpp"
#include "isoperiod/potential.hpp"
#include "isoperiod/quadrature.hpp"

namespace isoperiod {

struct IsochronyVerdict {
  struct FirstNonzeroConstant {
    std::size_t index;
    ExactScalar value;
  };
  struct DivergentPeriodAtOrigin {
    std::string case_name;
    double predicted_exponent;
    double fitted_exponent;
  };
  struct PeriodVanishesAtOrigin {
    ExactScalar t1;  // leading term is exactly 0 and T1 > 0
  };
  struct NotIsochronous {
    std::variant<FirstNonzeroConstant, DivergentPeriodAtOrigin, PeriodVanishesAtOrigin>
        evidence;
  };
  struct IsochronousLinearCase {
    double omega_minus;
    double omega_plus;
  };
  struct UndeterminedUpToOrder {
    std::size_t order;
  };
  struct NotMonodromic {
    std::string reason;
  };

  std::variant<NotIsochronous, IsochronousLinearCase, UndeterminedUpToOrder,
               NotMonodromic>
      v;
  CenterCase center_case;
  std::size_t order = kDefaultOrder;

  bool not_isochronous() const { return std::holds_alternative<NotIsochronous>(v); }
};

struct VerdictOptions {
  std::vector<double> rho_grid;  // empty -> default log grid in [1e-3, 1e-1]
  QuadTolerances tol;
};

IsochronyVerdict verdict(const PiecewiseSystem& sys, std::size_t order = kDefaultOrder,
                         const VerdictOptions& opts = {});

}  // namespace isoperiod

#endif
