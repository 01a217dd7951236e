#include "isoperiod/verdict.hpp"

#include <cmath>

#include "isoperiod/errors.hpp"

namespace isoperiod {

namespace {

bool exactly_quadratic(const Potential& V) {
  return V.coeffs().size() == 1 && V.coeffs().count(2) == 1 && V.coeff(2) > 0;
}

}  // namespace

IsochronyVerdict verdict(const PiecewiseSystem& sys, std::size_t order,
                         const VerdictOptions& opts) {
  IsochronyVerdict out;
  out.order = order;
  CenterCase cc = classify_system(sys);
  out.center_case = cc;

  using V = IsochronyVerdict;
  switch (cc.tag) {
    case CenterCase::Tag::NotMonodromic:
      out.v = V::NotMonodromic{cc.reason};
      return out;

    case CenterCase::Tag::CaseII:
    case CenterCase::Tag::CaseIII:
    case CenterCase::Tag::CaseVI:
    case CenterCase::Tag::CaseVII:
    case CenterCase::Tag::CaseVIII: {
      // Divergent period at the origin, certified on the flatter side. The
      // probe runs on the left, so mirror when the flat side is the right one.
      Potential flat = cc.flatter_side == Side::Left ? sys.v_minus
                                                     : sys.v_plus.mirrored();
      std::vector<double> grid = opts.rho_grid;
      if (grid.empty()) grid = energy_grid(1e-3, 1e-1, 9, true);
      DivergenceFit fit = divergence_probe(flat, grid, opts.tol);
      out.v = V::NotIsochronous{V::DivergentPeriodAtOrigin{
          cc.name(), fit.predicted_exponent, fit.fitted_exponent}};
      return out;
    }

    case CenterCase::Tag::CaseI:
    case CenterCase::Tag::CaseIV:
    case CenterCase::Tag::CaseV:
    case CenterCase::Tag::TheoremA: {
      PeriodExpansion exp = coupled_expansion(sys, order);
      auto first = first_nonzero_constant(exp);
      if (first) {
        if (cc.tag == CenterCase::Tag::CaseIV && exp.leading.is_zero() &&
            first->index == 1) {
          // Fold-fold: the period itself vanishes at the origin.
          out.v = V::NotIsochronous{V::PeriodVanishesAtOrigin{first->value}};
        } else {
          out.v = V::NotIsochronous{V::FirstNonzeroConstant{first->index, first->value}};
        }
        return out;
      }
      if (exactly_quadratic(sys.v_minus) && exactly_quadratic(sys.v_plus)) {
        out.v = V::IsochronousLinearCase{
            std::sqrt(to_double(sys.v_minus.coeff(2))),
            std::sqrt(to_double(sys.v_plus.coeff(2)))};
        return out;
      }
      // A finite-order zero test is not a proof for nonlinear potentials.
      out.v = V::UndeterminedUpToOrder{order};
      return out;
    }
  }
  out.v = V::NotMonodromic{"unreachable"};
  return out;
}

}  // namespace isoperiod
