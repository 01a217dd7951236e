#include "isoperiod/expansion.hpp"

#include <cmath>

#include "isoperiod/errors.hpp"

namespace isoperiod {

namespace {

Rational double_factorial(long n) {
  // (-1)!! = 0!! = 1
  Rational r(1);
  for (long k = n; k >= 2; k -= 2) r *= Rational(k);
  return r;
}

Rational factorial(long n) {
  Rational r(1);
  for (long k = 2; k <= n; ++k) r *= Rational(k);
  return r;
}

Rational pow_rat(const Rational& base, unsigned e) {
  Rational r(1);
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

// Multiplier turning h^(k/2) into coord^k under h = coord^2 / 2:
// (1/2)^(k/2) as an exact scalar.
ExactScalar half_power_sub(std::size_t k) {
  return ExactScalar::term(1, Rational(1, Integer(1) << k), 0);
}

// Leading factor pi / sqrt(2 c2) and the rational coefficients T~_{2i} of the
// nondegenerate-center half-plane transit, indexed by the h power i.
struct CenterTilde {
  ExactScalar leading;
  std::vector<Rational> t;  // t[i] = T~_{2i}, i >= 1
};

CenterTilde center_tilde(const Potential& V, std::size_t order) {
  Omega w = omega_of(V);
  CenterTilde ct;
  ct.leading = ExactScalar::term(1, Rational(1) / (2 * w.omega_sq), 1);
  ct.t.assign(order / 2 + 1, Rational(0));
  TruncatedSeries b = z_substitution(V, order + 1);
  for (std::size_t i = 1; 2 * i <= order; ++i)
    ct.t[i] = 2 * gamma_ratio(unsigned(i)) * b[2 * i + 1] / pow_rat(w.omega_sq, unsigned(i));
  return ct;
}

}  // namespace

Rational gamma_ratio(unsigned i) {
  // Gamma(i+3/2) = (2i+1)!! sqrt(pi) / 2^(i+1), Gamma(i+1) = i!
  return double_factorial(2 * long(i) + 1) / (pow_rat(Rational(2), i + 1) * factorial(long(i)));
}

const char* PeriodExpansion::param_name(Param p) {
  switch (p) {
    case Param::ByEnergy: return "energy";
    case Param::ByXCrossing: return "x-crossing";
    case Param::ByYCrossing: return "y-crossing";
  }
  return "?";
}

double PeriodExpansion::eval(double p) const {
  double acc = leading.value();
  for (std::size_t i = 1; i < constants.size(); ++i) {
    double w = (param == Param::ByEnergy) ? std::pow(p, 0.5 * double(i))
                                          : std::pow(p, double(i));
    acc += constants[i].value() * w;
  }
  return acc;
}

Omega omega_of(const Potential& V) {
  SideBehavior b = classify_side(V, Side::Right);
  if (!b.is_center())
    throw NotACenter("omega_of: potential side is not a nondegenerate center");
  Omega w;
  w.omega_sq = V.coeff(2);
  Rational root;
  if (rational_sqrt(w.omega_sq, root)) w.exact = root;
  w.value = std::sqrt(to_double(w.omega_sq));
  return w;
}

TruncatedSeries z_substitution(const Potential& V, std::size_t order) {
  if (!(V.coeff(1) == 0 && V.coeff(2) > 0))
    throw NotACenter("z_substitution: requires V'(0) = 0, V''(0) > 0");
  Rational c2 = V.coeff(2);
  // V(x) = c2 x^2 (1 + u(x)), u = sum_{k>=3} (c_k/c2) x^(k-2);
  // z = x sqrt(1 + u), then revert.
  TruncatedSeries u(order, "x");
  for (const auto& [k, c] : V.coeffs())
    if (k >= 3 && k - 2 <= order) u[k - 2] = c / c2;
  TruncatedSeries s = series_sqrt1p(u);
  TruncatedSeries z(order, "x");
  for (std::size_t i = 0; i + 1 <= order; ++i) z[i + 1] = s[i];
  TruncatedSeries x_of_z = z.reversion();
  x_of_z.set_var("z");
  return x_of_z;
}

PeriodExpansion center_half_period_series(const Potential& V, std::size_t order) {
  CenterTilde ct = center_tilde(V, order);
  PeriodExpansion exp;
  exp.param = PeriodExpansion::Param::ByEnergy;
  exp.leading = ct.leading;
  exp.omega_sq = V.coeff(2);
  exp.constants.assign(order + 1, ExactScalar());
  for (std::size_t i = 1; 2 * i <= order; ++i)
    exp.constants[2 * i] = ct.t[i] * ct.leading;
  return exp;
}

PeriodExpansion branch_time_series(const Potential& V, Side side, std::size_t order) {
  SideBehavior b = classify_side(V, side);
  PeriodExpansion exp;
  exp.param = PeriodExpansion::Param::ByEnergy;
  exp.constants.assign(order + 1, ExactScalar());

  if (b.is_center()) {
    Rational c2 = V.coeff(2);
    exp.omega_sq = c2;
    TruncatedSeries bs = z_substitution(V, order + 1);
    // x = sum b_i (sigma w / omega)^i with w = sqrt(h); transit coefficient of
    // h^(k/2) is sqrt(2) d_k M_k with M_k the circular moment
    // int_0^1 s^k / sqrt(1 - s^2) ds.
    for (std::size_t k = 0; k <= order; ++k) {
      Rational a = Rational(k + 1) * bs[k + 1];
      if (side == Side::Left && k % 2 == 1) a = -a;
      if (a == 0) continue;
      if (k % 2 == 0) {
        // M_k = (pi/2) (k-1)!!/k!!
        Rational m = double_factorial(long(k) - 1) / double_factorial(long(k));
        ExactScalar coeff = ExactScalar::term(a * m / (2 * pow_rat(c2, unsigned(k / 2))),
                                              2 / c2, 1);
        if (k == 0)
          exp.leading = coeff;
        else
          exp.constants[k] = coeff;
      } else {
        Rational m = double_factorial(long(k) - 1) / double_factorial(long(k));
        exp.constants[k] =
            ExactScalar::term(a * m / pow_rat(c2, unsigned((k + 1) / 2)), 2, 0);
      }
    }
    return exp;
  }

  if (b.is_tangency()) {
    Rational c1 = V.coeff(1);
    TruncatedSeries x_of_u = V.as_series(order).reversion();
    TruncatedSeries xp = x_of_u.derivative();
    // t(h) = int_0^h |X'(u)| / sqrt(2(h-u)) du expanded termwise via the Beta
    // moments int_0^h u^k / sqrt(2(h-u)) du = h^(k+1/2) k! 2^(k+1) /
    // (sqrt(2) (2k+1)!!); transit = 2 t.
    for (std::size_t k = 0; 2 * k + 1 <= order && k <= xp.order(); ++k) {
      Rational e = xp[k];
      if (side == Side::Left) e = -e;  // |X'| with X' < 0 on the left branch
      if (e == 0) continue;
      Rational q = e * factorial(long(k)) * pow_rat(Rational(2), unsigned(k + 1)) /
                   double_factorial(2 * long(k) + 1);
      exp.constants[2 * k + 1] = ExactScalar::term(q, 2, 0);
    }
    return exp;
  }

  throw NotMonotoneBranch(
      "branch_time_series: side is " + b.name() +
      "; only nondegenerate-center and tangency branches admit a series");
}

namespace {

PeriodExpansion to_crossing(const PeriodExpansion& energy_exp,
                            PeriodExpansion::Param target) {
  PeriodExpansion r;
  r.param = target;
  r.leading = energy_exp.leading;
  r.omega_sq = energy_exp.omega_sq;
  r.constants.assign(energy_exp.constants.size(), ExactScalar());
  for (std::size_t k = 1; k < energy_exp.constants.size(); ++k)
    r.constants[k] = energy_exp.constants[k] * half_power_sub(k);
  return r;
}

PeriodExpansion sum_energy(const PeriodExpansion& a, const PeriodExpansion& b) {
  PeriodExpansion r;
  r.param = PeriodExpansion::Param::ByEnergy;
  r.leading = a.leading + b.leading;
  if (a.omega_sq && b.omega_sq) {
    if (*a.omega_sq == *b.omega_sq) r.omega_sq = a.omega_sq;
  } else if (a.omega_sq || b.omega_sq) {
    r.omega_sq = a.omega_sq ? a.omega_sq : b.omega_sq;
  }
  std::size_t n = std::min(a.constants.size(), b.constants.size());
  r.constants.assign(n, ExactScalar());
  for (std::size_t i = 1; i < n; ++i) r.constants[i] = a.constants[i] + b.constants[i];
  return r;
}

}  // namespace

PeriodExpansion coupled_expansion(const PiecewiseSystem& sys, std::size_t order) {
  CenterCase cc = classify_system(sys);
  switch (cc.tag) {
    case CenterCase::Tag::CaseI: {
      if (sys.topology == Topology::HorizontalPotentials) {
        return sum_energy(center_half_period_series(sys.v_minus, order),
                          center_half_period_series(sys.v_plus, order));
      }
      return sum_energy(branch_time_series(sys.v_minus, Side::Left, order),
                        branch_time_series(sys.v_plus, Side::Right, order));
    }
    case CenterCase::Tag::CaseIV:
    case CenterCase::Tag::CaseV: {
      PeriodExpansion sum =
          sum_energy(branch_time_series(sys.v_minus, Side::Left, order),
                     branch_time_series(sys.v_plus, Side::Right, order));
      return to_crossing(sum, PeriodExpansion::Param::ByYCrossing);
    }
    case CenterCase::Tag::TheoremA: {
      // Upper side: T~(V+(x)) by series composition in the crossing
      // coordinate; lower side: tangential branch transit at h = x^2/2.
      CenterTilde ct = center_tilde(sys.v_plus, order);
      TruncatedSeries tf(order, "h");
      for (std::size_t i = 1; i < ct.t.size(); ++i)
        if (i <= order) tf[i] = ct.t[i];
      TruncatedSeries comp = tf.compose(sys.v_plus.as_series(order));

      PeriodExpansion lower = to_crossing(
          branch_time_series(sys.v_minus, Side::Left, order),
          PeriodExpansion::Param::ByXCrossing);

      PeriodExpansion r;
      r.param = PeriodExpansion::Param::ByXCrossing;
      r.leading = ct.leading;
      r.omega_sq = sys.v_plus.coeff(2);
      r.constants.assign(order + 1, ExactScalar());
      for (std::size_t j = 1; j <= order; ++j)
        r.constants[j] = comp[j] * ct.leading + lower.constants[j];
      return r;
    }
    case CenterCase::Tag::NotMonodromic:
      throw NotMonodromicError("coupled_expansion: " + cc.reason);
    default:
      throw UnsupportedCase(
          "coupled_expansion: case " + cc.name() +
          " has a divergent period at the origin; use the divergence probe");
  }
}

std::optional<FirstNonzero> first_nonzero_constant(const PeriodExpansion& exp) {
  for (std::size_t i = 1; i < exp.constants.size(); ++i)
    if (!exp.constants[i].is_zero()) return FirstNonzero{i, exp.constants[i]};
  return std::nullopt;
}

}  // namespace isoperiod
