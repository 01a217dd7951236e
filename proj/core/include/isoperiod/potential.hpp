#ifndef ISOPERIOD_POTENTIAL_HPP
#define ISOPERIOD_POTENTIAL_HPP

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "isoperiod/rational.hpp"
#include "isoperiod/series.hpp"

namespace isoperiod {

enum class Side { Left, Right };

inline const char* side_name(Side s) { return s == Side::Left ? "left" : "right"; }

// Polynomial potential V(x) = sum_{k>=1} c_k x^k with exact rational
// coefficients and V(0) = 0. domain_bound limits every numerical search.
class Potential {
 public:
  Potential(std::map<unsigned, Rational> coeffs, double domain_bound = 10.0);

  const std::map<unsigned, Rational>& coeffs() const { return coeffs_; }
  double domain_bound() const { return domain_bound_; }
  unsigned degree() const;
  // Coefficient of x^k (zero when absent).
  Rational coeff(unsigned k) const;

  // Exact value of the derivative_order-th derivative at rational x.
  Rational eval_exact(const Rational& x, unsigned derivative_order = 0) const;
  // Float evaluation; throws OutOfDomain when |x| > domain_bound.
  double eval(double x, unsigned derivative_order = 0) const;

  // Coefficients c_1..c_order as a truncated series in x (c_0 = 0).
  TruncatedSeries as_series(std::size_t order) const;

  // V(-x).
  Potential mirrored() const;
  // lambda * V(x).
  Potential scaled(const Rational& lambda) const;

  std::vector<double> coeffs_double() const;  // index k -> c_k, dense

 private:
  std::map<unsigned, Rational> coeffs_;
  double domain_bound_;
};

// Local behavior of one side of the switching line, decided by exact sign
// tests on the first nonzero derivative at 0.
struct SideBehavior {
  struct NondegenerateCenter {
    Rational omega_sq;  // V''(0)/2 = c2
  };
  struct DegenerateCenter {
    int r;  // first nonzero derivative has order 2r, r > 1
  };
  struct Cusp {
    int r;  // first nonzero derivative has order 2r+1
  };
  struct Tangency {
    Rational slope;  // V'(0), side-appropriate sign
  };
  struct Invalid {
    std::string reason;
  };
  std::variant<NondegenerateCenter, DegenerateCenter, Cusp, Tangency, Invalid> v;

  bool is_center() const { return std::holds_alternative<NondegenerateCenter>(v); }
  bool is_degenerate() const { return std::holds_alternative<DegenerateCenter>(v); }
  bool is_cusp() const { return std::holds_alternative<Cusp>(v); }
  bool is_tangency() const { return std::holds_alternative<Tangency>(v); }
  bool is_invalid() const { return std::holds_alternative<Invalid>(v); }
  // Order of the first nonzero derivative at 0 (flatness): 1 for tangency,
  // 2r for centers, 2r+1 for cusps.
  int flatness() const;
  std::string name() const;
};

SideBehavior classify_side(const Potential& V, Side side);

enum class Topology {
  VerticalSwitch,         // switching line x = 0, potentials V-(x), V+(x)
  HorizontalPotentials,   // switching line y = 0, potentials on both sides
  HorizontalMixed,        // switching line y = 0, potential above, tangential field below
};

const char* topology_name(Topology t);

struct PiecewiseSystem {
  Topology topology;
  Potential v_minus;
  Potential v_plus;
  // Upper bound of the analyzed energy range; <= 0 means "derive a default".
  Rational h_max = 0;
};

struct CenterCase {
  enum class Tag {
    CaseI, CaseII, CaseIII, CaseIV, CaseV, CaseVI, CaseVII, CaseVIII,
    TheoremA, NotMonodromic,
  };
  Tag tag = Tag::NotMonodromic;
  // Flatness parameters: r for the left side, s for the right side, in the
  // orientation of the input system (0 when not meaningful for the side).
  int r = 0;
  int s = 0;
  // Which side is at least as flat (drives the divergence probe).
  Side flatter_side = Side::Left;
  // Set when the "left side at least as flat" normalization required an
  // internal mirror.
  bool mirrored = false;
  std::string reason;  // for NotMonodromic

  bool is_fold_fold() const { return tag == Tag::CaseIV; }
  bool monodromic() const { return tag != Tag::NotMonodromic; }
  std::string name() const;
};

CenterCase classify_system(const PiecewiseSystem& sys);

}  // namespace isoperiod

#endif
