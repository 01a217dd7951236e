#include "isoperiod/potential.hpp"

#include <cmath>
#include <cstdlib>

#include "isoperiod/errors.hpp"

namespace isoperiod {

Potential::Potential(std::map<unsigned, Rational> coeffs, double domain_bound)
    : coeffs_(std::move(coeffs)), domain_bound_(domain_bound) {
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    if (it->second == 0) it = coeffs_.erase(it);
    else ++it;
  }
  if (coeffs_.count(0))
    throw ConfigError("Potential: degree-0 coefficient not allowed (V(0) must be 0)");
  if (coeffs_.empty())
    throw ConfigError("Potential: at least one nonzero coefficient required");
  if (domain_bound_ <= 0)
    throw ConfigError("Potential: domain_bound must be positive");
}

unsigned Potential::degree() const { return coeffs_.rbegin()->first; }

Rational Potential::coeff(unsigned k) const {
  auto it = coeffs_.find(k);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

Rational Potential::eval_exact(const Rational& x, unsigned d) const {
  Rational acc(0);
  for (const auto& [k, c] : coeffs_) {
    if (k < d) continue;
    Rational term = c;
    for (unsigned j = 0; j < d; ++j) term *= Rational(k - j);
    Rational xp(1);
    for (unsigned j = 0; j < k - d; ++j) xp *= x;
    acc += term * xp;
  }
  return acc;
}

double Potential::eval(double x, unsigned d) const {
  if (std::abs(x) > domain_bound_)
    throw OutOfDomain("Potential::eval: |x| exceeds domain_bound");
  double acc = 0.0;
  std::vector<double> cs = coeffs_double();
  for (std::size_t k = cs.size(); k-- > d;) {
    double term = cs[k];
    for (unsigned j = 0; j < d; ++j) term *= double(k - j);
    acc = acc * x + term;
  }
  return acc;
}

TruncatedSeries Potential::as_series(std::size_t order) const {
  TruncatedSeries s(order, "x");
  for (const auto& [k, c] : coeffs_)
    if (k <= order) s[k] = c;
  return s;
}

Potential Potential::mirrored() const {
  std::map<unsigned, Rational> c;
  for (const auto& [k, v] : coeffs_) c[k] = (k % 2 == 0) ? v : -v;
  return Potential(std::move(c), domain_bound_);
}

Potential Potential::scaled(const Rational& lambda) const {
  std::map<unsigned, Rational> c;
  for (const auto& [k, v] : coeffs_) c[k] = lambda * v;
  return Potential(std::move(c), domain_bound_);
}

std::vector<double> Potential::coeffs_double() const {
  std::vector<double> cs(degree() + 1, 0.0);
  for (const auto& [k, c] : coeffs_) cs[k] = to_double(c);
  return cs;
}

int SideBehavior::flatness() const {
  if (auto* c = std::get_if<NondegenerateCenter>(&v)) { (void)c; return 2; }
  if (auto* c = std::get_if<DegenerateCenter>(&v)) return 2 * c->r;
  if (auto* c = std::get_if<Cusp>(&v)) return 2 * c->r + 1;
  if (std::holds_alternative<Tangency>(v)) return 1;
  return 0;
}

std::string SideBehavior::name() const {
  if (is_center()) return "nondegenerate_center";
  if (is_degenerate()) return "degenerate_center";
  if (is_cusp()) return "cusp";
  if (is_tangency()) return "tangency";
  return "invalid";
}

SideBehavior classify_side(const Potential& V, Side side) {
  // First nonzero coefficient decides; exact rational sign tests throughout.
  unsigned k = V.coeffs().begin()->first;
  Rational c = V.coeffs().begin()->second;
  SideBehavior b;
  if (k == 1) {
    bool ok = (side == Side::Left) ? (c < 0) : (c > 0);
    if (ok)
      b.v = SideBehavior::Tangency{c};
    else
      b.v = SideBehavior::Invalid{
          std::string("V'(0) has the escaping sign on the ") + side_name(side) +
          " side; the origin is not monodromic there"};
  } else if (k % 2 == 0) {
    if (c > 0) {
      if (k == 2)
        b.v = SideBehavior::NondegenerateCenter{c};
      else
        b.v = SideBehavior::DegenerateCenter{int(k / 2)};
    } else {
      b.v = SideBehavior::Invalid{
          "leading even coefficient is negative; no potential well at 0"};
    }
  } else {
    int r = int((k - 1) / 2);
    bool ok = (side == Side::Left) ? (c < 0) : (c > 0);
    if (ok)
      b.v = SideBehavior::Cusp{r};
    else
      b.v = SideBehavior::Invalid{
          std::string("odd leading coefficient has the escaping sign on the ") +
          side_name(side) + " side"};
  }
  return b;
}

const char* topology_name(Topology t) {
  switch (t) {
    case Topology::VerticalSwitch: return "vertical";
    case Topology::HorizontalPotentials: return "horizontal-potentials";
    case Topology::HorizontalMixed: return "horizontal-mixed";
  }
  return "?";
}

std::string CenterCase::name() const {
  switch (tag) {
    case Tag::CaseI: return "i";
    case Tag::CaseII: return "ii";
    case Tag::CaseIII: return "iii";
    case Tag::CaseIV: return "iv";
    case Tag::CaseV: return "v";
    case Tag::CaseVI: return "vi";
    case Tag::CaseVII: return "vii";
    case Tag::CaseVIII: return "viii";
    case Tag::TheoremA: return "theorem_a";
    case Tag::NotMonodromic: return "not_monodromic";
  }
  return "?";
}

namespace {

int side_r(const SideBehavior& b) {
  if (b.is_center()) return 1;
  if (auto* d = std::get_if<SideBehavior::DegenerateCenter>(&b.v)) return d->r;
  if (auto* c = std::get_if<SideBehavior::Cusp>(&b.v)) return c->r;
  return 0;
}

}  // namespace

CenterCase classify_system(const PiecewiseSystem& sys) {
  CenterCase cc;
  if (sys.topology == Topology::HorizontalMixed) {
    // Upper potential must be a nondegenerate center, lower tangential field
    // must have (V-)'(0) < 0.
    SideBehavior up = classify_side(sys.v_plus, Side::Right);
    bool upper_center = sys.v_plus.coeff(1) == 0 && sys.v_plus.coeff(2) > 0;
    bool lower_tangent = sys.v_minus.coeff(1) < 0;
    if (upper_center && lower_tangent) {
      cc.tag = CenterCase::Tag::TheoremA;
      cc.s = 1;
      return cc;
    }
    (void)up;
    cc.tag = CenterCase::Tag::NotMonodromic;
    cc.reason = upper_center
                    ? "lower tangential field requires (V-)'(0) < 0"
                    : "upper potential is not a nondegenerate center";
    return cc;
  }

  SideBehavior left = classify_side(sys.v_minus, Side::Left);
  SideBehavior right = classify_side(sys.v_plus, Side::Right);
  if (left.is_invalid() || right.is_invalid()) {
    cc.tag = CenterCase::Tag::NotMonodromic;
    cc.reason = left.is_invalid() ? std::get<SideBehavior::Invalid>(left.v).reason
                                  : std::get<SideBehavior::Invalid>(right.v).reason;
    return cc;
  }

  if (sys.topology == Topology::HorizontalPotentials) {
    // Sys2 style: the switching line y = 0 cuts two full potential wells;
    // monodromy needs a nondegenerate well on each side of x = 0 for both
    // potentials, which reduces to both being nondegenerate centers.
    bool mc = sys.v_minus.coeff(1) == 0 && sys.v_minus.coeff(2) > 0;
    bool pc = sys.v_plus.coeff(1) == 0 && sys.v_plus.coeff(2) > 0;
    if (mc && pc) {
      cc.tag = CenterCase::Tag::CaseI;
      cc.r = cc.s = 1;
      return cc;
    }
    cc.tag = CenterCase::Tag::NotMonodromic;
    cc.reason = "horizontal potential pair requires nondegenerate wells on both sides";
    return cc;
  }

  // VerticalSwitch: the (i)-(viii) table.
  cc.r = side_r(left);
  cc.s = side_r(right);
  cc.flatter_side = left.flatness() >= right.flatness() ? Side::Left : Side::Right;
  cc.mirrored = left.flatness() < right.flatness();

  bool lc = left.is_center() || left.is_degenerate();
  bool rc = right.is_center() || right.is_degenerate();
  if (lc && rc) {
    cc.tag = (left.is_center() && right.is_center()) ? CenterCase::Tag::CaseI
                                                     : CenterCase::Tag::CaseII;
  } else if (left.is_cusp() && right.is_cusp()) {
    cc.tag = CenterCase::Tag::CaseIII;
  } else if (left.is_tangency() && right.is_tangency()) {
    cc.tag = CenterCase::Tag::CaseIV;
  } else if ((left.is_center() && right.is_tangency()) ||
             (left.is_tangency() && right.is_center())) {
    cc.tag = CenterCase::Tag::CaseV;
  } else if ((left.is_degenerate() && right.is_tangency()) ||
             (left.is_tangency() && right.is_degenerate())) {
    cc.tag = CenterCase::Tag::CaseVI;
  } else if ((left.is_cusp() && rc) || (lc && right.is_cusp())) {
    cc.tag = CenterCase::Tag::CaseVII;
  } else if ((left.is_cusp() && right.is_tangency()) ||
             (left.is_tangency() && right.is_cusp())) {
    cc.tag = CenterCase::Tag::CaseVIII;
  } else {
    cc.tag = CenterCase::Tag::NotMonodromic;
    cc.reason = "side behaviors do not match any admitted case";
  }
  return cc;
}

}  // namespace isoperiod
