#include <doctest.h>

#include <random>

#include "isoperiod/errors.hpp"
#include "isoperiod/potential.hpp"

using namespace isoperiod;

namespace {

Potential P(std::map<unsigned, Rational> c) { return Potential(std::move(c)); }

}  // namespace

TEST_CASE("evaluation") {
  CHECK(P({{2, 1}}).eval(2.0) == doctest::Approx(4.0));
  CHECK(P({{2, 1}, {3, 1}}).eval(1.0) == doctest::Approx(2.0));
  CHECK(P({{4, 1}}).eval(0.0, 4) == doctest::Approx(24.0));
  CHECK(P({{2, 1}, {3, 1}}).eval_exact(Rational(2), 1) == Rational(16));
  CHECK_THROWS_AS(P({{2, 1}}).eval(11.0), OutOfDomain);
}

TEST_CASE("potential invariants") {
  CHECK_THROWS_AS(P({{0, 1}, {2, 1}}), ConfigError);
  CHECK_THROWS_AS(P({{2, 0}}), ConfigError);
  CHECK(P({{2, 1}, {5, 0}}).degree() == 2);
}

TEST_CASE("classify_side examples") {
  SideBehavior b = classify_side(P({{2, 1}}), Side::Left);
  REQUIRE(b.is_center());
  CHECK(std::get<SideBehavior::NondegenerateCenter>(b.v).omega_sq == 1);

  b = classify_side(P({{3, -1}}), Side::Left);
  REQUIRE(b.is_cusp());
  CHECK(std::get<SideBehavior::Cusp>(b.v).r == 1);

  b = classify_side(P({{1, 1}}), Side::Right);
  REQUIRE(b.is_tangency());
  CHECK(std::get<SideBehavior::Tangency>(b.v).slope == 1);

  b = classify_side(P({{4, 1}}), Side::Left);
  REQUIRE(b.is_degenerate());
  CHECK(std::get<SideBehavior::DegenerateCenter>(b.v).r == 2);

  CHECK(classify_side(P({{1, 1}}), Side::Left).is_invalid());
  CHECK(classify_side(P({{2, -1}}), Side::Right).is_invalid());
}

TEST_CASE("flatness ordering") {
  CHECK(classify_side(P({{1, 1}}), Side::Right).flatness() == 1);
  CHECK(classify_side(P({{2, 1}}), Side::Right).flatness() == 2);
  CHECK(classify_side(P({{4, 1}}), Side::Right).flatness() == 4);
  CHECK(classify_side(P({{5, 1}}), Side::Right).flatness() == 5);
}

TEST_CASE("mirror symmetry of side classification") {
  std::mt19937 rng(42);
  std::uniform_int_distribution<long> num(-4, 4);
  std::uniform_int_distribution<unsigned> deg(1, 6);
  for (int trial = 0; trial < 100; ++trial) {
    std::map<unsigned, Rational> c;
    for (unsigned k = 1; k <= deg(rng); ++k) {
      long v = num(rng);
      if (v != 0) c[k] = Rational(v);
    }
    if (c.empty()) continue;
    Potential V(c);
    SideBehavior l = classify_side(V, Side::Left);
    SideBehavior m = classify_side(V.mirrored(), Side::Right);
    CHECK(l.name() == m.name());
    CHECK(l.flatness() == m.flatness());
  }
}

TEST_CASE("classify_system table") {
  auto cs = [](Potential vm, Potential vp, Topology t = Topology::VerticalSwitch) {
    return classify_system({t, std::move(vm), std::move(vp)});
  };
  CHECK(cs(P({{1, -1}}), P({{1, 1}})).tag == CenterCase::Tag::CaseIV);
  CHECK(cs(P({{2, 1}}), P({{1, 1}})).tag == CenterCase::Tag::CaseV);
  CHECK(cs(P({{2, 1}}), P({{2, 1}})).tag == CenterCase::Tag::CaseI);
  CHECK(cs(P({{4, 1}}), P({{2, 1}})).tag == CenterCase::Tag::CaseII);
  CHECK(cs(P({{3, -1}}), P({{3, 1}})).tag == CenterCase::Tag::CaseIII);
  CHECK(cs(P({{4, 1}}), P({{1, 1}})).tag == CenterCase::Tag::CaseVI);
  CHECK(cs(P({{3, -1}}), P({{2, 1}})).tag == CenterCase::Tag::CaseVII);
  CHECK(cs(P({{3, -1}}), P({{1, 1}})).tag == CenterCase::Tag::CaseVIII);
  CHECK(cs(P({{1, 1}}), P({{1, 1}})).tag == CenterCase::Tag::NotMonodromic);

  CenterCase ii = cs(P({{4, 1}}), P({{2, 1}}));
  CHECK(ii.r == 2);
  CHECK(ii.s == 1);
  CHECK(ii.flatter_side == Side::Left);
  CHECK_FALSE(ii.mirrored);

  CenterCase ii_m = cs(P({{2, 1}}), P({{4, 1}}));
  CHECK(ii_m.tag == CenterCase::Tag::CaseII);
  CHECK(ii_m.flatter_side == Side::Right);
  CHECK(ii_m.mirrored);
}

TEST_CASE("classify_system horizontal topologies") {
  PiecewiseSystem thma{Topology::HorizontalMixed, P({{1, -1}}), P({{2, 1}})};
  CHECK(classify_system(thma).tag == CenterCase::Tag::TheoremA);

  PiecewiseSystem bad{Topology::HorizontalMixed, P({{1, 1}}), P({{2, 1}})};
  CenterCase cc = classify_system(bad);
  CHECK(cc.tag == CenterCase::Tag::NotMonodromic);
  CHECK_FALSE(cc.reason.empty());

  PiecewiseSystem hp{Topology::HorizontalPotentials, P({{2, 1}}), P({{2, 2}})};
  CHECK(classify_system(hp).tag == CenterCase::Tag::CaseI);
  PiecewiseSystem hp_bad{Topology::HorizontalPotentials, P({{4, 1}}), P({{2, 2}})};
  CHECK(classify_system(hp_bad).tag == CenterCase::Tag::NotMonodromic);
}

TEST_CASE("classify_system is mirror-stable") {
  std::mt19937 rng(123);
  std::uniform_int_distribution<long> num(-3, 3);
  for (int trial = 0; trial < 100; ++trial) {
    std::map<unsigned, Rational> cm, cp;
    for (unsigned k = 1; k <= 5; ++k) {
      long a = num(rng), b = num(rng);
      if (a != 0) cm[k] = Rational(a);
      if (b != 0) cp[k] = Rational(b);
    }
    if (cm.empty() || cp.empty()) continue;
    Potential vm(cm), vp(cp);
    CenterCase direct = classify_system({Topology::VerticalSwitch, vm, vp});
    CenterCase swapped =
        classify_system({Topology::VerticalSwitch, vp.mirrored(), vm.mirrored()});
    CHECK(direct.name() == swapped.name());
  }
}
