#include <doctest.h>

#include <cmath>

#include "isoperiod/analysis.hpp"
#include "isoperiod/json_io.hpp"
#include "isoperiod/verdict.hpp"

using namespace isoperiod;

namespace {

Potential P(std::map<unsigned, Rational> c) { return Potential(std::move(c)); }

using IV = IsochronyVerdict;

}  // namespace

TEST_CASE("divergent flat side") {
  IV v = verdict({Topology::VerticalSwitch, P({{4, 1}}), P({{2, 1}})});
  REQUIRE(v.not_isochronous());
  const auto& ni = std::get<IV::NotIsochronous>(v.v);
  const auto* d = std::get_if<IV::DivergentPeriodAtOrigin>(&ni.evidence);
  REQUIRE(d != nullptr);
  CHECK(d->predicted_exponent == doctest::Approx(-1.0));
  CHECK(d->fitted_exponent == doctest::Approx(-1.0).epsilon(0.05));
  CHECK(v.center_case.tag == CenterCase::Tag::CaseII);
}

TEST_CASE("divergent flat side, mirrored") {
  IV v = verdict({Topology::VerticalSwitch, P({{2, 1}}), P({{6, 1}})});
  REQUIRE(v.not_isochronous());
  const auto& ni = std::get<IV::NotIsochronous>(v.v);
  const auto* d = std::get_if<IV::DivergentPeriodAtOrigin>(&ni.evidence);
  REQUIRE(d != nullptr);
  CHECK(d->predicted_exponent == doctest::Approx(-2.0));
  CHECK(d->fitted_exponent == doctest::Approx(-2.0).epsilon(0.05));
  CHECK(v.center_case.mirrored);
}

TEST_CASE("first nonzero constant evidence") {
  IV v = verdict({Topology::HorizontalMixed, P({{1, -1}}), P({{2, 1}})});
  REQUIRE(v.not_isochronous());
  const auto& ni = std::get<IV::NotIsochronous>(v.v);
  const auto* f = std::get_if<IV::FirstNonzeroConstant>(&ni.evidence);
  REQUIRE(f != nullptr);
  CHECK(f->index == 1);
  CHECK(f->value == ExactScalar(2));
  CHECK(v.center_case.tag == CenterCase::Tag::TheoremA);
}

TEST_CASE("fold-fold: period vanishes at the origin") {
  IV v = verdict({Topology::VerticalSwitch, P({{1, -1}}), P({{1, 1}})});
  REQUIRE(v.not_isochronous());
  const auto& ni = std::get<IV::NotIsochronous>(v.v);
  const auto* p = std::get_if<IV::PeriodVanishesAtOrigin>(&ni.evidence);
  REQUIRE(p != nullptr);
  CHECK(p->t1 == ExactScalar(4));
}

TEST_CASE("isochronous linear case") {
  IV v = verdict({Topology::VerticalSwitch, P({{2, 1}}), P({{2, 1}})});
  const auto* iso = std::get_if<IV::IsochronousLinearCase>(&v.v);
  REQUIRE(iso != nullptr);
  CHECK(iso->omega_minus == doctest::Approx(1.0));
  CHECK(iso->omega_plus == doctest::Approx(1.0));

  IV v2 = verdict({Topology::VerticalSwitch, P({{2, 1}}), P({{2, 2}})});
  const auto* iso2 = std::get_if<IV::IsochronousLinearCase>(&v2.v);
  REQUIRE(iso2 != nullptr);
  CHECK(iso2->omega_plus == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("nonlinear centers with nonzero constants are rejected") {
  IV v = verdict({Topology::VerticalSwitch, P({{2, 1}, {3, 1}}), P({{2, 1}})});
  REQUIRE(v.not_isochronous());
  const auto& ni = std::get<IV::NotIsochronous>(v.v);
  CHECK(std::holds_alternative<IV::FirstNonzeroConstant>(ni.evidence));
}

TEST_CASE("not monodromic") {
  IV v = verdict({Topology::VerticalSwitch, P({{1, 1}}), P({{1, 1}})});
  const auto* nm = std::get_if<IV::NotMonodromic>(&v.v);
  REQUIRE(nm != nullptr);
  CHECK_FALSE(nm->reason.empty());
}

TEST_CASE("every divergent-case fixture is certified non-isochronous") {
  struct Fixture {
    Potential vm, vp;
    CenterCase::Tag tag;
  };
  std::vector<Fixture> fixtures = {
      {P({{4, 1}}), P({{2, 1}}), CenterCase::Tag::CaseII},
      {P({{3, -1}}), P({{3, 1}}), CenterCase::Tag::CaseIII},
      {P({{4, 1}}), P({{1, 1}}), CenterCase::Tag::CaseVI},
      {P({{3, -1}}), P({{2, 1}}), CenterCase::Tag::CaseVII},
      {P({{3, -1}}), P({{1, 1}}), CenterCase::Tag::CaseVIII},
      {P({{5, -1}}), P({{1, 1}}), CenterCase::Tag::CaseVIII},
  };
  for (const auto& fx : fixtures) {
    IV v = verdict({Topology::VerticalSwitch, fx.vm, fx.vp});
    CHECK(v.center_case.tag == fx.tag);
    CHECK(v.not_isochronous());
    const auto& ni = std::get<IV::NotIsochronous>(v.v);
    CHECK(std::holds_alternative<IV::DivergentPeriodAtOrigin>(ni.evidence));
  }
}

TEST_CASE("verdict JSON is deterministic") {
  PiecewiseSystem sys{Topology::HorizontalMixed, P({{1, -2}, {2, 1}}),
                      P({{2, 3}, {3, rat(1, 2)}})};
  std::string a = dump_deterministic(verdict_to_json(verdict(sys)));
  std::string b = dump_deterministic(verdict_to_json(verdict(sys)));
  CHECK(a == b);
  CHECK(a.find("\"verdict\": \"not_isochronous\"") != std::string::npos);
  CHECK(a.find("\"case\": \"theorem_a\"") != std::string::npos);
}
