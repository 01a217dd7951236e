#include "isoperiod/json_io.hpp"

#include <cmath>

#include "isoperiod/errors.hpp"

namespace isoperiod {

namespace {

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw ConfigError("expected an exact rational as \"p/q\" string or integer, got: " +
                    j.dump());
}

}  // namespace

Json series_to_json(const TruncatedSeries& s) {
  Json coeffs = Json::array();
  for (std::size_t i = 0; i <= s.order(); ++i) coeffs.push_back(to_string(s[i]));
  return Json{{"order", s.order()}, {"coeffs", coeffs}, {"var", s.var()}};
}

TruncatedSeries series_from_json(const Json& j) {
  std::vector<Rational> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(rational_from_json(c));
  std::size_t order = j.at("order").get<std::size_t>();
  if (coeffs.size() != order + 1)
    throw ConfigError("series: coeffs must have exactly order+1 entries");
  return TruncatedSeries(std::move(coeffs), j.value("var", "t"));
}

Json potential_to_json(const Potential& v) {
  Json coeffs = Json::object();
  for (const auto& [k, c] : v.coeffs()) coeffs[std::to_string(k)] = to_string(c);
  return Json{{"coeffs", coeffs}, {"domain_bound", v.domain_bound()}};
}

Potential potential_from_json(const Json& j) {
  if (!j.contains("coeffs")) throw ConfigError("potential: missing \"coeffs\"");
  std::map<unsigned, Rational> coeffs;
  for (const auto& [key, val] : j.at("coeffs").items()) {
    unsigned k = 0;
    try {
      k = unsigned(std::stoul(key));
    } catch (const std::exception&) {
      throw ConfigError("potential: bad degree key '" + key + "'");
    }
    coeffs[k] = rational_from_json(val);
  }
  return Potential(std::move(coeffs), j.value("domain_bound", 10.0));
}

Json system_to_json(const PiecewiseSystem& sys) {
  Json j{{"topology", topology_name(sys.topology)},
         {"v_minus", potential_to_json(sys.v_minus)},
         {"v_plus", potential_to_json(sys.v_plus)}};
  if (sys.h_max > 0) j["h_max"] = to_string(sys.h_max);
  return j;
}

PiecewiseSystem system_from_json(const Json& j) {
  for (const char* field : {"topology", "v_minus", "v_plus"})
    if (!j.contains(field))
      throw ConfigError(std::string("system: missing \"") + field + "\"");
  std::string t = j.at("topology").get<std::string>();
  Topology topo;
  if (t == "vertical")
    topo = Topology::VerticalSwitch;
  else if (t == "horizontal-potentials" || t == "horizontal_potentials")
    topo = Topology::HorizontalPotentials;
  else if (t == "horizontal-mixed" || t == "horizontal_mixed")
    topo = Topology::HorizontalMixed;
  else
    throw ConfigError("system: unknown topology '" + t + "'");
  PiecewiseSystem sys{topo, potential_from_json(j.at("v_minus")),
                      potential_from_json(j.at("v_plus"))};
  if (j.contains("h_max")) sys.h_max = rational_from_json(j.at("h_max"));
  return sys;
}

Json case_to_json(const CenterCase& cc) {
  Json j{{"case", cc.name()}};
  if (cc.tag != CenterCase::Tag::NotMonodromic &&
      cc.tag != CenterCase::Tag::TheoremA) {
    j["r"] = cc.r;
    j["s"] = cc.s;
    j["flatter_side"] = side_name(cc.flatter_side);
    j["mirrored"] = cc.mirrored;
  }
  if (cc.tag == CenterCase::Tag::NotMonodromic) j["reason"] = cc.reason;
  return j;
}

Json expansion_to_json(const PeriodExpansion& e) {
  Json leading{{"exact", e.leading.str()}, {"value", e.leading.value()}};
  if (e.omega_sq) {
    // Try to express the leading block as q * pi / (sqrt(2) omega).
    ExactScalar unit = ExactScalar::term(1, Rational(1) / (2 * *e.omega_sq), 1);
    Json q;
    if (e.leading.is_zero()) {
      q = "0";
    } else if (unit.terms().size() == 1 && e.leading.terms().size() == 1 &&
               e.leading.terms().begin()->first == unit.terms().begin()->first) {
      q = to_string(e.leading.terms().begin()->second /
                    unit.terms().begin()->second);
    }
    if (!q.is_null()) leading["pi_over_sqrt2_coeff"] = q;
    leading["omega"] = std::sqrt(to_double(*e.omega_sq));
    leading["omega_squared"] = to_string(*e.omega_sq);
  }
  Json constants = Json::array();
  Json values = Json::array();
  for (std::size_t i = 1; i < e.constants.size(); ++i) {
    constants.push_back(e.constants[i].str());
    values.push_back(e.constants[i].value());
  }
  return Json{{"param", PeriodExpansion::param_name(e.param)},
              {"leading", leading},
              {"constants", constants},
              {"constants_value", values},
              {"order", e.order()},
              {"exact", true}};
}

Json divergence_to_json(const DivergenceFit& f) {
  return Json{{"r", f.r},
              {"i", f.i},
              {"rho", f.rho_values},
              {"times", f.times},
              {"fitted_exponent", f.fitted_exponent},
              {"predicted_exponent", f.predicted_exponent}};
}

Json table_to_json(const PeriodTable& t) {
  Json rows = Json::array();
  for (const auto& r : t.rows)
    rows.push_back(Json{{"h", r.h},
                        {"T_total", r.t_total},
                        {"T_minus", r.t_minus},
                        {"T_plus", r.t_plus},
                        {"cross_1", r.cross_1},
                        {"cross_2", r.cross_2},
                        {"non_closed", r.non_closed}});
  return Json{{"case", t.case_name}, {"rows", rows}};
}

Json orbit_to_json(const OrbitRun& run) {
  Json events = Json::array();
  for (const auto& e : run.events)
    events.push_back(Json{{"t", e.t},
                          {"x", e.state[0]},
                          {"y", e.state[1]},
                          {"side_from", e.side_from},
                          {"side_to", e.side_to}});
  return Json{{"return_time", run.return_time},
              {"closed", run.closed},
              {"return_point", {run.return_state[0], run.return_state[1]}},
              {"steps", run.states.size()},
              {"events", events}};
}

Json verdict_to_json(const IsochronyVerdict& v) {
  Json j;
  using IV = IsochronyVerdict;
  if (const auto* ni = std::get_if<IV::NotIsochronous>(&v.v)) {
    j["verdict"] = "not_isochronous";
    Json ev;
    if (const auto* f = std::get_if<IV::FirstNonzeroConstant>(&ni->evidence)) {
      ev = Json{{"kind", "first_nonzero_constant"},
                {"index", f->index},
                {"value", f->value.str()},
                {"value_float", f->value.value()}};
    } else if (const auto* d = std::get_if<IV::DivergentPeriodAtOrigin>(&ni->evidence)) {
      ev = Json{{"kind", "divergent_period_at_origin"},
                {"case", d->case_name},
                {"predicted_exponent", d->predicted_exponent},
                {"fitted_exponent", d->fitted_exponent}};
    } else if (const auto* p = std::get_if<IV::PeriodVanishesAtOrigin>(&ni->evidence)) {
      ev = Json{{"kind", "period_vanishes_at_origin"},
                {"t1", p->t1.str()},
                {"t1_float", p->t1.value()}};
    }
    j["evidence"] = ev;
  } else if (const auto* iso = std::get_if<IV::IsochronousLinearCase>(&v.v)) {
    j["verdict"] = "isochronous_linear";
    j["omega_minus"] = iso->omega_minus;
    j["omega_plus"] = iso->omega_plus;
  } else if (const auto* u = std::get_if<IV::UndeterminedUpToOrder>(&v.v)) {
    j["verdict"] = "undetermined_up_to_order";
    j["up_to_order"] = u->order;
  } else if (const auto* nm = std::get_if<IV::NotMonodromic>(&v.v)) {
    j["verdict"] = "not_monodromic";
    j["reason"] = nm->reason;
  }
  j["case"] = v.center_case.name();
  j["order"] = v.order;
  return j;
}

}  // namespace isoperiod
