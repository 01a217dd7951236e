#ifndef ISOPERIOD_JSON_IO_HPP
#define ISOPERIOD_JSON_IO_HPP

#include <json.hpp>

#include "isoperiod/expansion.hpp"
#include "isoperiod/potential.hpp"
#include "isoperiod/quadrature.hpp"
#include "isoperiod/series.hpp"
#include "isoperiod/simulate.hpp"
#include "isoperiod/verdict.hpp"

namespace isoperiod {

using Json = nlohmann::ordered_json;

Json series_to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const Json& j);

Json potential_to_json(const Potential& v);
Potential potential_from_json(const Json& j);

Json system_to_json(const PiecewiseSystem& sys);
PiecewiseSystem system_from_json(const Json& j);

Json case_to_json(const CenterCase& cc);
Json expansion_to_json(const PeriodExpansion& e);
Json divergence_to_json(const DivergenceFit& f);
Json table_to_json(const PeriodTable& t);
Json orbit_to_json(const OrbitRun& run);
Json verdict_to_json(const IsochronyVerdict& v);

}  // namespace isoperiod

#endif
