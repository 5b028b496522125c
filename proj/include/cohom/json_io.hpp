#pragma once
// JSON forms of the library's records. Rationals are "num/den" strings.

#include "json.hpp"

#include "cohom/analysis.hpp"

namespace cohom {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);  // accepts "p/q" or "p"

Json to_json(const SeriesSolution& sol);
// Rebuilds the solution, its case record and system from to_json output.
SeriesSolution series_solution_from_json(const Json& j);

Json to_json(const OrbitCase& oc);
Json case_catalog_json();

Json to_json(const TorusModuleSum& m);
struct DimRow {
  int m = 0;
  Part part = Part::h;
  int dim = 0;
};
Json to_json(const std::vector<DimRow>& rows);

Json to_json(const MonitorReport& r);
Json to_json(const FVanishingRecord& r);
Json to_json(const Su4Verdict& v);
Json to_json(const CrossCheck& c);
Json to_json(const VerifyReport& r);

}  // namespace cohom
