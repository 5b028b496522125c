#include "cohom/json_io.hpp"

#include <stdexcept>

namespace cohom {

namespace {

std::string parity_name(Parity p) {
  switch (p) {
    case Parity::even: return "even";
    case Parity::odd: return "odd";
    case Parity::mirror: return "mirror";
  }
  return "?";
}

Json params_json(const Params& p) {
  Json j = Json::object();
  for (const auto& [k, v] : p) j[k] = to_json(v);
  return j;
}

Json slot_specs(const std::vector<SlotSpec>& v) {
  Json a = Json::array();
  for (const auto& s : v) a.push_back({{"label", s.label}, {"order", s.order}, {"param", s.param}});
  return a;
}

bool uses_kl(CaseId id) { return id == CaseId::A || id == CaseId::E; }

}  // namespace

Json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw std::invalid_argument("rational must be a \"num/den\" string");
  return Rational::parse(j.get<std::string>());
}

Json to_json(const SeriesSolution& sol) {
  Json j;
  j["case"] = std::string(1, case_letter(sol.oc.id));
  if (uses_kl(sol.oc.id)) {
    j["k"] = sol.system.aw.k;
    j["l"] = sol.system.aw.l;
  }
  j["system"] = sol.system.label();
  j["einstein"] = sol.einstein;
  j["lambda"] = to_json(sol.lambda);
  j["order"] = sol.order;
  j["params"] = params_json(sol.params);
  Json fns = Json::object();
  for (size_t i = 0; i < sol.functions.size(); ++i) {
    Json a = Json::array();
    for (const auto& c : sol.functions[i].coeffs()) a.push_back(to_json(c));
    fns[sol.names()[i]] = a;
  }
  j["functions"] = fns;
  Json slots = Json::array();
  for (const auto& s : sol.slots) {
    Json fn = Json::object();
    for (const auto& [k, v] : s.functional) fn[k] = to_json(v);
    slots.push_back({{"label", s.label}, {"order", s.order}, {"value", to_json(s.value)}, {"declared", s.declared},
                     {"functional", fn}});
  }
  j["free_slots"] = slots;
  Json diag = Json::array();
  for (const auto& d : sol.diagnostics)
    diag.push_back({{"order", d.order},
                    {"unknowns", d.unknowns},
                    {"equations", d.equations},
                    {"rank", d.rank},
                    {"nullity", d.nullity}});
  j["diagnostics"] = diag;
  j["flags"] = sol.flags;
  return j;
}

SeriesSolution series_solution_from_json(const Json& j) {
  SeriesSolution sol;
  CaseId id = case_from_letter(j.at("case").get<std::string>());
  std::optional<AloffWallach> aw;
  if (uses_kl(id) && j.contains("k")) aw = AloffWallach::make(j.at("k").get<int>(), j.at("l").get<int>());
  sol.oc = orbit_case(id, aw);
  sol.einstein = j.value("einstein", false);
  sol.system = sol.einstein ? sol.oc.system.einstein_version() : sol.oc.system;
  sol.lambda = j.contains("lambda") ? rational_from_json(j.at("lambda")) : Rational(0);
  for (const auto& [k, v] : j.at("params").items()) sol.params[k] = rational_from_json(v);
  const Json& fns = j.at("functions");
  int order = -1;
  for (const auto& name : sol.system.names()) {
    if (!fns.contains(name)) throw std::invalid_argument("series file lacks function '" + name + "'");
    std::vector<Rational> c;
    for (const auto& x : fns.at(name)) c.push_back(rational_from_json(x));
    if (c.empty()) throw std::invalid_argument("empty coefficient list for '" + name + "'");
    int o = static_cast<int>(c.size()) - 1;
    if (order >= 0 && o != order) throw std::invalid_argument("functions have different truncation orders");
    order = o;
    sol.functions.emplace_back(std::move(c));
  }
  sol.order = order;
  if (j.contains("order") && j.at("order").get<int>() != order)
    throw std::invalid_argument("declared order does not match coefficient lists");
  for (const auto& s : j.value("free_slots", Json::array())) {
    FoundSlot f;
    f.label = s.at("label").get<std::string>();
    f.order = s.at("order").get<int>();
    f.value = rational_from_json(s.at("value"));
    f.declared = s.value("declared", false);
    Json fn = s.value("functional", Json::object());
    for (const auto& [k, v] : fn.items()) f.functional[k] = rational_from_json(v);
    sol.slots.push_back(std::move(f));
  }
  for (const auto& d : j.value("diagnostics", Json::array()))
    sol.diagnostics.push_back({d.at("order").get<int>(), d.at("unknowns").get<int>(), d.at("equations").get<int>(),
                               d.at("rank").get<int>(), d.at("nullity").get<int>()});
  sol.flags = j.value("flags", std::vector<std::string>{});
  return sol;
}

Json to_json(const OrbitCase& oc) {
  Json j;
  j["id"] = std::string(1, case_letter(oc.id));
  j["name"] = oc.name;
  j["system"] = oc.system.label();
  j["vanishing"] = oc.vanishing;
  j["constraints"] = oc.constraints;
  j["params"] = oc.params;
  j["free_slots"] = slot_specs(oc.free_slots);
  j["einstein_slots"] = slot_specs(oc.einstein_slots);
  Json norm = Json::object();
  for (const auto& [k, v] : oc.normalization) norm[k] = to_json(v);
  j["normalization"] = norm;
  Json par = Json::object();
  for (const auto& [k, v] : oc.parity) par[k] = parity_name(v);
  j["parity"] = par;
  Json mir = Json::array();
  for (const auto& m : oc.mirrors) mir.push_back({{"f", m.f}, {"g", m.g}, {"sign", m.sign}});
  j["mirrors"] = mir;
  j["holonomy"] = oc.holonomy;
  j["einstein_supported"] = oc.einstein_supported;
  return j;
}

Json case_catalog_json() {
  Json a = Json::array();
  for (char c : std::string("ABCDEFGH")) a.push_back(to_json(orbit_case(case_from_letter(std::string(1, c)))));
  return a;
}

Json to_json(const TorusModuleSum& m) {
  Json w = Json::array();
  for (const auto& [wt, mult] : m.nontrivial) w.push_back({{"r", wt.r}, {"s", wt.s}, {"mult", mult}});
  return {{"weights", w}, {"trivial", m.trivial}};
}

Json to_json(const std::vector<DimRow>& rows) {
  Json a = Json::array();
  for (const auto& r : rows) a.push_back({{"m", r.m}, {"part", r.part == Part::h ? "h" : "v"}, {"dim", r.dim}});
  return a;
}

Json to_json(const MonitorReport& r) {
  Json j = Json::object();
  for (const auto& [k, v] : r.results) j[k] = {{"max", v.max}, {"argmax_t", v.argmax_t}};
  return j;
}

Json to_json(const FVanishingRecord& r) {
  Json tr = Json::array();
  for (const auto& s : r.trace) tr.push_back({{"order", s.order}, {"coefficient", to_json(s.coefficient)}, {"how", s.how}});
  return {{"k", r.aw.k}, {"l", r.aw.l}, {"params", params_json(r.params)}, {"order", r.order},
          {"all_zero", r.all_zero}, {"flag", r.flag}, {"trace", tr}};
}

Json to_json(const Su4Verdict& v) {
  Json j = {{"in_family", v.in_family}, {"a0_sq", to_json(v.a0_sq)}, {"b0_sq_plus_c0_sq", to_json(v.bc_sq)},
            {"monitored", v.monitored}};
  if (v.monitored) {
    j["max_sum"] = v.max_sum;
    j["max_quadric"] = v.max_quadric;
    j["t_reached"] = v.t_reached;
    j["termination"] = to_string(v.termination);
  }
  j["ok"] = v.ok();
  return j;
}

Json to_json(const CrossCheck& c) {
  auto slots = [](const std::vector<SlotId>& v) {
    Json a = Json::array();
    for (const auto& s : v) a.push_back({{"label", s.label}, {"order", s.order}});
    return a;
  };
  auto rows = [](const std::vector<SlotCountRow>& v) {
    Json a = Json::array();
    for (const auto& r : v) a.push_back({{"order", r.order}, {"observed", r.observed}, {"predicted", r.predicted}});
    return a;
  };
  Json j = {{"case", std::string(1, case_letter(c.id))},
            {"asserted", c.asserted},
            {"spin7_slots", slots(c.spin7_slots)},
            {"spin7_rows", rows(c.spin7_rows)},
            {"spin7_source", c.spin7_source},
            {"spin7_match", c.spin7_match}};
  if (c.einstein_available) {
    j["einstein_slots"] = slots(c.einstein_slots);
    j["einstein_rows"] = rows(c.einstein_rows);
    j["einstein_match"] = c.einstein_match;
    j["spin7_subset_of_einstein"] = c.spin7_subset;
  }
  j["einstein_source"] = c.einstein_source;
  j["notes"] = c.notes;
  return j;
}

Json to_json(const VerifyReport& r) {
  Json checks = Json::array();
  for (const auto& e : r.entries) {
    Json c = {{"name", e.name}, {"status", to_string(e.status)}, {"detail", e.detail}};
    if (e.value) c["value"] = *e.value;
    if (e.threshold) c["threshold"] = *e.threshold;
    checks.push_back(c);
  }
  return {{"case", r.case_name}, {"params", params_json(r.params)}, {"flags", r.flags}, {"passed", r.passed()},
          {"checks", checks}};
}

}  // namespace cohom
