// cohom: decomposition tables, exact series, integration and verification.
// Exit codes: 0 ok, 1 verification failure, 2 usage, 3 constraint, 4 solver inconsistency.

#include <atomic>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <thread>

#include "CLI11.hpp"
#include "cohom/json_io.hpp"

using namespace cohom;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ConstraintError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Params parse_params(const std::vector<std::string>& raw) {
  Params p;
  for (const auto& s : raw) {
    auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--param expects name=p/q, got '" + s + "'");
    std::string name = s.substr(0, eq), val = s.substr(eq + 1);
    if (val.find_first_of(".eE") != std::string::npos)
      throw UsageError("parameter '" + name + "' must be an exact rational p/q, not a float ('" + val + "')");
    try {
      p[name] = Rational::parse(val);
    } catch (const std::exception&) {
      throw UsageError("parameter '" + name + "': cannot parse '" + val + "' as p/q");
    }
    if (p.count(name) && std::count_if(raw.begin(), raw.end(), [&](const std::string& r) {
          return r.rfind(name + "=", 0) == 0;
        }) > 1)
      throw UsageError("parameter '" + name + "' given twice");
  }
  return p;
}

struct KL {
  std::optional<int> k, l;
};

OrbitCase make_case(const std::string& letter, const KL& kl) {
  CaseId id;
  try {
    id = case_from_letter(letter);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  std::optional<AloffWallach> aw;
  if (kl.k || kl.l) {
    if (!(kl.k && kl.l)) throw UsageError("--k and --l go together");
    if (id != CaseId::A && id != CaseId::E)
      throw UsageError(std::string("case ") + letter + " has a fixed principal orbit; drop --k/--l");
    try {
      aw = AloffWallach::make(*kl.k, *kl.l);
    } catch (const std::exception& e) {
      throw ConstraintError(e.what());
    }
  }
  try {
    return orbit_case(id, aw);
  } catch (const std::invalid_argument& e) {
    throw ConstraintError(e.what());
  }
}

void write_out(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

Json read_json(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot read " + path);
  try {
    return Json::parse(f);
  } catch (const std::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

// ---- dims ----

struct DimsArgs {
  int k = 2, l = 1, m_max = 10;
  std::string orbit = "u12", part = "hv", format = "pretty";
};

int cmd_dims(const DimsArgs& a) {
  std::vector<Part> parts;
  if (a.part == "h") parts = {Part::h};
  else if (a.part == "v") parts = {Part::v};
  else if (a.part == "hv" || a.part == "both") parts = {Part::h, Part::v};
  else throw UsageError("--part must be h, v or both");
  if (a.m_max < 0) throw UsageError("--m-max must be >= 0");
  std::function<int(int, Part)> dim;
  if (a.orbit == "s5") {
    dim = [](int m, Part p) { return dim_W_s5(m, p); };
  } else if (a.orbit == "u12" || a.orbit == "u12-z2") {
    AloffWallach aw;
    try {
      aw = AloffWallach::make(a.k, a.l);
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
    TorusOrbit o = a.orbit == "u12" ? TorusOrbit::plain : TorusOrbit::z2_quotient;
    if (o == TorusOrbit::z2_quotient && !aw.is_exceptional_11()) throw UsageError("u12-z2 needs (k,l) = (1,1)");
    dim = [aw, o](int m, Part p) { return dim_W(aw, o, m, p); };
  } else {
    throw UsageError("unknown orbit '" + a.orbit + "' (expected u12, u12-z2 or s5)");
  }
  std::vector<DimRow> rows;
  for (Part p : parts)
    for (int m = 0; m <= a.m_max; ++m) rows.push_back({m, p, dim(m, p)});
  if (a.format == "json") {
    std::cout << to_json(rows).dump(2) << "\n";
  } else if (a.format == "csv") {
    std::cout << "m,part,dim\n";
    for (const auto& r : rows) std::cout << r.m << "," << (r.part == Part::h ? "h" : "v") << "," << r.dim << "\n";
  } else if (a.format == "pretty") {
    std::cout << std::setw(4) << "m" << std::setw(6) << "part" << std::setw(6) << "dim" << "\n";
    for (const auto& r : rows)
      std::cout << std::setw(4) << r.m << std::setw(6) << (r.part == Part::h ? "h" : "v") << std::setw(6) << r.dim
                << "\n";
  } else {
    throw UsageError("--format must be json, csv or pretty");
  }
  return 0;
}

// ---- series ----

struct SeriesArgs {
  std::string letter, out, lambda = "0";
  KL kl;
  std::vector<std::string> params;
  int order = kDefaultOrder;
  bool einstein = false;
};

int cmd_series(const SeriesArgs& a) {
  OrbitCase oc = make_case(a.letter, a.kl);
  Params p = parse_params(a.params);
  if (a.order < 1) throw UsageError("--order must be >= 1");
  SeriesSolution sol;
  if (a.einstein) {
    if (a.lambda.find_first_of(".eE") != std::string::npos) throw UsageError("--lambda must be p/q");
    Rational lam;
    try {
      lam = Rational::parse(a.lambda);
    } catch (const std::exception&) {
      throw UsageError("--lambda: cannot parse '" + a.lambda + "'");
    }
    sol = einstein_series(oc, p, lam, a.order);
  } else {
    sol = solve_series(oc, p, a.order);
  }
  write_out(a.out, to_json(sol).dump(2) + "\n");
  return 0;
}

// ---- integrate ----

struct IntegrateArgs {
  std::string letter, out, report;
  KL kl;
  std::vector<std::string> params;
  int order = kDefaultOrder;
  double t0 = 1e-2, t_end = 1.0, tol = 1e-10;
};

int cmd_integrate(const IntegrateArgs& a) {
  OrbitCase oc = make_case(a.letter, a.kl);
  Params p = a.params.empty() ? default_params(oc.id) : parse_params(a.params);
  SeriesSolution sol = solve_series(oc, p, a.order);
  State st;
  try {
    st = launch_state(sol, a.t0);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  Trajectory tr = integrate(oc.system, st, a.t_end, a.tol);
  write_out(a.out, trajectory_csv(tr));
  if (!a.report.empty()) {
    std::set<Check> checks = {Check::defect};
    if (!sol.fn("f").is_zero()) checks.insert(Check::einstein_lambda0);
    if (oc.id == CaseId::C) checks.insert(Check::su4_constraint);
    Json j = {{"case", oc.name},
              {"termination", to_string(tr.termination)},
              {"t_reached", tr.samples.back().t},
              {"samples", tr.samples.size()},
              {"monitors", to_json(monitor_residuals(oc.system, tr, checks))}};
    if (!tr.zero_function.empty()) j["zero_function"] = tr.zero_function;
    write_out(a.report, j.dump(2) + "\n");
  }
  return 0;
}

// ---- verify ----

struct VerifyArgs {
  std::vector<std::string> cases, params;
  std::string series_file, golden_file, test_mode, out;
  KL kl;
  int order = kDefaultOrder, jobs = 1;
  double t0 = 1e-2, t_end = 1.0, tol = 1e-10;
  std::optional<unsigned long long> seed;
};

Rational random_nonzero(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(1, 9), den(1, 5), sgn(0, 1);
  return Rational(num(rng) * (sgn(rng) ? 1 : -1), den(rng));
}

// Seeded extras: free-slot census and (for A/B) f-vanishing at random data.
void random_checks(const OrbitCase& oc, unsigned long long seed, VerifyReport& rep) {
  std::mt19937_64 rng(seed);
  auto base = free_slots(oc);
  bool same = true;
  for (int i = 0; i < 2; ++i) {
    Params p;
    for (const auto& n : oc.params) p[n] = random_nonzero(rng);
    if (oc.id == CaseId::C) p["a0"] = p["a0"] + Rational(10);  // keeps a1 away from a2
    if (oc.id == CaseId::D) p.erase("c0");
    same = same && free_slots(oc, 8, p) == base;
  }
  rep.entries.push_back({"random_free_slot_invariance", same ? Status::pass : Status::fail,
                         "free slots at two random parameter sets (seed " + std::to_string(seed) + ")", {}, {}});
  if (oc.id == CaseId::A || oc.id == CaseId::B) {
    bool zero = true;
    for (int i = 0; i < 3; ++i) {
      Params p = {{"a0", random_nonzero(rng)}, {"b0", random_nonzero(rng)}, {"c0", random_nonzero(rng)}};
      zero = zero && detect_f_vanishing(oc.system.aw, p, 20).all_zero;
    }
    rep.entries.push_back({"random_f_vanishing", zero ? Status::pass : Status::fail,
                           "three random initial values, order 20", {}, {}});
  }
}

std::map<std::string, std::vector<Rational>> golden_from(const Json& j) {
  const Json& fns = j.contains("functions") ? j.at("functions") : j;
  std::map<std::string, std::vector<Rational>> g;
  for (const auto& [k, v] : fns.items())
    for (const auto& x : v) g[k].push_back(rational_from_json(x));
  return g;
}

void corrupt(std::map<std::string, std::vector<Rational>>& g) {
  for (auto& [k, v] : g)
    for (auto& c : v)
      if (!c.is_zero()) {
        c = c + Rational(1);
        return;
      }
  if (!g.empty() && !g.begin()->second.empty()) g.begin()->second[0] = Rational(1);
}

int cmd_verify(const VerifyArgs& a) {
  VerifyOptions opt;
  opt.order = a.order;
  opt.t0 = a.t0;
  opt.t_end = a.t_end;
  opt.tol = a.tol;
  if (!(a.tol > 0) || !(a.t0 > 0) || !(a.t_end > a.t0)) throw UsageError("need 0 < t0 < t-end and tol > 0");
  if (!a.golden_file.empty()) opt.golden = golden_from(read_json(a.golden_file));
  if (!a.test_mode.empty() && a.test_mode != "corrupt-golden") throw UsageError("unknown --test-mode " + a.test_mode);

  struct Job {
    std::optional<SeriesSolution> sol;
    OrbitCase oc;
    Params params;
  };
  std::vector<Job> jobs;
  if (!a.series_file.empty()) {
    if (!a.cases.empty()) throw UsageError("--series and --case are exclusive");
    SeriesSolution sol;
    try {
      sol = series_solution_from_json(read_json(a.series_file));
    } catch (const UsageError&) {
      throw;
    } catch (const std::exception& e) {
      throw UsageError(a.series_file + ": " + e.what());
    }
    jobs.push_back({sol, sol.oc, sol.params});
  } else {
    std::vector<std::string> letters;
    for (const auto& c : a.cases) {
      if (c == "all") {
        for (char x : std::string("ABCDEFGH")) letters.emplace_back(1, x);
      } else {
        letters.push_back(c);
      }
    }
    if (letters.empty()) throw UsageError("verify needs --case or --series");
    if (letters.size() > 1 && !a.params.empty()) throw UsageError("--param applies to a single --case");
    for (const auto& l : letters) {
      OrbitCase oc = make_case(l, a.kl);
      Params p = a.params.empty() ? default_params(oc.id) : parse_params(a.params);
      jobs.push_back({std::nullopt, oc, p});
    }
  }
  if (opt.golden) {
    for (const auto& j : jobs)
      for (const auto& [name, c] : *opt.golden) {
        const auto& names = j.oc.system.names();
        if (std::find(names.begin(), names.end(), name) == names.end())
          throw UsageError("golden names function '" + name + "', which case " + j.oc.name + " does not have");
      }
    if (a.test_mode == "corrupt-golden") corrupt(*opt.golden);
  }

  std::vector<std::optional<VerifyReport>> reports(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i; (i = next++) < jobs.size();) {
      try {
        VerifyOptions o = opt;
        if (!o.golden && a.test_mode == "corrupt-golden") {
          o.golden = displayed_series(jobs[i].oc, jobs[i].params);
          corrupt(*o.golden);
        }
        VerifyReport r = jobs[i].sol ? verify_solution(*jobs[i].sol, o) : verify_case(jobs[i].oc, jobs[i].params, o);
        if (a.seed) random_checks(jobs[i].oc, *a.seed, r);
        reports[i] = std::move(r);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  int nt = std::max(1, std::min<int>(a.jobs, static_cast<int>(jobs.size())));
  for (int t = 0; t < nt; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  bool ok = true;
  Json out = Json::array();
  for (const auto& r : reports) {
    ok = ok && r->passed();
    out.push_back(to_json(*r));
  }
  write_out(a.out, (jobs.size() == 1 ? out[0] : out).dump(2) + "\n");
  return ok ? 0 : 1;
}

void add_case_flags(CLI::App* sc, std::string& letter, KL& kl, std::vector<std::string>& params) {
  sc->add_option("--case", letter, "case id A-H")->required();
  sc->add_option("--k", kl.k, "Aloff-Wallach k (cases A, E)");
  sc->add_option("--l", kl.l, "Aloff-Wallach l (cases A, E)");
  sc->add_option("--param", params, "initial value or slot parameter, name=p/q (repeatable)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cohomogeneity-one Spin(7) and Einstein metrics on Aloff-Wallach spaces"};
  app.require_subcommand(1);

  DimsArgs da;
  auto* dims = app.add_subcommand("dims", "dimension table of W_m (equivariant maps)");
  dims->add_option("--k", da.k);
  dims->add_option("--l", da.l);
  dims->add_option("--orbit", da.orbit, "u12, u12-z2 or s5");
  dims->add_option("--m-max", da.m_max);
  dims->add_option("--part", da.part, "h, v or both");
  dims->add_option("--format", da.format, "json, csv or pretty");

  SeriesArgs sa;
  auto* series = app.add_subcommand("series", "exact power series at the singular orbit");
  add_case_flags(series, sa.letter, sa.kl, sa.params);
  series->add_option("--order", sa.order);
  series->add_option("--out", sa.out, "output file (default stdout)");
  series->add_flag("--einstein", sa.einstein, "solve the Einstein system instead");
  series->add_option("--lambda", sa.lambda, "Einstein constant p/q");

  IntegrateArgs ia;
  auto* integ = app.add_subcommand("integrate", "continue a series numerically, write CSV");
  add_case_flags(integ, ia.letter, ia.kl, ia.params);
  integ->add_option("--order", ia.order);
  integ->add_option("--t0", ia.t0);
  integ->add_option("--t-end", ia.t_end);
  integ->add_option("--tol", ia.tol);
  integ->add_option("--out", ia.out, "CSV file (default stdout)");
  integ->add_option("--report", ia.report, "monitor report JSON file");

  VerifyArgs va;
  unsigned long long seed = 0;
  auto* verify = app.add_subcommand("verify", "run the verification suite for a case");
  verify->add_option("--case", va.cases, "case id A-H or 'all' (repeatable)");
  verify->add_option("--k", va.kl.k);
  verify->add_option("--l", va.kl.l);
  verify->add_option("--param", va.params);
  verify->add_option("--order", va.order);
  verify->add_option("--t0", va.t0);
  verify->add_option("--t-end", va.t_end);
  verify->add_option("--tol", va.tol);
  verify->add_option("--series", va.series_file, "re-verify a series JSON file");
  verify->add_option("--golden", va.golden_file, "golden coefficient fixture (JSON)");
  verify->add_option("--test-mode", va.test_mode, "corrupt-golden");
  verify->add_option("--jobs", va.jobs, "parallel verifications");
  auto* seed_opt = verify->add_option("--seed", seed, "add seeded randomized checks");
  verify->add_option("--out", va.out);

  auto* catalog = app.add_subcommand("catalog", "dump the case catalog as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  try {
    if (*dims) return cmd_dims(da);
    if (*series) return cmd_series(sa);
    if (*integ) return cmd_integrate(ia);
    if (*verify) {
      if (*seed_opt) va.seed = seed;
      return cmd_verify(va);
    }
    if (*catalog) {
      std::cout << case_catalog_json().dump(2) << "\n";
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ConstraintError& e) {
    std::cerr << "constraint violation: " << e.what() << "\n";
    return 3;
  } catch (const SolverError& e) {
    std::cerr << (e.kind == SolverError::Kind::inconsistent ? "inconsistent: " : "constraint violation: ") << e.what()
              << "\n";
    return e.kind == SolverError::Kind::inconsistent ? 4 : 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
