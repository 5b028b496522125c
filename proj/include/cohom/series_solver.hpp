#pragma once
// Order-by-order exact solution of the singular initial value problems.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cohom/ode_systems.hpp"
#include "cohom/rational.hpp"
#include "cohom/series.hpp"

namespace cohom {

using Params = std::map<std::string, Rational>;

// Polynomial identity in the variables (function, derivative order).
struct PolyIdentity {
  struct Term {
    Rational coef;
    std::vector<std::pair<int, int>> factors;  // (eq_var(fn,d), power), powers > 0
  };
  std::vector<Term> terms;
  std::string to_string(const std::vector<std::string>& names) const;
};

std::vector<PolyIdentity> polynomialize(const SystemId& sys, const Rational& lambda = Rational(0));

// Substitutes series (one per function, same order) and returns the
// identity's coefficients 0..n. Reads coefficients up to n + max derivative.
TruncSeries evaluate_identity(const PolyIdentity& id, const std::vector<TruncSeries>& s, int n);

struct SolverError : std::runtime_error {
  enum class Kind { constraint, missing_slot, inconsistent };
  Kind kind;
  SolverError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

struct FoundSlot {
  std::string label;
  int order = 0;
  std::map<std::string, Rational> functional;
  Rational value;
  bool declared = false;  // matched one of the case's advertised slots
};

struct OrderDiagnostic {
  int order = 0;
  int unknowns = 0;
  int equations = 0;
  int rank = 0;
  int nullity = 0;
};

struct SeriesSolution {
  OrbitCase oc;
  SystemId system;
  bool einstein = false;
  Rational lambda;
  Params params;
  int order = 0;
  std::vector<TruncSeries> functions;  // ordered as system.names()
  std::vector<FoundSlot> slots;
  std::vector<OrderDiagnostic> diagnostics;
  std::vector<std::string> flags;

  const std::vector<std::string>& names() const { return system.names(); }
  const TruncSeries& fn(const std::string& name) const;
};

// ---- generic engine (exposed for tests) ----

struct SlotDecl {
  std::string label;
  int order = 0;
  std::vector<Rational> functional;  // one entry per function
  std::optional<Rational> value;
};

struct EngineProblem {
  SystemId system;
  std::vector<PolyIdentity> identities;
  std::map<std::pair<int, int>, Rational> seeds;  // (fn, order) -> value
  std::vector<SlotDecl> slots;
  int order = 20;
  bool probe = false;  // pin undeclared free directions with 0 instead of failing
  int window = 8;
};

struct EngineResult {
  std::vector<TruncSeries> functions;
  std::vector<FoundSlot> slots;
  std::vector<OrderDiagnostic> diagnostics;
};

EngineResult run_engine(const EngineProblem& p);

// ---- case level ----

constexpr int kDefaultOrder = 20;

SeriesSolution solve_series(const OrbitCase& oc, const Params& params, int order = kDefaultOrder);
SeriesSolution einstein_series(const OrbitCase& oc, const Params& params, const Rational& lambda,
                               int order = kDefaultOrder);

struct SlotId {
  std::string label;
  int order = 0;
  friend bool operator==(const SlotId&, const SlotId&) = default;
};

// Probes nullity with placeholder values. params may be empty (defaults used).
std::vector<SlotId> free_slots(const OrbitCase& oc, int order = 8, const Params& params = {});
std::vector<SlotId> einstein_free_slots(const OrbitCase& oc, const Rational& lambda, int order = 8,
                                        const Params& params = {});

// Checks all identities vanish through order - max derivative; returns the
// first offending (identity, coefficient) or nullopt.
std::optional<std::pair<int, int>> verify_substitution(const SeriesSolution& sol);

struct Violation {
  std::string function;
  int order = 0;
  Rational coefficient;
  std::string what;
};

struct SmoothnessReport {
  std::map<std::string, bool> parity_ok;
  std::map<std::string, bool> normalization_ok;
  bool mirror_ok = true;
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

SmoothnessReport check_smoothness(const SeriesSolution& sol);

}  // namespace cohom
