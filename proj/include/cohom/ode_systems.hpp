#pragma once
// The two first-order holonomy systems (generic N^{k,l}, and N^{1,1} with
// a1 != a2), the two Einstein systems, their discrete symmetries, and the
// catalog of singular-orbit initial value problems.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cohom/laurent.hpp"
#include "cohom/rational.hpp"
#include "cohom/rep_theory.hpp"
#include "cohom/series.hpp"

namespace cohom {

enum class SystemKind { S1, S2, E1, E2 };

struct SystemId {
  SystemKind kind = SystemKind::S1;
  AloffWallach aw = AloffWallach::make(1, 1);

  static SystemId S1(const AloffWallach& aw) { return {SystemKind::S1, aw}; }
  static SystemId E1(const AloffWallach& aw) { return {SystemKind::E1, aw}; }
  static SystemId S2() { return {SystemKind::S2, AloffWallach::make(1, 1)}; }
  static SystemId E2() { return {SystemKind::E2, AloffWallach::make(1, 1)}; }

  bool einstein() const { return kind == SystemKind::E1 || kind == SystemKind::E2; }
  bool exceptional() const { return kind == SystemKind::S2 || kind == SystemKind::E2; }
  int max_derivative() const { return einstein() ? 2 : 1; }
  const std::vector<std::string>& names() const;
  int nfun() const { return static_cast<int>(names().size()); }
  int index(const std::string& fn) const;  // throws on unknown name
  std::string label() const;               // "S1(2,1)", "E2", ...
  SystemId first_order() const;
  SystemId einstein_version() const;
};

// Equation variables are (function, derivative order) pairs, laid out as fn*3+d.
inline int eq_var(int fn, int d) { return fn * 3 + d; }

// Each equation as a Laurent polynomial "lhs - rhs": x' - F(x) for the
// holonomy systems, Ricci component minus lambda for the Einstein systems
// (the last Einstein equation is the trace equation).
std::vector<LaurentPoly> system_equations(const SystemId& sys, const Rational& lambda = Rational(0));

struct ZeroDenominator : std::domain_error {
  std::string function;
  explicit ZeroDenominator(const std::string& fn)
      : std::domain_error("zero denominator: function '" + fn + "' vanishes"), function(fn) {}
};

struct State {
  double t = 0.0;
  std::vector<double> values;  // ordered as SystemId::names()
};

std::vector<double> rhs_first_order(const SystemId& sys, const std::vector<double>& x);
// d2 = J(F) F, computed with forward-mode dual numbers.
std::vector<double> second_derivative_chain(const SystemId& sys, const std::vector<double>& x);
// Same by centered differences, step 1e-6 max(1,|x_i|). Loses accuracy when some x_i is small.
std::vector<double> second_derivative_fd(const SystemId& sys, const std::vector<double>& x);
std::vector<double> residual_einstein(const SystemId& sys, const std::vector<double>& x,
                                      const std::vector<double>& d1, const std::vector<double>& d2,
                                      double lambda);

// x~_i(t) = sign_i * x_{source_i}(tsign * t)
struct SymmetryMap {
  std::string name;
  std::vector<int> source;
  std::vector<int> sign;
  int tsign = 1;
};

std::vector<SymmetryMap> symmetry_maps(const SystemId& sys);
SymmetryMap identity_map(const SystemId& sys);
SymmetryMap compose(const SymmetryMap& outer, const SymmetryMap& inner);
std::vector<double> apply_to_values(const SymmetryMap& m, const std::vector<double>& x);
// derivative vector transforms with an extra factor tsign
std::vector<double> apply_to_derivative(const SymmetryMap& m, const std::vector<double>& dx);
std::vector<TruncSeries> apply_to_series(const SymmetryMap& m, const std::vector<TruncSeries>& s);

// ---- case catalog ----

enum class CaseId { A, B, C, D, E, F, G, H };

CaseId case_from_letter(const std::string& s);  // throws std::invalid_argument
char case_letter(CaseId id);

enum class Parity { even, odd, mirror };

struct SlotSpec {
  std::string label;  // "f", "b-c", "a1+a2"
  int order = 0;
  std::map<std::string, Rational> functional;  // coefficient-space functional
  std::string param;                           // caller parameter feeding the slot
};

// f_n = sign * (-1)^n * g_n, i.e. f(t) = sign * g(-t)
struct MirrorPair {
  std::string f, g;
  int sign = 1;
};

struct OrbitCase {
  CaseId id = CaseId::A;
  std::string name;
  SystemId system;  // first-order holonomy system
  std::vector<std::string> vanishing;
  std::vector<std::string> constraints;
  std::vector<std::string> params;  // required initial data, excluding slot params
  std::vector<SlotSpec> free_slots;
  std::vector<SlotSpec> einstein_slots;
  std::map<std::string, Rational> normalization;  // |x'(0)|
  std::map<std::string, Parity> parity;
  std::vector<MirrorPair> mirrors;
  std::string holonomy;
  bool einstein_supported = false;
};

// (k,l) is used by A and E only; other cases have fixed principal orbits.
OrbitCase orbit_case(CaseId id, std::optional<AloffWallach> aw = std::nullopt);

}  // namespace cohom
