#pragma once
// Continuation of series solutions away from the singular orbit:
// Dormand-Prince 5(4) with step control, events, and residual monitors.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "cohom/ode_systems.hpp"
#include "cohom/series_solver.hpp"

namespace cohom {

State launch_state(const SeriesSolution& sol, double t0, double rel_tol = 1e-10);

struct Sample {
  double t = 0.0;
  std::vector<double> x;
  std::vector<double> dx;  // rhs at x, stored
};

enum class Termination { reached_t_end, function_zero, blow_up, step_underflow };
std::string to_string(Termination t);

struct Trajectory {
  SystemId system;
  std::vector<Sample> samples;
  Termination termination = Termination::reached_t_end;
  std::string zero_function;  // set for function_zero
  int accepted = 0;
  int rejected = 0;
  int rhs_evals = 0;
};

struct IntegrateOptions {
  double collapse = 1e-12;
  double blow_up = 1e12;
  int min_samples = 200;
};

Trajectory integrate(const SystemId& sys, const State& start, double t_end, double tol,
                     const IntegrateOptions& opt = {});

// Cubic Hermite interpolation of the stored samples.
std::vector<double> hermite_value(const Sample& s0, const Sample& s1, double t);
std::vector<double> hermite_derivative(const Sample& s0, const Sample& s1, double t);

Trajectory apply_symmetry(const SymmetryMap& m, const Trajectory& tr);

enum class Check { einstein_lambda0, su4_constraint, mirror, defect };

struct CheckResult {
  double max = 0.0;
  double argmax_t = 0.0;
};

struct MonitorReport {
  std::map<std::string, CheckResult> results;  // "einstein_lambda0", "su4_sum", "su4_quadric", "mirror", "defect"
};

// Evaluates the requested checks on up to `points` evenly spread samples
// (defect uses every interval midpoint). mirror_pair names the two functions
// whose equality is monitored; defaults to b,c.
MonitorReport monitor_residuals(const SystemId& sys, const Trajectory& tr, const std::set<Check>& checks,
                                int points = 100, std::pair<std::string, std::string> mirror_pair = {"b", "c"});

double max_einstein_residual(const SystemId& sys, const Sample& s);

std::string trajectory_csv(const Trajectory& tr);

}  // namespace cohom
