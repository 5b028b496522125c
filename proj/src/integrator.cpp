#include "cohom/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

namespace cohom {

State launch_state(const SeriesSolution& sol, double t0, double rel_tol) {
  if (!(t0 > 0.0)) throw std::invalid_argument("t0 must be > 0 (the singular orbit sits at t = 0)");
  State st{t0, {}};
  for (size_t i = 0; i < sol.functions.size(); ++i) {
    FloatEval e = series_eval_float(sol.functions[i], t0);
    if (e.last_term > rel_tol * std::fabs(e.value))
      throw std::domain_error("t0 too large for series order (function " + sol.names()[i] +
                              ", last term " + std::to_string(e.last_term) + ")");
    st.values.push_back(e.value);
  }
  return st;
}

std::string to_string(Termination t) {
  switch (t) {
    case Termination::reached_t_end: return "reached_t_end";
    case Termination::function_zero: return "function_zero";
    case Termination::blow_up: return "blow_up";
    case Termination::step_underflow: return "step_underflow";
  }
  return "?";
}

namespace {

// Dormand-Prince 5(4) tableau
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

using V = std::vector<double>;

V axpy(const V& y, double h, std::initializer_list<std::pair<double, const V*>> ks) {
  V out(y);
  for (size_t i = 0; i < y.size(); ++i) {
    double s = 0.0;
    for (const auto& [c, k] : ks) s += c * (*k)[i];
    out[i] += h * s;
  }
  return out;
}

}  // namespace

Trajectory integrate(const SystemId& sys, const State& start, double t_end, double tol,
                     const IntegrateOptions& opt) {
  if (sys.einstein()) throw std::invalid_argument("integrate needs a first-order system");
  if (!(tol > 0.0) || !std::isfinite(tol)) throw std::invalid_argument("tolerance must be positive");
  if (!(t_end > start.t)) throw std::invalid_argument("t_end must exceed the start time");

  Trajectory tr;
  tr.system = sys;
  const size_t n = start.values.size();
  auto F = [&](const V& x) {
    ++tr.rhs_evals;
    return rhs_first_order(sys, x);
  };

  double t = start.t;
  V y = start.values;
  // a function that starts at exactly 0 sits on an invariant subspace; only
  // functions that start nonzero can collapse
  std::vector<bool> watch(n);
  for (size_t i = 0; i < n; ++i) watch[i] = y[i] != 0.0;
  V k1 = F(y);
  tr.samples.push_back({t, y, k1});

  const double span = t_end - start.t;
  const double hmax = span / std::max(1, opt.min_samples);
  double h = std::min(hmax, 1e-3 * span);
  const double safety = 0.9, fac_min = 0.2, fac_max = 5.0;

  while (t < t_end) {
    if (t + h > t_end) h = t_end - t;
    if (h < 1e-14 * std::max(1.0, std::fabs(t))) {
      tr.termination = Termination::step_underflow;
      return tr;
    }
    V k2, k3, k4, k5, k6, k7, y5;
    try {
      k2 = F(axpy(y, h, {{a21, &k1}}));
      k3 = F(axpy(y, h, {{a31, &k1}, {a32, &k2}}));
      k4 = F(axpy(y, h, {{a41, &k1}, {a42, &k2}, {a43, &k3}}));
      k5 = F(axpy(y, h, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}));
      k6 = F(axpy(y, h, {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}));
      y5 = axpy(y, h, {{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}});
      k7 = F(y5);
    } catch (const ZeroDenominator&) {
      // a stage landed on a zero of some function; shrink and retry
      ++tr.rejected;
      h *= 0.25;
      continue;
    }
    double err = 0.0;
    bool finite = true;
    for (size_t i = 0; i < n; ++i) {
      double ei = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
      double sc = tol + tol * std::max(std::fabs(y[i]), std::fabs(y5[i]));
      err += (ei / sc) * (ei / sc);
      if (!std::isfinite(y5[i])) finite = false;
    }
    err = std::sqrt(err / static_cast<double>(n));
    if (!finite || !std::isfinite(err)) {
      ++tr.rejected;
      h *= 0.25;
      continue;
    }
    if (err <= 1.0) {
      ++tr.accepted;
      // events: collapse, sign change, blow-up
      for (size_t i = 0; i < n; ++i) {
        bool crossed = (y[i] > 0 && y5[i] < 0) || (y[i] < 0 && y5[i] > 0);
        if (watch[i] && (std::fabs(y5[i]) < opt.collapse || crossed)) {
          tr.samples.push_back({t + h, y5, k7});
          tr.termination = Termination::function_zero;
          tr.zero_function = sys.names()[i];
          return tr;
        }
        if (std::fabs(y5[i]) > opt.blow_up) {
          tr.samples.push_back({t + h, y5, k7});
          tr.termination = Termination::blow_up;
          return tr;
        }
      }
      t = (t_end - (t + h) < 1e-12 * span) ? t_end : t + h;
      y = y5;
      k1 = k7;
      tr.samples.push_back({t, y, k1});
      double fac = err == 0.0 ? fac_max : std::clamp(safety * std::pow(err, -0.2), fac_min, fac_max);
      h = std::min(hmax, h * fac);
    } else {
      ++tr.rejected;
      h *= std::clamp(safety * std::pow(err, -0.2), fac_min, 1.0);
    }
  }
  tr.termination = Termination::reached_t_end;
  return tr;
}

std::vector<double> hermite_value(const Sample& s0, const Sample& s1, double t) {
  double h = s1.t - s0.t, u = (t - s0.t) / h;
  double h00 = 2 * u * u * u - 3 * u * u + 1, h10 = u * u * u - 2 * u * u + u;
  double h01 = -2 * u * u * u + 3 * u * u, h11 = u * u * u - u * u;
  V out(s0.x.size());
  for (size_t i = 0; i < out.size(); ++i)
    out[i] = h00 * s0.x[i] + h10 * h * s0.dx[i] + h01 * s1.x[i] + h11 * h * s1.dx[i];
  return out;
}

std::vector<double> hermite_derivative(const Sample& s0, const Sample& s1, double t) {
  double h = s1.t - s0.t, u = (t - s0.t) / h;
  double d00 = (6 * u * u - 6 * u) / h, d10 = 3 * u * u - 4 * u + 1;
  double d01 = (-6 * u * u + 6 * u) / h, d11 = 3 * u * u - 2 * u;
  V out(s0.x.size());
  for (size_t i = 0; i < out.size(); ++i)
    out[i] = d00 * s0.x[i] + d10 * s0.dx[i] + d01 * s1.x[i] + d11 * s1.dx[i];
  return out;
}

Trajectory apply_symmetry(const SymmetryMap& m, const Trajectory& tr) {
  Trajectory out = tr;
  out.samples.clear();
  for (const auto& s : tr.samples)
    out.samples.push_back({m.tsign * s.t, apply_to_values(m, s.x), apply_to_derivative(m, s.dx)});
  if (m.tsign < 0) std::reverse(out.samples.begin(), out.samples.end());
  return out;
}

double max_einstein_residual(const SystemId& sys, const Sample& s) {
  SystemId fo = sys.first_order();
  auto d2 = second_derivative_chain(fo, s.x);
  auto r = residual_einstein(fo.einstein_version(), s.x, s.dx, d2, 0.0);
  double m = 0.0;
  for (double v : r) m = std::max(m, std::fabs(v));
  return m;
}

MonitorReport monitor_residuals(const SystemId& sys, const Trajectory& tr, const std::set<Check>& checks,
                                int points, std::pair<std::string, std::string> mirror_pair) {
  if (sys.einstein()) throw std::invalid_argument("monitor_residuals expects the first-order system");
  MonitorReport rep;
  if (tr.samples.empty()) return rep;
  const size_t ns = tr.samples.size();
  std::vector<size_t> idx;
  int np = std::max(1, std::min(points, static_cast<int>(ns)));
  for (int i = 0; i < np; ++i)
    idx.push_back(np == 1 ? 0 : static_cast<size_t>(std::llround(static_cast<double>(i) * (ns - 1) / (np - 1))));

  auto record = [&](const std::string& key, double v, double t) {
    if (!std::isfinite(v)) v = std::numeric_limits<double>::infinity();
    auto it = rep.results.find(key);
    if (it == rep.results.end()) rep.results[key] = {v, t};
    else if (v > it->second.max) it->second = {v, t};
  };

  if (checks.count(Check::su4_constraint)) {
    if (!sys.exceptional()) throw std::invalid_argument("su4_constraint needs the (a1,a2,b,c,f) system");
    int a1 = sys.index("a1"), a2 = sys.index("a2"), b = sys.index("b"), c = sys.index("c");
    for (size_t i : idx) {
      const auto& x = tr.samples[i].x;
      record("su4_sum", std::fabs(x[a1] + x[a2]), tr.samples[i].t);
      record("su4_quadric", std::fabs(x[a1] * x[a1] - x[b] * x[b] - x[c] * x[c]), tr.samples[i].t);
    }
  }
  if (checks.count(Check::mirror)) {
    int p = sys.index(mirror_pair.first), q = sys.index(mirror_pair.second);
    for (size_t i : idx) record("mirror", std::fabs(tr.samples[i].x[p] - tr.samples[i].x[q]), tr.samples[i].t);
  }
  if (checks.count(Check::einstein_lambda0))
    for (size_t i : idx) record("einstein_lambda0", max_einstein_residual(sys, tr.samples[i]), tr.samples[i].t);
  if (checks.count(Check::defect)) {
    for (size_t i = 0; i + 1 < ns; ++i) {
      const Sample &s0 = tr.samples[i], &s1 = tr.samples[i + 1];
      double tm = 0.5 * (s0.t + s1.t);
      auto xm = hermite_value(s0, s1, tm);
      auto dm = hermite_derivative(s0, s1, tm);
      double d = 0.0;
      try {
        auto Fm = rhs_first_order(sys, xm);
        for (size_t k = 0; k < xm.size(); ++k) d = std::max(d, std::fabs(Fm[k] - dm[k]));
      } catch (const ZeroDenominator&) {
        d = std::numeric_limits<double>::infinity();
      }
      record("defect", d, tm);
    }
  }
  return rep;
}

std::string trajectory_csv(const Trajectory& tr) {
  std::ostringstream os;
  os << "t";
  for (const auto& n : tr.system.names()) os << "," << n;
  os << ",res_max\n";
  os << std::setprecision(17);
  for (const auto& s : tr.samples) {
    os << s.t;
    for (double v : s.x) os << "," << v;
    double r;
    try {
      r = max_einstein_residual(tr.system, s);
    } catch (const std::exception&) {
      r = std::numeric_limits<double>::quiet_NaN();
    }
    os << "," << r << "\n";
  }
  return os.str();
}

}  // namespace cohom
