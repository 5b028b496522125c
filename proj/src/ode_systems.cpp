#include "cohom/ode_systems.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <tuple>

namespace cohom {

namespace {

const std::vector<std::string> kNames4 = {"a", "b", "c", "f"};
const std::vector<std::string> kNames5 = {"a1", "a2", "b", "c", "f"};

// Small helper so the equations below read close to their usual form.
struct Vars {
  int nf;
  LaurentPoly X(int fn, int d = 0) const { return LaurentPoly::var(nf * 3, eq_var(fn, d)); }
  LaurentPoly C(const Rational& r) const { return LaurentPoly::constant(nf * 3, r); }
  LaurentPoly sq(const LaurentPoly& p) const { return p * p; }
};

std::vector<LaurentPoly> eqs_S1(const AloffWallach& aw) {
  Vars v{4};
  const int a = 0, b = 1, c = 2, f = 3;
  Rational D2(2 * aw.delta);
  auto A = v.X(a), B = v.X(b), Cc = v.X(c), F = v.X(f);
  auto A2 = v.sq(A), B2 = v.sq(B), C2 = v.sq(Cc), F2 = v.sq(F);
  Rational ca(-aw.k - aw.l), cb(aw.l), cc(aw.k);
  std::vector<LaurentPoly> out;
  out.push_back(v.X(a, 1) - (B2 + C2 - A2) / (B * Cc) - (ca / D2) * (F / A));
  out.push_back(v.X(b, 1) - (C2 + A2 - B2) / (A * Cc) - (cb / D2) * (F / B));
  out.push_back(v.X(c, 1) - (A2 + B2 - C2) / (A * B) - (cc / D2) * (F / Cc));
  out.push_back(v.X(f, 1) + (ca / D2) * (F2 / A2) + (cb / D2) * (F2 / B2) + (cc / D2) * (F2 / C2));
  return out;
}

std::vector<LaurentPoly> eqs_S2() {
  Vars v{5};
  const int a1 = 0, a2 = 1, b = 2, c = 3, f = 4;
  auto B = v.X(b), Cc = v.X(c), F = v.X(f);
  auto B2 = v.sq(B), C2 = v.sq(Cc), F2 = v.sq(F);
  std::vector<LaurentPoly> out;
  for (auto [x, y] : {std::pair{a1, a2}, std::pair{a2, a1}}) {
    auto X = v.X(x), Y = v.X(y);
    out.push_back(v.X(x, 1) - (B2 + C2 - v.sq(X)) / (B * Cc) -
                  Rational(3) * (v.sq(X) - v.sq(Y)) / (Y * F) + Rational(1, 3) * F / Y);
  }
  for (auto [x, y] : {std::pair{b, c}, std::pair{c, b}}) {
    auto X = v.X(x), Y = v.X(y);
    LaurentPoly e = v.X(x, 1) - Rational(1, 6) * F / X;
    for (int aa : {a1, a2}) {
      auto Aa = v.X(aa);
      e -= Rational(1, 2) * (v.sq(Aa) + v.sq(Y) - v.sq(X)) / (Aa * Y);
    }
    out.push_back(e);
  }
  auto A1 = v.X(a1), A2 = v.X(a2);
  out.push_back(v.X(f, 1) + Rational(3) * v.sq(A1 - A2) / (A1 * A2) - Rational(1, 3) * F2 / (A1 * A2) +
                Rational(1, 6) * F2 / B2 + Rational(1, 6) * F2 / C2);
  return out;
}

// -x''/x + x'^2/x^2 - (x'/x) S + extra - lambda
LaurentPoly ricci_component(const Vars& v, int x, const LaurentPoly& S, const LaurentPoly& extra,
                            const Rational& lambda) {
  auto X = v.X(x), X1 = v.X(x, 1);
  return -(v.X(x, 2) / X) + v.sq(X1) / v.sq(X) - (X1 / X) * S + extra - v.C(lambda);
}

std::vector<LaurentPoly> eqs_E1(const AloffWallach& aw, const Rational& lambda) {
  Vars v{4};
  const int a = 0, b = 1, c = 2, f = 3;
  auto A = v.X(a), B = v.X(b), Cc = v.X(c), F = v.X(f);
  auto A2 = v.sq(A), B2 = v.sq(B), C2 = v.sq(Cc), F2 = v.sq(F);
  auto A4 = v.sq(A2), B4 = v.sq(B2), C4 = v.sq(C2);
  Rational dd(aw.delta * aw.delta);
  Rational ka = Rational((aw.k + aw.l) * (aw.k + aw.l)) / dd / Rational(2);
  Rational kb = Rational(aw.l * aw.l) / dd / Rational(2);
  Rational kc = Rational(aw.k * aw.k) / dd / Rational(2);
  auto S = Rational(2) * v.X(a, 1) / A + Rational(2) * v.X(b, 1) / B + Rational(2) * v.X(c, 1) / Cc +
           v.X(f, 1) / F;
  auto ABC = A2 * B2 * C2;
  std::vector<LaurentPoly> out;
  out.push_back(ricci_component(v, a, S, v.C(6) / A2 - ka * F2 / A4 + (A4 - B4 - C4) / ABC, lambda));
  out.push_back(ricci_component(v, b, S, v.C(6) / B2 - kb * F2 / B4 + (B4 - A4 - C4) / ABC, lambda));
  out.push_back(ricci_component(v, c, S, v.C(6) / C2 - kc * F2 / C4 + (C4 - A4 - B4) / ABC, lambda));
  out.push_back(ricci_component(v, f, S, ka * F2 / A4 + kb * F2 / B4 + kc * F2 / C4, lambda));
  out.push_back(Rational(-2) * v.X(a, 2) / A - Rational(2) * v.X(b, 2) / B - Rational(2) * v.X(c, 2) / Cc -
                v.X(f, 2) / F - v.C(lambda));
  return out;
}

std::vector<LaurentPoly> eqs_E2(const Rational& lambda) {
  Vars v{5};
  const int a1 = 0, a2 = 1, b = 2, c = 3, f = 4;
  auto A1 = v.X(a1), A2 = v.X(a2), B = v.X(b), Cc = v.X(c), F = v.X(f);
  auto A12 = v.sq(A1), A22 = v.sq(A2), B2 = v.sq(B), C2 = v.sq(Cc), F2 = v.sq(F);
  auto A14 = v.sq(A12), A24 = v.sq(A22), B4 = v.sq(B2), C4 = v.sq(C2);
  auto S = v.X(a1, 1) / A1 + v.X(a2, 1) / A2 + Rational(2) * v.X(b, 1) / B +
           Rational(2) * v.X(c, 1) / Cc + v.X(f, 1) / F;
  auto AA = A12 * A22;
  std::vector<LaurentPoly> out;
  out.push_back(ricci_component(v, a1, S,
                                v.C(6) / A12 - Rational(2, 9) * F2 / AA +
                                    Rational(18) * (A14 - A24) / (AA * F2) + (A14 - B4 - C4) / (A12 * B2 * C2),
                                lambda));
  out.push_back(ricci_component(v, a2, S,
                                v.C(6) / A22 - Rational(2, 9) * F2 / AA +
                                    Rational(18) * (A24 - A14) / (AA * F2) + (A24 - B4 - C4) / (A22 * B2 * C2),
                                lambda));
  out.push_back(ricci_component(v, b, S,
                                v.C(6) / B2 - Rational(1, 18) * F2 / B4 +
                                    Rational(1, 2) * (B4 - A14 - C4) / (A12 * B2 * C2) +
                                    Rational(1, 2) * (B4 - A24 - C4) / (A22 * B2 * C2),
                                lambda));
  out.push_back(ricci_component(v, c, S,
                                v.C(6) / C2 - Rational(1, 18) * F2 / C4 +
                                    Rational(1, 2) * (C4 - A14 - B4) / (A12 * B2 * C2) +
                                    Rational(1, 2) * (C4 - A24 - B4) / (A22 * B2 * C2),
                                lambda));
  out.push_back(ricci_component(v, f, S,
                                v.C(36) / F2 - Rational(18) * A12 / (A22 * F2) - Rational(18) * A22 / (A12 * F2) +
                                    Rational(2, 9) * F2 / AA + Rational(1, 18) * F2 / B4 +
                                    Rational(1, 18) * F2 / C4,
                                lambda));
  out.push_back(-(v.X(a1, 2) / A1) - v.X(a2, 2) / A2 - Rational(2) * v.X(b, 2) / B -
                Rational(2) * v.X(c, 2) / Cc - v.X(f, 2) / F - v.C(lambda));
  return out;
}

// Flattened form for fast double evaluation.
struct Compiled {
  struct Term {
    double c;
    std::vector<std::pair<int, int>> f;  // (var, power)
  };
  std::vector<std::vector<Term>> eqs;
  std::vector<int> denominators;  // function indices that appear with negative power
};

Compiled compile(const std::vector<LaurentPoly>& eqs, int nf) {
  Compiled out;
  std::vector<bool> den(static_cast<size_t>(nf), false);
  for (const auto& e : eqs) {
    std::vector<Compiled::Term> ts;
    for (const auto& [ex, c] : e.terms()) {
      Compiled::Term t{c.to_double(), {}};
      for (size_t i = 0; i < ex.size(); ++i)
        if (ex[i] != 0) {
          t.f.emplace_back(static_cast<int>(i), ex[i]);
          if (ex[i] < 0) den[i / 3] = true;
        }
      ts.push_back(std::move(t));
    }
    out.eqs.push_back(std::move(ts));
  }
  for (int i = 0; i < nf; ++i)
    if (den[static_cast<size_t>(i)]) out.denominators.push_back(i);
  return out;
}

const Compiled& compiled_for(const SystemId& sys) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, Compiled> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(static_cast<int>(sys.kind), sys.aw.k, sys.aw.l);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  return cache.emplace(key, compile(system_equations(sys), sys.nfun())).first->second;
}

// Scalar is double or Dual (value plus directional derivative).
struct Dual {
  double v = 0.0, d = 0.0;
};
inline Dual operator*(Dual a, Dual b) { return {a.v * b.v, a.d * b.v + a.v * b.d}; }
inline Dual operator/(Dual a, Dual b) { return {a.v / b.v, (a.d * b.v - a.v * b.d) / (b.v * b.v)}; }
inline Dual operator+(Dual a, Dual b) { return {a.v + b.v, a.d + b.d}; }

template <class T>
T eval_term_list(const std::vector<Compiled::Term>& ts, const std::vector<T>& vars) {
  T s{};
  for (const auto& t : ts) {
    T p{t.c};
    for (auto [v, e] : t.f) {
      const T& x = vars[static_cast<size_t>(v)];
      if (e > 0)
        for (int i = 0; i < e; ++i) p = p * x;
      else
        for (int i = 0; i < -e; ++i) p = p / x;
    }
    s = s + p;
  }
  return s;
}

void check_denominators(const SystemId& sys, const Compiled& cp, const std::vector<double>& x) {
  if (static_cast<int>(x.size()) != sys.nfun())
    throw std::invalid_argument("state has " + std::to_string(x.size()) + " values, system " + sys.label() +
                                " expects " + std::to_string(sys.nfun()));
  for (int i : cp.denominators)
    if (x[static_cast<size_t>(i)] == 0.0) throw ZeroDenominator(sys.names()[static_cast<size_t>(i)]);
}

}  // namespace

const std::vector<std::string>& SystemId::names() const { return exceptional() ? kNames5 : kNames4; }

int SystemId::index(const std::string& fn) const {
  const auto& n = names();
  auto it = std::find(n.begin(), n.end(), fn);
  if (it == n.end()) throw std::invalid_argument("unknown function '" + fn + "' for system " + label());
  return static_cast<int>(it - n.begin());
}

std::string SystemId::label() const {
  switch (kind) {
    case SystemKind::S1: return "S1(" + std::to_string(aw.k) + "," + std::to_string(aw.l) + ")";
    case SystemKind::E1: return "E1(" + std::to_string(aw.k) + "," + std::to_string(aw.l) + ")";
    case SystemKind::S2: return "S2";
    case SystemKind::E2: return "E2";
  }
  return "?";
}

SystemId SystemId::first_order() const {
  if (kind == SystemKind::E1) return S1(aw);
  if (kind == SystemKind::E2) return S2();
  return *this;
}

SystemId SystemId::einstein_version() const {
  if (kind == SystemKind::S1) return E1(aw);
  if (kind == SystemKind::S2) return E2();
  return *this;
}

std::vector<LaurentPoly> system_equations(const SystemId& sys, const Rational& lambda) {
  switch (sys.kind) {
    case SystemKind::S1: return eqs_S1(sys.aw);
    case SystemKind::S2: return eqs_S2();
    case SystemKind::E1: return eqs_E1(sys.aw, lambda);
    case SystemKind::E2: return eqs_E2(lambda);
  }
  return {};
}

std::vector<double> rhs_first_order(const SystemId& sys, const std::vector<double>& x) {
  if (sys.einstein()) throw std::invalid_argument("rhs_first_order needs a first-order system");
  const Compiled& cp = compiled_for(sys);
  check_denominators(sys, cp, x);
  // equations are x' - F(x); evaluate with x' = 0 to get -F
  std::vector<double> vars(static_cast<size_t>(sys.nfun()) * 3, 0.0);
  for (int i = 0; i < sys.nfun(); ++i) vars[static_cast<size_t>(eq_var(i, 0))] = x[static_cast<size_t>(i)];
  std::vector<double> out;
  for (const auto& e : cp.eqs) out.push_back(-eval_term_list(e, vars));
  return out;
}

std::vector<double> second_derivative_chain(const SystemId& sys, const std::vector<double>& x) {
  SystemId fo = sys.first_order();
  auto F = rhs_first_order(fo, x);
  const Compiled& cp = compiled_for(fo);
  // directional derivative of F along F, exact up to rounding
  std::vector<Dual> vars(x.size() * 3);
  for (size_t i = 0; i < x.size(); ++i) vars[3 * i] = {x[i], F[i]};
  std::vector<double> d2;
  for (const auto& e : cp.eqs) d2.push_back(-eval_term_list(e, vars).d);
  return d2;
}

std::vector<double> second_derivative_fd(const SystemId& sys, const std::vector<double>& x) {
  SystemId fo = sys.first_order();
  auto F = rhs_first_order(fo, x);
  size_t n = x.size();
  std::vector<double> d2(n, 0.0);
  for (size_t j = 0; j < n; ++j) {
    double h = 1e-6 * std::max(1.0, std::fabs(x[j]));
    auto xp = x, xm = x;
    xp[j] += h;
    xm[j] -= h;
    auto Fp = rhs_first_order(fo, xp), Fm = rhs_first_order(fo, xm);
    for (size_t i = 0; i < n; ++i) d2[i] += (Fp[i] - Fm[i]) / (2 * h) * F[j];
  }
  return d2;
}

std::vector<double> residual_einstein(const SystemId& sys, const std::vector<double>& x,
                                      const std::vector<double>& d1, const std::vector<double>& d2,
                                      double lambda) {
  if (!sys.einstein()) throw std::invalid_argument("residual_einstein needs an Einstein system");
  const Compiled& cp = compiled_for(sys);
  check_denominators(sys, cp, x);
  if (d1.size() != x.size() || d2.size() != x.size())
    throw std::invalid_argument("derivative vectors must match the state size");
  std::vector<double> vars(x.size() * 3);
  for (size_t i = 0; i < x.size(); ++i) {
    vars[3 * i] = x[i];
    vars[3 * i + 1] = d1[i];
    vars[3 * i + 2] = d2[i];
  }
  std::vector<double> out;
  for (const auto& e : cp.eqs) out.push_back(eval_term_list(e, vars) - lambda);
  return out;
}

// ---- symmetries ----

SymmetryMap identity_map(const SystemId& sys) {
  SymmetryMap m{"identity", {}, {}, 1};
  for (int i = 0; i < sys.nfun(); ++i) {
    m.source.push_back(i);
    m.sign.push_back(1);
  }
  return m;
}

std::vector<SymmetryMap> symmetry_maps(const SystemId& sys) {
  std::vector<SymmetryMap> out;
  if (!sys.exceptional()) {
    out.push_back({"neg_a_f", {0, 1, 2, 3}, {-1, 1, 1, -1}, -1});
    if (sys.aw.k == 1 && sys.aw.l == -1) out.push_back({"s5_mirror", {0, 2, 1, 3}, {-1, 1, 1, 1}, -1});
    return out;
  }
  out.push_back({"swap_neg_a", {1, 0, 2, 3, 4}, {-1, -1, 1, 1, -1}, -1});
  out.push_back({"neg_a_f", {0, 1, 2, 3, 4}, {-1, -1, 1, 1, -1}, -1});
  out.push_back({"neg_b_f", {0, 1, 2, 3, 4}, {1, 1, -1, 1, -1}, -1});
  out.push_back({"swap_bc", {0, 1, 3, 2, 4}, {1, 1, 1, 1, 1}, 1});
  out.push_back({"swap_a", {1, 0, 2, 3, 4}, {1, 1, 1, 1, 1}, 1});
  out.push_back({"neg_c_f", {0, 1, 2, 3, 4}, {1, 1, 1, -1, -1}, -1});
  return out;
}

SymmetryMap compose(const SymmetryMap& outer, const SymmetryMap& inner) {
  // (outer o inner)(x)_i = so_i * (inner x)_{src_o(i)} = so_i * si_j * x_{src_i(j)}
  SymmetryMap m{outer.name + "*" + inner.name, {}, {}, outer.tsign * inner.tsign};
  for (size_t i = 0; i < outer.source.size(); ++i) {
    int j = outer.source[i];
    m.source.push_back(inner.source[static_cast<size_t>(j)]);
    m.sign.push_back(outer.sign[i] * inner.sign[static_cast<size_t>(j)]);
  }
  return m;
}

std::vector<double> apply_to_values(const SymmetryMap& m, const std::vector<double>& x) {
  std::vector<double> y(x.size());
  for (size_t i = 0; i < x.size(); ++i) y[i] = m.sign[i] * x[static_cast<size_t>(m.source[i])];
  return y;
}

std::vector<double> apply_to_derivative(const SymmetryMap& m, const std::vector<double>& dx) {
  auto y = apply_to_values(m, dx);
  for (auto& v : y) v *= m.tsign;
  return y;
}

std::vector<TruncSeries> apply_to_series(const SymmetryMap& m, const std::vector<TruncSeries>& s) {
  std::vector<TruncSeries> out;
  for (size_t i = 0; i < s.size(); ++i) {
    const TruncSeries& src = s[static_cast<size_t>(m.source[i])];
    TruncSeries r(src.order());
    for (int n = 0; n <= src.order(); ++n) {
      int sg = m.sign[i] * ((m.tsign < 0 && n % 2 == 1) ? -1 : 1);
      r[n] = sg < 0 ? -src[n] : src[n];
    }
    out.push_back(std::move(r));
  }
  return out;
}

// ---- catalog ----

CaseId case_from_letter(const std::string& s) {
  if (s.size() == 1 && s[0] >= 'A' && s[0] <= 'H') return static_cast<CaseId>(s[0] - 'A');
  throw std::invalid_argument("unknown case '" + s + "' (expected one of A..H)");
}

char case_letter(CaseId id) { return static_cast<char>('A' + static_cast<int>(id)); }

namespace {

SlotSpec slot(const std::string& label, int order, std::map<std::string, Rational> fn, const std::string& param) {
  return SlotSpec{label, order, std::move(fn), param};
}

void check_E_orbit(const AloffWallach& aw) {
  const int bad[4][2] = {{1, -1}, {1, 1}, {1, -2}, {2, -1}};
  for (const auto& p : bad)
    if ((aw.k == p[0] && aw.l == p[1]) || (aw.k == -p[0] && aw.l == -p[1]))
      throw std::invalid_argument("case E excludes (k,l) = (" + std::to_string(aw.k) + "," +
                                  std::to_string(aw.l) + ")");
  if (aw.k + aw.l == 0) throw std::invalid_argument("case E needs k + l != 0");
}

}  // namespace

OrbitCase orbit_case(CaseId id, std::optional<AloffWallach> aw_opt) {
  OrbitCase oc;
  oc.id = id;
  const Rational one(1);
  switch (id) {
    case CaseId::A:
    case CaseId::B: {
      AloffWallach aw = id == CaseId::B ? AloffWallach::make(1, 0) : aw_opt.value_or(AloffWallach::make(2, 1));
      if (id == CaseId::A && aw.is_exceptional_11())
        throw std::invalid_argument("case A needs a principal orbit not equivalent to N^{1,1}");
      oc.name = id == CaseId::A ? "A_generic_flag" : "B_N10_flag";
      oc.system = SystemId::S1(aw);
      oc.vanishing = {"f"};
      oc.constraints = {"f(0) = 0", "a(0) b(0) c(0) != 0"};
      oc.params = {"a0", "b0", "c0"};
      oc.einstein_slots = {slot("f", 3, {{"f", one}}, "f3")};
      oc.normalization = {{"f", Rational(2 * aw.delta)}};
      oc.parity = {{"a", Parity::even}, {"b", Parity::even}, {"c", Parity::even}, {"f", Parity::odd}};
      oc.holonomy = "degenerate: f ≡ 0 (holonomy in G2 product branch, out of Spin(7) scope)";
      oc.einstein_supported = true;
      break;
    }
    case CaseId::C:
      oc.name = "C_N11Z2_flag";
      oc.system = SystemId::S2();
      oc.vanishing = {"f"};
      oc.constraints = {"a1(0) = a0", "a2(0) = -a0", "f(0) = 0", "f'(0) = 12"};
      oc.params = {"a0", "b0", "c0"};
      oc.einstein_slots = {slot("a1+a2", 1, {{"a1", one}, {"a2", one}}, "asum1"),
                           slot("f", 3, {{"f", one}}, "f3")};
      oc.normalization = {{"f", Rational(12)}};
      oc.parity = {{"a1", Parity::mirror}, {"a2", Parity::mirror}, {"b", Parity::even},
                   {"c", Parity::even},    {"f", Parity::odd}};
      oc.mirrors = {{"a1", "a2", -1}};
      oc.holonomy = "Spin(7) structure; SU(4) when a0^2 = b0^2 + c0^2";
      oc.einstein_supported = true;
      break;
    case CaseId::D:
      oc.name = "D_N1m1_S5";
      oc.system = SystemId::S1(AloffWallach::make(1, -1));
      oc.vanishing = {"a"};
      oc.constraints = {"a(0) = 0", "a'(0) = 2", "b(0) = c(0) = b0", "f(0) = f0"};
      oc.params = {"b0", "f0"};
      oc.einstein_slots = {slot("b-c", 1, {{"b", one}, {"c", Rational(-1)}}, "b1"),
                           slot("a", 3, {{"a", one}}, "a3")};
      oc.normalization = {{"a", Rational(2)}};
      oc.parity = {{"a", Parity::odd}, {"b", Parity::mirror}, {"c", Parity::mirror}, {"f", Parity::even}};
      oc.mirrors = {{"b", "c", 1}};
      oc.holonomy = "Spin(7)";
      oc.einstein_supported = true;
      break;
    case CaseId::E: {
      AloffWallach aw = aw_opt.value_or(AloffWallach::make(1, 0));
      check_E_orbit(aw);
      oc.name = "E_generic_CP2";
      oc.system = SystemId::S1(aw);
      oc.vanishing = {"a", "f"};
      oc.constraints = {"a(0) = f(0) = 0", "a'(0) = 1", "f'(0) = 2 Delta/(k+l)", "b(0) = c(0) = b0"};
      oc.params = {"b0"};
      oc.free_slots = {slot("f", 3, {{"f", one}}, "q")};
      oc.normalization = {{"a", one}, {"f", (Rational(2 * aw.delta) / Rational(aw.k + aw.l)).abs()}};
      oc.parity = {{"a", Parity::odd}, {"b", Parity::even}, {"c", Parity::even}, {"f", Parity::odd}};
      oc.holonomy = "Spin(7)";
      break;
    }
    case CaseId::F:
      oc.name = "F_N11_CP2_aa";
      oc.system = SystemId::S2();
      oc.vanishing = {"a1", "a2", "f"};
      oc.constraints = {"a1(0) = a2(0) = f(0) = 0", "a1'(0) = a2'(0) = 1", "f'(0) = 3", "b(0) = c(0) = b0"};
      oc.params = {"b0"};
      oc.free_slots = {slot("a1", 3, {{"a1", one}}, "q1"), slot("a2", 3, {{"a2", one}}, "q2")};
      oc.normalization = {{"a1", one}, {"a2", one}, {"f", Rational(3)}};
      oc.parity = {{"a1", Parity::odd}, {"a2", Parity::odd}, {"b", Parity::even},
                   {"c", Parity::even},  {"f", Parity::odd}};
      oc.holonomy = "contained in Spin(7)";
      break;
    case CaseId::G:
      oc.name = "G_N11_CP2_bplus";
      oc.system = SystemId::S2();
      oc.vanishing = {"b", "f"};
      oc.constraints = {"b(0) = f(0) = 0", "a1(0) = a2(0) = c(0) = a0", "b'(0) = 1", "f'(0) = -6"};
      oc.params = {"a0"};
      oc.free_slots = {slot("b", 3, {{"b", one}}, "q")};
      oc.normalization = {{"b", one}, {"f", Rational(6)}};
      oc.parity = {{"a1", Parity::even}, {"a2", Parity::even}, {"b", Parity::odd},
                   {"c", Parity::even},  {"f", Parity::odd}};
      oc.holonomy = "contained in Spin(7)";
      break;
    case CaseId::H:
      oc.name = "H_N11_CP2_bminus";
      oc.system = SystemId::S2();
      oc.vanishing = {"b", "f"};
      oc.constraints = {"b(0) = f(0) = 0", "a1(0) = -a2(0) = c(0) = a0", "b'(0) = 1", "f'(0) = 6"};
      oc.params = {"a0"};
      oc.free_slots = {slot("c", 2, {{"c", one}}, "q")};
      oc.normalization = {{"b", one}, {"f", Rational(6)}};
      oc.parity = {{"a1", Parity::even}, {"a2", Parity::even}, {"b", Parity::odd},
                   {"c", Parity::even},  {"f", Parity::odd}};
      oc.holonomy = "contained in Spin(7)";
      break;
  }
  return oc;
}

}  // namespace cohom
