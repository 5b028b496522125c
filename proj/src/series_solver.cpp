#include "cohom/series_solver.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace cohom {

namespace {

using Vec = std::vector<Rational>;

Rational falling(int p, int d) {
  long v = 1;
  for (int q = 0; q < d; ++q) v *= (p - q);
  return Rational(v);
}

// Derivative series and cached powers of one coefficient state, cut at index `cut`.
class Evaluator {
 public:
  Evaluator(const std::vector<Vec>& ser, int maxd, int cut) : maxd_(maxd), cut_(cut) {
    int nf = static_cast<int>(ser.size());
    deriv_.resize(static_cast<size_t>(nf) * 3);
    pows_.resize(deriv_.size());
    for (int f = 0; f < nf; ++f)
      for (int d = 0; d <= maxd; ++d) {
        Vec& D = deriv_[static_cast<size_t>(eq_var(f, d))];
        D.assign(static_cast<size_t>(cut) + 1, Rational(0));
        const Vec& s = ser[static_cast<size_t>(f)];
        for (int j = 0; j <= cut && j + d < static_cast<int>(s.size()); ++j)
          if (!s[static_cast<size_t>(j + d)].is_zero()) D[static_cast<size_t>(j)] = falling(j + d, d) * s[static_cast<size_t>(j + d)];
      }
  }

  const Vec& power(int var, int p) {
    auto& cache = pows_[static_cast<size_t>(var)];
    if (cache.empty()) cache.push_back(Vec{Rational(1)});  // p = 0
    while (static_cast<int>(cache.size()) <= p) {
      Vec next;
      cauchy_into(next, cache.back(), deriv_[static_cast<size_t>(var)], cut_);
      cache.push_back(std::move(next));
    }
    return cache[static_cast<size_t>(p)];
  }

  // coefficient * prod factors, optionally with one power of `skip` removed
  void accumulate(Vec& acc, const PolyIdentity::Term& t, const Rational& scale, int skip = -1) {
    Vec prod{t.coef * scale};
    Vec tmp;
    for (auto [v, e] : t.factors) {
      int pw = v == skip ? e - 1 : e;
      if (pw == 0) continue;
      cauchy_into(tmp, prod, power(v, pw), cut_);
      prod.swap(tmp);
    }
    for (size_t j = 0; j < prod.size() && j < acc.size(); ++j)
      if (!prod[j].is_zero()) acc[j] += prod[j];
  }

  Vec evaluate(const PolyIdentity& id) {
    Vec acc(static_cast<size_t>(cut_) + 1, Rational(0));
    for (const auto& t : id.terms) accumulate(acc, t, Rational(1));
    return acc;
  }

  Vec partial(const PolyIdentity& id, int var) {
    Vec acc(static_cast<size_t>(cut_) + 1, Rational(0));
    for (const auto& t : id.terms)
      for (auto [v, e] : t.factors)
        if (v == var) accumulate(acc, t, Rational(e), var);
    return acc;
  }

  int maxd() const { return maxd_; }

 private:
  int maxd_;
  int cut_;
  std::vector<Vec> deriv_;
  std::vector<std::vector<Vec>> pows_;
};

struct LinSolve {
  bool consistent = true;
  Vec x;
  std::vector<Vec> null;
  int rank = 0;
};

// Exact Gauss-Jordan elimination over Q.
LinSolve solve_linear(std::vector<Vec> A, Vec b, int ncols) {
  LinSolve out;
  int m = static_cast<int>(A.size());
  std::vector<int> piv;
  int r = 0;
  for (int col = 0; col < ncols && r < m; ++col) {
    int p = -1;
    for (int i = r; i < m; ++i)
      if (!A[i][col].is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(A[r], A[p]);
    std::swap(b[r], b[p]);
    Rational inv = Rational(1) / A[r][col];
    for (auto& v : A[r]) v *= inv;
    b[r] *= inv;
    for (int i = 0; i < m; ++i) {
      if (i == r || A[i][col].is_zero()) continue;
      Rational fct = A[i][col];
      for (int c = 0; c < ncols; ++c)
        if (!A[r][c].is_zero()) A[i][c] -= fct * A[r][c];
      b[i] -= fct * b[r];
    }
    piv.push_back(col);
    ++r;
  }
  out.rank = r;
  for (int i = r; i < m; ++i)
    if (!b[i].is_zero()) out.consistent = false;
  out.x.assign(static_cast<size_t>(ncols), Rational(0));
  for (int i = 0; i < r; ++i) out.x[piv[i]] = b[i];
  std::vector<bool> is_piv(static_cast<size_t>(ncols), false);
  for (int c : piv) is_piv[c] = true;
  for (int fc = 0; fc < ncols; ++fc) {
    if (is_piv[fc]) continue;
    Vec v(static_cast<size_t>(ncols), Rational(0));
    v[fc] = Rational(1);
    for (int i = 0; i < r; ++i) v[piv[i]] = -A[i][fc];
    out.null.push_back(std::move(v));
  }
  return out;
}

int matrix_rank(const std::vector<Vec>& rows, int ncols) {
  if (rows.empty()) return 0;
  return solve_linear(rows, Vec(rows.size(), Rational(0)), ncols).rank;
}

std::string slot_name(const std::string& label, int order) {
  return "(" + label + "," + std::to_string(order) + ")";
}

}  // namespace

// ---------------------------------------------------------------------------

std::string PolyIdentity::to_string(const std::vector<std::string>& names) const {
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms) {
    Rational c = t.coef;
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0) os << "-";
    first = false;
    Rational ac = c.abs();
    bool unit = ac == Rational(1) && !t.factors.empty();
    if (!unit) os << (ac.is_integer() ? ac.num_str() : "(" + ac.str() + ")");
    bool lead = unit;
    for (auto [v, e] : t.factors) {
      if (!lead) os << "*";
      lead = false;
      os << names[static_cast<size_t>(v / 3)] << std::string(static_cast<size_t>(v % 3), '\'');
      if (e > 1) os << "^" << e;
    }
  }
  return first ? "0" : os.str();
}

std::vector<PolyIdentity> polynomialize(const SystemId& sys, const Rational& lambda) {
  std::vector<PolyIdentity> out;
  for (const auto& eq : system_equations(sys, lambda)) {
    PolyIdentity id;
    const LaurentPoly cl = eq.cleared();
    for (const auto& [ex, c] : cl.terms()) {
      PolyIdentity::Term t{c, {}};
      for (size_t i = 0; i < ex.size(); ++i)
        if (ex[i] != 0) t.factors.emplace_back(static_cast<int>(i), ex[i]);
      id.terms.push_back(std::move(t));
    }
    out.push_back(std::move(id));
  }
  return out;
}

TruncSeries evaluate_identity(const PolyIdentity& id, const std::vector<TruncSeries>& s, int n) {
  std::vector<Vec> raw;
  for (const auto& x : s) raw.push_back(x.coeffs());
  int maxd = 0;
  for (const auto& t : id.terms)
    for (auto [v, e] : t.factors) maxd = std::max(maxd, v % 3);
  Evaluator ev(raw, maxd, n);
  return TruncSeries(ev.evaluate(id));
}

const TruncSeries& SeriesSolution::fn(const std::string& name) const {
  return functions[static_cast<size_t>(system.index(name))];
}

// ---------------------------------------------------------------------------

EngineResult run_engine(const EngineProblem& p) {
  const int nf = p.system.nfun();
  const int maxd = p.system.max_derivative();
  const int N = p.order;
  const int K = p.window;
  const auto& names = p.system.names();
  const int nid = static_cast<int>(p.identities.size());

  std::vector<Vec> ser(static_cast<size_t>(nf), Vec(static_cast<size_t>(N + maxd + K + 2), Rational(0)));
  std::set<std::pair<int, int>> fixed;
  for (const auto& [key, v] : p.seeds) {
    if (key.second > N) continue;
    ser[key.first][key.second] = v;
    fixed.insert(key);
  }

  EngineResult res;
  std::vector<int> nextj(static_cast<size_t>(nid), 0);
  std::vector<std::vector<Vec>> P;  // P[id][var], truncated at K

  for (int n = 0; n <= N; ++n) {
    std::vector<int> unknowns;
    for (int f = 0; f < nf; ++f)
      if (!fixed.count({f, n})) unknowns.push_back(f);
    const int nu = static_cast<int>(unknowns.size());

    // Coefficients of order >= K + maxd + 1 no longer influence P.
    if (P.empty() || n <= K + maxd + 1) {
      Evaluator ev(ser, maxd, K);
      P.assign(static_cast<size_t>(nid), {});
      for (int i = 0; i < nid; ++i)
        for (int var = 0; var < nf * 3; ++var)
          P[i].push_back(var % 3 <= maxd ? ev.partial(p.identities[i], var) : Vec{});
    }
    auto dep = [&](int id, int j, int g, int pord) {
      Rational v(0);
      for (int d = 0; d <= maxd; ++d) {
        int idx = j - pord + d;
        if (idx < 0 || idx > K) continue;
        const Rational& c = P[id][eq_var(g, d)][idx];
        if (!c.is_zero()) v += falling(pord, d) * c;
      }
      return v;
    };

    const int jmax = n + K - 2;
    Evaluator base(ser, maxd, jmax);
    std::vector<Vec> rows;
    Vec rhs;
    std::vector<std::pair<int, int>> info;
    for (int i = 0; i < nid; ++i) {
      Vec b = base.evaluate(p.identities[i]);
      int j = nextj[i];
      for (; j <= jmax; ++j) {
        bool blocked = false;
        for (int g = 0; g < nf && !blocked; ++g)
          for (int q = n + 1; q <= j + maxd && !blocked; ++q)
            if (!dep(i, j, g, q).is_zero()) blocked = true;
        if (blocked) break;
        Vec row;
        for (int g : unknowns) row.push_back(dep(i, j, g, n));
        rows.push_back(std::move(row));
        rhs.push_back(-b[j]);
        info.emplace_back(i, j);
      }
      if (j > jmax && n > 0)
        throw std::logic_error("series window too small at order " + std::to_string(n));
      nextj[i] = j;
    }

    OrderDiagnostic diag{n, nu, static_cast<int>(rows.size()), 0, 0};
    if (nu == 0) {
      for (size_t r = 0; r < rhs.size(); ++r)
        if (!rhs[r].is_zero())
          throw SolverError(SolverError::Kind::inconsistent,
                            "no formal solution at order " + std::to_string(n) + ": identity " +
                                std::to_string(info[r].first) + " coefficient " + std::to_string(info[r].second) +
                                " is " + (-rhs[r]).str());
      res.diagnostics.push_back(diag);
      continue;
    }

    LinSolve ls = solve_linear(rows, rhs, nu);
    if (!ls.consistent) {
      std::string where;
      for (auto [i, j] : info) where += " (" + std::to_string(i) + "," + std::to_string(j) + ")";
      throw SolverError(SolverError::Kind::inconsistent,
                        "no formal solution at order " + std::to_string(n) + "; imposed identity coefficients" + where);
    }
    diag.rank = ls.rank;
    diag.nullity = static_cast<int>(ls.null.size());

    // functional restricted to the unknowns, plus the contribution of seeded entries
    auto restrict = [&](const Vec& w, Rational& fixed_part) {
      Vec r;
      fixed_part = Rational(0);
      for (int g = 0; g < nf; ++g) {
        bool unk = std::find(unknowns.begin(), unknowns.end(), g) != unknowns.end();
        if (unk) r.push_back(w[g]);
        else if (!w[g].is_zero()) fixed_part += w[g] * ser[g][n];
      }
      return r;
    };
    auto apply = [&](const Vec& w, const Vec& x) {
      Rational s(0);
      for (int k = 0; k < nu; ++k) s += w[k] * x[k];
      return s;
    };

    std::vector<size_t> used_decl;
    if (!ls.null.empty()) {
      const int r = static_cast<int>(ls.null.size());
      std::vector<Vec> img;  // functional evaluated on the null basis
      std::vector<Vec> pins;
      Vec pin_rhs;
      auto try_add = [&](const Vec& wu) {
        Vec row;
        for (const auto& nv : ls.null) row.push_back(apply(wu, nv));
        auto trial = img;
        trial.push_back(row);
        if (matrix_rank(trial, r) <= static_cast<int>(img.size())) return false;
        img.push_back(row);
        return true;
      };
      for (size_t s = 0; s < p.slots.size() && static_cast<int>(img.size()) < r; ++s) {
        const SlotDecl& sd = p.slots[s];
        if (sd.order != n) continue;
        Rational fp;
        Vec wu = restrict(sd.functional, fp);
        if (!try_add(wu)) continue;
        used_decl.push_back(s);
        Rational val;
        if (sd.value) val = *sd.value;
        else if (!p.probe)
          throw SolverError(SolverError::Kind::missing_slot, "missing value for free slot " + slot_name(sd.label, n));
        pins.push_back(wu);
        pin_rhs.push_back(val - fp);
        FoundSlot fs{sd.label, n, {}, val, true};
        for (int g = 0; g < nf; ++g)
          if (!sd.functional[g].is_zero()) fs.functional[names[g]] = sd.functional[g];
        res.slots.push_back(fs);
      }
      // undeclared directions: unit functionals first, then +-1 pairs
      std::vector<std::pair<std::string, Vec>> autos;
      for (int k = 0; k < nu; ++k) {
        Vec w(static_cast<size_t>(nu), Rational(0));
        w[k] = Rational(1);
        autos.emplace_back(names[unknowns[k]], w);
      }
      for (int k = 0; k < nu; ++k)
        for (int m = k + 1; m < nu; ++m)
          for (int sg : {1, -1}) {
            Vec w(static_cast<size_t>(nu), Rational(0));
            w[k] = Rational(1);
            w[m] = Rational(sg);
            autos.emplace_back(names[unknowns[k]] + (sg > 0 ? "+" : "-") + names[unknowns[m]], w);
          }
      for (const auto& [label, wu] : autos) {
        if (static_cast<int>(img.size()) >= r) break;
        if (!try_add(wu)) continue;
        if (!p.probe)
          throw SolverError(SolverError::Kind::missing_slot,
                            "order " + std::to_string(n) + " is underdetermined: missing value for free slot " +
                                slot_name(label, n));
        pins.push_back(wu);
        pin_rhs.push_back(Rational(0));
        FoundSlot fs{label, n, {}, Rational(0), false};
        for (int k = 0; k < nu; ++k)
          if (!wu[k].is_zero()) fs.functional[names[unknowns[k]]] = wu[k];
        res.slots.push_back(fs);
      }
      auto all_rows = rows;
      auto all_rhs = rhs;
      all_rows.insert(all_rows.end(), pins.begin(), pins.end());
      all_rhs.insert(all_rhs.end(), pin_rhs.begin(), pin_rhs.end());
      ls = solve_linear(all_rows, all_rhs, nu);
      if (!ls.consistent || !ls.null.empty())
        throw std::logic_error("slot pinning failed at order " + std::to_string(n));
    }

    // prescribed slots that turned out not to be free must agree with the forced value
    for (size_t s = 0; s < p.slots.size(); ++s) {
      const SlotDecl& sd = p.slots[s];
      if (sd.order != n || !sd.value) continue;
      if (std::find(used_decl.begin(), used_decl.end(), s) != used_decl.end()) continue;
      Rational fp;
      Vec wu = restrict(sd.functional, fp);
      Rational forced = apply(wu, ls.x) + fp;
      if (forced != *sd.value)
        throw SolverError(SolverError::Kind::inconsistent,
                          "no formal solution at order " + std::to_string(n) + ": slot " + slot_name(sd.label, n) +
                              " is not free, the recursion forces " + forced.str() + " but " + sd.value->str() +
                              " was prescribed");
    }

    for (int k = 0; k < nu; ++k) ser[unknowns[k]][n] = ls.x[k];

    // exact check of every coefficient imposed at this order
    if (!info.empty()) {
      int jm = 0;
      for (auto [i, j] : info) jm = std::max(jm, j);
      Evaluator chk(ser, maxd, jm);
      std::map<int, Vec> vals;
      for (auto [i, j] : info) {
        if (!vals.count(i)) vals[i] = chk.evaluate(p.identities[i]);
        if (!vals[i][j].is_zero())
          throw SolverError(SolverError::Kind::inconsistent,
                            "no formal solution at order " + std::to_string(n) + ": identity " + std::to_string(i) +
                                " coefficient " + std::to_string(j) + " does not vanish");
      }
    }
    res.diagnostics.push_back(diag);
  }

  for (int f = 0; f < nf; ++f) {
    Vec c(ser[f].begin(), ser[f].begin() + N + 1);
    res.functions.emplace_back(std::move(c));
  }
  return res;
}

// ---------------------------------------------------------------------------
// Case layer

namespace {

struct CaseSetup {
  std::map<std::pair<int, int>, Rational> seeds;
  std::vector<SlotDecl> slots;
};

class ParamReader {
 public:
  ParamReader(const Params& p, std::set<std::string> allowed) : p_(p) {
    for (const auto& [k, v] : p)
      if (!allowed.count(k)) throw SolverError(SolverError::Kind::constraint, "unknown parameter '" + k + "'");
  }
  Rational need(const std::string& k, bool nonzero = true) const {
    auto it = p_.find(k);
    if (it == p_.end()) throw SolverError(SolverError::Kind::constraint, "missing parameter '" + k + "'");
    if (nonzero && it->second.is_zero())
      throw SolverError(SolverError::Kind::constraint, "parameter '" + k + "' must be nonzero");
    return it->second;
  }
  std::optional<Rational> opt(const std::string& k) const {
    auto it = p_.find(k);
    if (it == p_.end()) return std::nullopt;
    return it->second;
  }

 private:
  const Params& p_;
};

SlotDecl make_decl(const SystemId& sys, const SlotSpec& spec, std::optional<Rational> value) {
  SlotDecl d{spec.label, spec.order, Vec(static_cast<size_t>(sys.nfun()), Rational(0)), value};
  for (const auto& [fn, c] : spec.functional) d.functional[sys.index(fn)] = c;
  return d;
}

// Maps a caller parameter to the coefficient-space slot value.
std::optional<Rational> scaled(const std::optional<Rational>& v, const Rational& factor) {
  if (!v) return std::nullopt;
  return *v * factor;
}

CaseSetup setup_case(const OrbitCase& oc, const Params& params, bool einstein) {
  const SystemId& sys = oc.system;
  auto ix = [&](const char* n) { return sys.index(n); };
  std::set<std::string> allowed(oc.params.begin(), oc.params.end());
  const auto& slot_specs = einstein ? oc.einstein_slots : oc.free_slots;
  for (const auto& s : slot_specs) allowed.insert(s.param);
  if (oc.id == CaseId::D) allowed.insert("c0");
  ParamReader pr(params, allowed);

  CaseSetup cs;
  auto seed = [&](int fn, int n, const Rational& v) { cs.seeds[{fn, n}] = v; };
  std::vector<std::optional<Rational>> slot_vals;
  switch (oc.id) {
    case CaseId::A:
    case CaseId::B:
      seed(ix("a"), 0, pr.need("a0"));
      seed(ix("b"), 0, pr.need("b0"));
      seed(ix("c"), 0, pr.need("c0"));
      seed(ix("f"), 0, Rational(0));
      if (einstein) {
        seed(ix("f"), 1, Rational(2 * sys.aw.delta));
        slot_vals = {scaled(pr.opt("f3"), Rational(1, 6))};
      }
      break;
    case CaseId::C: {
      Rational a0 = pr.need("a0");
      seed(ix("a1"), 0, a0);
      seed(ix("a2"), 0, -a0);
      seed(ix("b"), 0, pr.need("b0"));
      seed(ix("c"), 0, pr.need("c0"));
      seed(ix("f"), 0, Rational(0));
      seed(ix("f"), 1, Rational(12));
      if (einstein) slot_vals = {pr.opt("asum1"), scaled(pr.opt("f3"), Rational(1, 6))};
      break;
    }
    case CaseId::D: {
      Rational b0 = pr.need("b0");
      if (auto c0 = pr.opt("c0"); c0 && *c0 != b0)
        throw SolverError(SolverError::Kind::constraint,
                          "case D requires b(0) = c(0), got b0 = " + b0.str() + ", c0 = " + c0->str());
      seed(ix("a"), 0, Rational(0));
      seed(ix("a"), 1, Rational(2));
      seed(ix("b"), 0, b0);
      seed(ix("c"), 0, b0);
      seed(ix("f"), 0, pr.need("f0"));
      if (einstein) slot_vals = {pr.opt("b1"), scaled(pr.opt("a3"), Rational(1, 6))};
      break;
    }
    case CaseId::E: {
      Rational b0 = pr.need("b0");
      seed(ix("a"), 0, Rational(0));
      seed(ix("a"), 1, Rational(1));
      seed(ix("b"), 0, b0);
      seed(ix("c"), 0, b0);
      seed(ix("f"), 0, Rational(0));
      seed(ix("f"), 1, Rational(2 * sys.aw.delta) / Rational(sys.aw.k + sys.aw.l));
      slot_vals = {scaled(pr.opt("q"), Rational(1) / (Rational(6) * b0 * b0))};
      break;
    }
    case CaseId::F: {
      Rational b0 = pr.need("b0");
      for (const char* a : {"a1", "a2"}) {
        seed(ix(a), 0, Rational(0));
        seed(ix(a), 1, Rational(1));
      }
      seed(ix("b"), 0, b0);
      seed(ix("c"), 0, b0);
      seed(ix("f"), 0, Rational(0));
      seed(ix("f"), 1, Rational(3));
      Rational s = Rational(1) / (Rational(6) * b0 * b0);
      slot_vals = {scaled(pr.opt("q1"), s), scaled(pr.opt("q2"), s)};
      break;
    }
    case CaseId::G:
    case CaseId::H: {
      Rational a0 = pr.need("a0");
      bool g = oc.id == CaseId::G;
      seed(ix("a1"), 0, a0);
      seed(ix("a2"), 0, g ? a0 : -a0);
      seed(ix("c"), 0, a0);
      seed(ix("b"), 0, Rational(0));
      seed(ix("b"), 1, Rational(1));
      seed(ix("f"), 0, Rational(0));
      seed(ix("f"), 1, Rational(g ? -6 : 6));
      slot_vals = {g ? scaled(pr.opt("q"), Rational(1) / (Rational(6) * a0 * a0))
                     : scaled(pr.opt("q"), Rational(1) / (Rational(2) * a0))};
      break;
    }
  }
  SystemId target = einstein ? sys.einstein_version() : sys;
  for (size_t i = 0; i < slot_specs.size(); ++i)
    cs.slots.push_back(make_decl(target, slot_specs[i], i < slot_vals.size() ? slot_vals[i] : std::nullopt));
  return cs;
}

// Error messages name the caller's parameter alongside the slot.
[[noreturn]] void rethrow_with_param(const SolverError& e, const std::vector<SlotSpec>& specs) {
  std::string msg = e.what();
  if (e.kind == SolverError::Kind::missing_slot)
    for (const auto& s : specs)
      if (msg.find(slot_name(s.label, s.order)) != std::string::npos) msg += " (parameter '" + s.param + "')";
  throw SolverError(e.kind, msg);
}

SeriesSolution solve_impl(const OrbitCase& oc, const Params& params, bool einstein, const Rational& lambda,
                          int order, bool probe) {
  if (order < 1) throw std::invalid_argument("series order must be at least 1");
  if (einstein && !oc.einstein_supported)
    throw SolverError(SolverError::Kind::constraint,
                      std::string("Einstein series are only available for cases A-D, not ") + case_letter(oc.id));
  CaseSetup cs = setup_case(oc, params, einstein);
  EngineProblem prob;
  prob.system = einstein ? oc.system.einstein_version() : oc.system;
  prob.identities = polynomialize(prob.system, lambda);
  prob.seeds = cs.seeds;
  prob.slots = cs.slots;
  prob.order = order;
  prob.probe = probe;
  EngineResult er;
  try {
    er = run_engine(prob);
  } catch (const SolverError& e) {
    rethrow_with_param(e, einstein ? oc.einstein_slots : oc.free_slots);
  }

  SeriesSolution sol;
  sol.oc = oc;
  sol.system = prob.system;
  sol.einstein = einstein;
  sol.lambda = lambda;
  sol.params = params;
  sol.order = order;
  sol.functions = std::move(er.functions);
  sol.slots = std::move(er.slots);
  sol.diagnostics = std::move(er.diagnostics);
  if ((oc.id == CaseId::A || oc.id == CaseId::B) && !einstein && sol.fn("f").is_zero())
    sol.flags.push_back("degenerate: f ≡ 0 (holonomy in G2 product branch, out of Spin(7) scope)");
  if (auto bad = verify_substitution(sol))
    throw std::logic_error("re-substitution failed: identity " + std::to_string(bad->first) + " coefficient " +
                           std::to_string(bad->second));
  return sol;
}

Params with_defaults(const OrbitCase& oc, Params p) {
  const std::map<std::string, Rational> defaults = {{"a0", Rational(2)}, {"b0", Rational(1)}, {"c0", Rational(1)},
                                                     {"f0", Rational(1)}};
  for (const auto& name : oc.params)
    if (!p.count(name) && defaults.count(name)) p[name] = defaults.at(name);
  return p;
}

std::vector<SlotId> slot_ids(const SeriesSolution& s) {
  std::vector<SlotId> out;
  for (const auto& f : s.slots) out.push_back({f.label, f.order});
  return out;
}

}  // namespace

SeriesSolution solve_series(const OrbitCase& oc, const Params& params, int order) {
  return solve_impl(oc, params, false, Rational(0), order, false);
}

SeriesSolution einstein_series(const OrbitCase& oc, const Params& params, const Rational& lambda, int order) {
  return solve_impl(oc, params, true, lambda, order, false);
}

std::vector<SlotId> free_slots(const OrbitCase& oc, int order, const Params& params) {
  Params p = with_defaults(oc, params);
  for (const auto& s : oc.free_slots) p.erase(s.param);
  return slot_ids(solve_impl(oc, p, false, Rational(0), order, true));
}

std::vector<SlotId> einstein_free_slots(const OrbitCase& oc, const Rational& lambda, int order,
                                        const Params& params) {
  Params p = with_defaults(oc, params);
  for (const auto& s : oc.einstein_slots) p.erase(s.param);
  return slot_ids(solve_impl(oc, p, true, lambda, order, true));
}

std::optional<std::pair<int, int>> verify_substitution(const SeriesSolution& sol) {
  auto ids = polynomialize(sol.system, sol.lambda);
  int upto = sol.order - sol.system.max_derivative();
  if (upto < 0) return std::nullopt;
  for (size_t i = 0; i < ids.size(); ++i) {
    TruncSeries r = evaluate_identity(ids[i], sol.functions, upto);
    for (int j = 0; j <= upto; ++j)
      if (!r[j].is_zero()) return std::make_pair(static_cast<int>(i), j);
  }
  return std::nullopt;
}

SmoothnessReport check_smoothness(const SeriesSolution& sol) {
  SmoothnessReport rep;
  const OrbitCase& oc = sol.oc;
  for (const auto& [fn, par] : oc.parity) {
    bool ok = true;
    if (par == Parity::mirror) {
      rep.parity_ok[fn] = true;
      continue;
    }
    const TruncSeries& s = sol.fn(fn);
    for (int n = 0; n <= s.order(); ++n) {
      bool must_vanish = (par == Parity::even) == (n % 2 == 1);
      if (must_vanish && !s[n].is_zero()) {
        ok = false;
        rep.violations.push_back({fn, n, s[n], par == Parity::even ? "odd coefficient of even function"
                                                                      : "even coefficient of odd function"});
      }
    }
    rep.parity_ok[fn] = ok;
  }
  for (const auto& m : oc.mirrors) {
    const TruncSeries& f = sol.fn(m.f);
    const TruncSeries& g = sol.fn(m.g);
    for (int n = 0; n <= std::min(f.order(), g.order()); ++n) {
      Rational expect = g[n] * Rational((n % 2 ? -1 : 1) * m.sign);
      if (f[n] != expect) {
        rep.mirror_ok = false;
        rep.violations.push_back({m.f, n, f[n], "mirror relation with " + m.g + " fails (expected " + expect.str() + ")"});
      }
    }
  }
  for (const auto& [fn, c] : oc.normalization) {
    const TruncSeries& s = sol.fn(fn);
    bool ok = s.order() >= 1 && s[1].abs() == c;
    rep.normalization_ok[fn] = ok;
    if (!ok)
      rep.violations.push_back({fn, 1, s.order() >= 1 ? s[1] : Rational(0), "|" + fn + "'(0)| should be " + c.str()});
  }
  return rep;
}

}  // namespace cohom
