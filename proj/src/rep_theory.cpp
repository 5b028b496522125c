#include "cohom/rep_theory.hpp"

#include <numeric>
#include <stdexcept>

namespace cohom {

AloffWallach AloffWallach::make(int k, int l) {
  if (k == 0 && l == 0) throw std::invalid_argument("(k,l) = (0,0) is not allowed");
  if (std::gcd(k, l) != 1) throw std::invalid_argument("gcd(k,l) must be 1");
  return AloffWallach{k, l, k * k + k * l + l * l};
}

// The Weyl group permutes (k, l, -k-l) and flips the overall sign.
static bool weyl_equivalent(int k, int l, int k2, int l2) {
  int m = -k - l;
  const int perms[6][2] = {{k, l}, {l, k}, {k, m}, {m, k}, {l, m}, {m, l}};
  for (const auto& p : perms)
    if ((p[0] == k2 && p[1] == l2) || (-p[0] == k2 && -p[1] == l2)) return true;
  return false;
}

bool AloffWallach::is_exceptional_11() const { return weyl_equivalent(k, l, 1, 1); }
bool AloffWallach::is_10_type() const { return weyl_equivalent(k, l, 1, 0); }

TorusWeight TorusWeight::canonical() const {
  if (r > 0 || (r == 0 && s >= 0)) return *this;
  return {-r, -s};
}

void TorusModuleSum::add(TorusWeight w, int mult) {
  if (mult <= 0) return;
  if (w.trivial()) {
    trivial += mult;
    return;
  }
  nontrivial[w.canonical()] += mult;
}

int TorusModuleSum::multiplicity(TorusWeight w) const {
  if (w.trivial()) return trivial;
  auto it = nontrivial.find(w.canonical());
  return it == nontrivial.end() ? 0 : it->second;
}

int TorusModuleSum::real_dim() const {
  int d = trivial;
  for (const auto& [w, m] : nontrivial) d += 2 * m;
  return d;
}

IsotropyModules isotropy_modules(const AloffWallach& aw) {
  int k = aw.k, l = aw.l;
  return {TorusWeight{3 * k + 3 * l, k - l}.canonical(), TorusWeight{3 * l, 2 * k + l}.canonical(),
          TorusWeight{-3 * k, k + 2 * l}.canonical(), TorusWeight{2 * aw.delta, 0}.canonical()};
}

TorusModuleSum torus_sym_power(TorusWeight w, int m) {
  TorusModuleSum out;
  for (int p = 0; 2 * p <= m; ++p) out.add({(m - 2 * p) * w.r, (m - 2 * p) * w.s});
  return out;
}

TorusModuleSum decompose_S2_p(const AloffWallach& aw) {
  int k = aw.k, l = aw.l;
  const TorusWeight ws[9] = {{6 * k + 6 * l, 2 * k - 2 * l}, {6 * l, 4 * k + 2 * l},
                             {-6 * k, 2 * k + 4 * l},        {3 * k + 6 * l, 3 * k},
                             {3 * k, -k - 2 * l},            {3 * l, 2 * k + l},
                             {6 * k + 3 * l, -3 * l},        {-3 * k + 3 * l, 3 * k + 3 * l},
                             {3 * k + 3 * l, k - l}};
  TorusModuleSum out;
  for (const auto& w : ws) out.add(w);
  out.trivial += 3;
  return out;
}

int dim_hom_torus(const TorusModuleSum& src, const TorusModuleSum& dst) {
  int d = src.trivial * dst.trivial;
  for (const auto& [w, m] : src.nontrivial) d += 2 * m * dst.multiplicity(w);
  return d;
}

int dim_W(const AloffWallach& aw, TorusOrbit orbit, int m, Part part) {
  TorusWeight pperp = orbit == TorusOrbit::z2_quotient ? TorusWeight{12, 0}
                                                       : isotropy_modules(aw).pperp;
  if (orbit == TorusOrbit::z2_quotient && !(aw.k == 1 && aw.l == 1))
    throw std::invalid_argument("the Z2 quotient only exists for (k,l) = (1,1)");
  TorusModuleSum src = torus_sym_power(pperp, m);
  TorusModuleSum dst = part == Part::h ? decompose_S2_p(aw) : torus_sym_power(pperp, 2);
  return dim_hom_torus(src, dst);
}

void Su2ModuleSum::add(Su2Entry e, int mult) {
  if (e.complex_type != (e.weight % 2 == 1))
    throw std::invalid_argument("real SU(2) irreps have even weight, complex ones odd weight");
  if (mult > 0) entries[e] += mult;
}

int Su2ModuleSum::real_dim() const {
  int d = 0;
  for (const auto& [e, m] : entries) d += m * (e.complex_type ? 2 * (e.weight + 1) : e.weight + 1);
  return d;
}

Su2ModuleSum su2_sym_power(int m) {
  Su2ModuleSum out;
  for (int p = 0; 2 * p <= m; ++p) out.add({2 * m - 4 * p, false});
  return out;
}

Su2ModuleSum su2_S2_p() {
  Su2ModuleSum s;
  s.add({2, false}, 3);
  s.add({1, true}, 1);
  s.add({0, false}, 2);
  return s;
}

Su2ModuleSum su2_S2_pperp() {
  Su2ModuleSum s;
  s.add({4, false});
  s.add({0, false});
  return s;
}

int dim_hom_su2(const Su2ModuleSum& src, const Su2ModuleSum& dst) {
  int d = 0;
  for (const auto& [e, m] : src.entries) {
    auto it = dst.entries.find(e);
    if (it == dst.entries.end()) continue;
    // End of a real irrep is R; of C^2 (weight 1) viewed as real it is H.
    d += m * it->second * (e.complex_type ? 4 : 1);
  }
  return d;
}

int dim_W_s5(int m, Part part) {
  return dim_hom_su2(su2_sym_power(m), part == Part::h ? su2_S2_p() : su2_S2_pperp());
}

// exp(2 pi x e7) lies in U(1)_{k,l} (times h^eps) iff some y solves
//   k y = (2l+k) x - eps/4,   l y = -(2k+l) x + eps/4   (mod 1).
static bool frac_is_integer(const Rational& q) { return q.is_integer(); }

Rational first_return_time(const AloffWallach& aw, bool quotient_by_h) {
  int k = aw.k, l = aw.l;
  // Bezout u k + v l = 1
  int u = 0, v = 0;
  {
    long r0 = k, r1 = l, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0) {
      long q = r0 / r1;
      long tmp = r0 - q * r1; r0 = r1; r1 = tmp;
      tmp = s0 - q * s1; s0 = s1; s1 = tmp;
      tmp = t0 - q * t1; t0 = t1; t1 = tmp;
    }
    if (r0 < 0) { s0 = -s0; t0 = -t0; }
    u = static_cast<int>(s0);
    v = static_cast<int>(t0);
  }
  const int max_den = 2 * 3 * aw.delta * (std::abs(k) + std::abs(l) + 1);
  Rational best(0);
  bool found = false;
  for (int q = 1; q <= max_den; ++q)
    for (int p = 1; p <= q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      Rational x(p, q);
      if (found && !(x < best)) continue;
      for (int eps = 0; eps <= (quotient_by_h ? 1 : 0); ++eps) {
        Rational A = Rational(2 * l + k) * x - Rational(eps, 4);
        Rational B = Rational(-(2 * k + l)) * x + Rational(eps, 4);
        Rational y = Rational(u) * A + Rational(v) * B;
        if (frac_is_integer(Rational(k) * y - A) && frac_is_integer(Rational(l) * y - B)) {
          best = x;
          found = true;
        }
      }
    }
  if (!found) throw std::runtime_error("no return time found within the search bound");
  return best * Rational(2);  // t = 2 pi x
}

}  // namespace cohom
