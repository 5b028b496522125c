#pragma once
// Weight bookkeeping for the isotropy representations of the singular orbits:
// torus modules V_{r,s} (SU(3)/U(1)^2) and SU(2) modules (S^5).

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cohom/rational.hpp"

namespace cohom {

struct AloffWallach {
  int k = 1;
  int l = 1;
  int delta = 3;

  // throws std::invalid_argument unless gcd(k,l)=1 and (k,l) != (0,0)
  static AloffWallach make(int k, int l);
  bool is_exceptional_11() const;  // Weyl-equivalent to (1,1)
  bool is_10_type() const;         // Weyl-equivalent to (1,0)
  friend bool operator==(const AloffWallach&, const AloffWallach&) = default;
};

struct TorusWeight {
  int r = 0;
  int s = 0;
  TorusWeight canonical() const;  // picks (r,s) or (-r,-s), lexicographically larger
  bool trivial() const { return r == 0 && s == 0; }
  friend auto operator<=>(const TorusWeight&, const TorusWeight&) = default;
};

struct TorusModuleSum {
  std::map<TorusWeight, int> nontrivial;  // keys canonical
  int trivial = 0;

  void add(TorusWeight w, int mult = 1);  // (0,0) goes to trivial
  int multiplicity(TorusWeight w) const;
  int real_dim() const;
};

struct IsotropyModules {
  TorusWeight V1, V2, V3, pperp;
};

IsotropyModules isotropy_modules(const AloffWallach& aw);
TorusModuleSum torus_sym_power(TorusWeight w, int m);
TorusModuleSum decompose_S2_p(const AloffWallach& aw);
int dim_hom_torus(const TorusModuleSum& src, const TorusModuleSum& dst);

enum class Part { h, v };
enum class TorusOrbit { plain, z2_quotient };

int dim_W(const AloffWallach& aw, TorusOrbit orbit, int m, Part part);

struct Su2Entry {
  int weight = 0;
  bool complex_type = false;  // complex irrep viewed as real (odd weight)
  friend auto operator<=>(const Su2Entry&, const Su2Entry&) = default;
};

struct Su2ModuleSum {
  std::map<Su2Entry, int> entries;
  void add(Su2Entry e, int mult = 1);
  int real_dim() const;
};

Su2ModuleSum su2_sym_power(int m);
Su2ModuleSum su2_S2_p();      // 3 V_2 + V_1^C + 2 V_0
Su2ModuleSum su2_S2_pperp();  // V_4 + V_0
int dim_hom_su2(const Su2ModuleSum& src, const Su2ModuleSum& dst);
int dim_W_s5(int m, Part part);

// Smallest t>0 with exp(t e7) in the isotropy group, as a multiple of pi.
Rational first_return_time(const AloffWallach& aw, bool quotient_by_h);

}  // namespace cohom
