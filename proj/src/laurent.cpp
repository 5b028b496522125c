#include "cohom/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cohom {

LaurentPoly LaurentPoly::constant(int nvars, const Rational& c) {
  LaurentPoly p(nvars);
  p.add_term(Exps(static_cast<size_t>(nvars), 0), c);
  return p;
}

LaurentPoly LaurentPoly::var(int nvars, int v, int power) {
  LaurentPoly p(nvars);
  Exps e(static_cast<size_t>(nvars), 0);
  e[static_cast<size_t>(v)] = power;
  p.add_term(e, Rational(1));
  return p;
}

void LaurentPoly::add_term(const Exps& e, const Rational& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r(std::max(a.nvars_, b.nvars_));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      LaurentPoly::Exps e(ea);
      for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

LaurentPoly operator*(LaurentPoly a, const Rational& s) {
  if (s.is_zero()) return LaurentPoly(a.nvars_);
  for (auto& [e, c] : a.terms_) c *= s;
  return a;
}

LaurentPoly LaurentPoly::inverse() const {
  if (terms_.size() != 1) throw std::invalid_argument("only monomials can be inverted");
  const auto& [e, c] = *terms_.begin();
  Exps ne(e);
  for (auto& x : ne) x = -x;
  LaurentPoly r(nvars_);
  r.add_term(ne, Rational(1) / c);
  return r;
}

LaurentPoly LaurentPoly::cleared() const {
  Exps shift(static_cast<size_t>(nvars_), 0);
  for (const auto& [e, c] : terms_)
    for (size_t i = 0; i < e.size(); ++i) shift[i] = std::min(shift[i], e[i]);
  mpz_class den = 1;
  for (const auto& [e, c] : terms_) {
    mpz_class d = c.raw().get_den();
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
  }
  mpz_class g = 0;
  for (const auto& [e, c] : terms_) {
    mpz_class n = abs(c.raw().get_num()) * (den / c.raw().get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  LaurentPoly r(nvars_);
  if (terms_.empty()) return r;
  Rational scale(mpq_class(den, g));
  for (const auto& [e, c] : terms_) {
    Exps ne(e);
    for (size_t i = 0; i < ne.size(); ++i) ne[i] -= shift[i];
    r.add_term(ne, c * scale);
  }
  return r;
}

double LaurentPoly::eval(const std::vector<double>& x) const {
  double s = 0.0;
  for (const auto& [e, c] : terms_) {
    double t = c.to_double();
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      double xi = x[i];
      int p = e[i];
      if (p > 0)
        for (int k = 0; k < p; ++k) t *= xi;
      else
        for (int k = 0; k < -p; ++k) t /= xi;
    }
    s += t;
  }
  return s;
}

}  // namespace cohom
