#pragma once
// Multivariate Laurent polynomials with rational coefficients. Used to write
// each ODE once; the same object is evaluated in double (residuals) and, after
// clearing denominators, expanded over truncated series (exact solver).

#include <map>
#include <vector>

#include "cohom/rational.hpp"

namespace cohom {

class LaurentPoly {
 public:
  using Exps = std::vector<int>;

  explicit LaurentPoly(int nvars = 0) : nvars_(nvars) {}
  static LaurentPoly constant(int nvars, const Rational& c);
  static LaurentPoly var(int nvars, int v, int power = 1);

  int nvars() const { return nvars_; }
  const std::map<Exps, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rational& s);
  friend LaurentPoly operator*(const Rational& s, LaurentPoly a) { return std::move(a) * s; }
  LaurentPoly operator-() const { return *this * Rational(-1); }

  // Only defined for single-term polynomials; throws otherwise.
  LaurentPoly inverse() const;
  friend LaurentPoly operator/(const LaurentPoly& a, const LaurentPoly& b) { return a * b.inverse(); }

  // Multiplies by the smallest monomial that removes every negative exponent,
  // then scales by a positive rational so the coefficients are coprime integers.
  LaurentPoly cleared() const;

  double eval(const std::vector<double>& x) const;

 private:
  void add_term(const Exps& e, const Rational& c);
  int nvars_;
  std::map<Exps, Rational> terms_;
};

}  // namespace cohom
