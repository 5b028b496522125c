#pragma once
// Exact rationals over arbitrary-precision integers (GMP underneath).

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>

namespace cohom {

class Rational {
 public:
  Rational() = default;
  Rational(long n) : v_(n) {}  // NOLINT: implicit on purpose
  Rational(int n) : v_(static_cast<long>(n)) {}  // NOLINT
  Rational(long n, long d);
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  // Accepts "p/q", "p" or "-p/q". Anything else throws std::invalid_argument.
  static Rational parse(const std::string& s);

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { Rational r; r.v_ = -v_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  Rational abs() const { Rational r; r.v_ = ::abs(v_); return r; }
  Rational pow(int e) const;

  std::string num_str() const { return v_.get_num().get_str(); }
  std::string den_str() const { return v_.get_den().get_str(); }
  // canonical "num/den"; zero is "0/1"
  std::string str() const { return num_str() + "/" + den_str(); }
  double to_double() const { return v_.get_d(); }
  bool is_integer() const { return v_.get_den() == 1; }

  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace cohom
