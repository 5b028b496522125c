#pragma once
// Truncated power series with exact coefficients. The order is explicit
// state: trailing zeros are kept and nothing ever extends precision.

#include <vector>

#include "cohom/rational.hpp"

namespace cohom {

class TruncSeries {
 public:
  explicit TruncSeries(int order = 0) : c_(static_cast<size_t>(order) + 1) {}
  explicit TruncSeries(std::vector<Rational> coeffs);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& operator[](int i) const { return c_[static_cast<size_t>(i)]; }
  Rational& operator[](int i) { return c_[static_cast<size_t>(i)]; }
  const std::vector<Rational>& coeffs() const { return c_; }

  TruncSeries truncated(int order) const;
  bool is_zero() const;

  friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

 private:
  std::vector<Rational> c_;
};

TruncSeries series_add(const TruncSeries& a, const TruncSeries& b);
TruncSeries series_sub(const TruncSeries& a, const TruncSeries& b);
TruncSeries series_scale(const TruncSeries& a, const Rational& s);
TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b);
// throws std::domain_error on order-0 input
TruncSeries series_derivative(const TruncSeries& a);

struct FloatEval {
  double value;
  double last_term;  // max |c_i t^i| over the last two retained terms
};
FloatEval series_eval_float(const TruncSeries& a, double t);

// Low-level helpers on raw coefficient vectors (used by the solver hot loop).
// Cauchy product of x and y, keeping indices 0..n.
void cauchy_into(std::vector<Rational>& out, const std::vector<Rational>& x,
                 const std::vector<Rational>& y, int n);

}  // namespace cohom
