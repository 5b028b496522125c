#include "cohom/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cohom {

TruncSeries::TruncSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) c_.emplace_back(0);
}

TruncSeries TruncSeries::truncated(int order) const {
  TruncSeries r(order);
  for (int i = 0; i <= std::min(order, this->order()); ++i) r[i] = c_[i];
  return r;
}

bool TruncSeries::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x.is_zero(); });
}

TruncSeries series_add(const TruncSeries& a, const TruncSeries& b) {
  int n = std::min(a.order(), b.order());
  TruncSeries r(n);
  for (int i = 0; i <= n; ++i) r[i] = a[i] + b[i];
  return r;
}

TruncSeries series_sub(const TruncSeries& a, const TruncSeries& b) {
  int n = std::min(a.order(), b.order());
  TruncSeries r(n);
  for (int i = 0; i <= n; ++i) r[i] = a[i] - b[i];
  return r;
}

TruncSeries series_scale(const TruncSeries& a, const Rational& s) {
  TruncSeries r(a.order());
  for (int i = 0; i <= a.order(); ++i) r[i] = a[i] * s;
  return r;
}

void cauchy_into(std::vector<Rational>& out, const std::vector<Rational>& x,
                 const std::vector<Rational>& y, int n) {
  out.assign(static_cast<size_t>(n) + 1, Rational(0));
  int nx = std::min<int>(n, static_cast<int>(x.size()) - 1);
  int ny = static_cast<int>(y.size()) - 1;
  for (int i = 0; i <= nx; ++i) {
    if (x[i].is_zero()) continue;
    int jm = std::min(n - i, ny);
    for (int j = 0; j <= jm; ++j) {
      if (y[j].is_zero()) continue;
      out[i + j] += x[i] * y[j];
    }
  }
}

TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b) {
  int n = std::min(a.order(), b.order());
  std::vector<Rational> out;
  cauchy_into(out, a.coeffs(), b.coeffs(), n);
  return TruncSeries(std::move(out));
}

TruncSeries series_derivative(const TruncSeries& a) {
  if (a.order() < 1) throw std::domain_error("cannot differentiate constant-only series");
  TruncSeries r(a.order() - 1);
  for (int i = 0; i < a.order(); ++i) r[i] = a[i + 1] * Rational(i + 1);
  return r;
}

FloatEval series_eval_float(const TruncSeries& a, double t) {
  double v = 0.0;
  for (int i = a.order(); i >= 0; --i) v = v * t + a[i].to_double();
  // parity often zeroes the very last coefficient, so look at the last two
  double last = 0.0;
  for (int i = std::max(0, a.order() - 1); i <= a.order(); ++i)
    last = std::max(last, std::fabs(a[i].to_double() * std::pow(t, i)));
  return {v, last};
}

}  // namespace cohom
