#pragma once
#include <string>
#include <vector>

#include "cohom/rational.hpp"
#include "cohom/series.hpp"

namespace testutil {

inline std::vector<cohom::Rational> Q(std::initializer_list<const char*> xs) {
  std::vector<cohom::Rational> v;
  for (const char* s : xs) v.push_back(cohom::Rational::parse(s));
  return v;
}

inline cohom::TruncSeries S(std::initializer_list<const char*> xs) { return cohom::TruncSeries(Q(xs)); }

inline std::vector<cohom::Rational> head(const cohom::TruncSeries& s, int n) {
  return {s.coeffs().begin(), s.coeffs().begin() + n + 1};
}

constexpr unsigned kSeed = 20240607;

}  // namespace testutil
