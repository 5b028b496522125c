#include <cmath>
#include <random>

#include "cohom/series_solver.hpp"
#include "doctest.h"
#include "util.hpp"

using namespace cohom;

namespace {
const SymmetryMap& find_map(const std::vector<SymmetryMap>& maps, const std::string& name) {
  for (const auto& m : maps)
    if (m.name == name) return m;
  throw std::runtime_error("no map " + name);
}

std::vector<double> random_state(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> u(0.5, 2.0);
  std::bernoulli_distribution sgn(0.5);
  std::vector<double> x(n);
  for (auto& v : x) v = sgn(rng) ? u(rng) : -u(rng);
  return x;
}

// all identities vanish through order n
bool solves(const SystemId& sys, const std::vector<TruncSeries>& s, int n, const Rational& lambda = 0) {
  for (const auto& id : polynomialize(sys, lambda))
    if (!evaluate_identity(id, s, n).is_zero()) return false;
  return true;
}
}  // namespace

TEST_CASE("system metadata") {
  auto s1 = SystemId::S1(AloffWallach::make(2, 1));
  CHECK(s1.names() == std::vector<std::string>{"a", "b", "c", "f"});
  CHECK(SystemId::S2().names() == std::vector<std::string>{"a1", "a2", "b", "c", "f"});
  CHECK(s1.label() == "S1(2,1)");
  CHECK(s1.einstein_version().kind == SystemKind::E1);
  CHECK(SystemId::E2().first_order().kind == SystemKind::S2);
  CHECK_THROWS(s1.index("a1"));
  CHECK(system_equations(s1).size() == 4);
  CHECK(system_equations(SystemId::E2()).size() == 6);
}

TEST_CASE("rhs_first_order examples") {
  auto d = rhs_first_order(SystemId::S1(AloffWallach::make(1, -1)), {1, 1, 1, 0});
  CHECK(d == std::vector<double>{1, 1, 1, 0});
  d = rhs_first_order(SystemId::S2(), {2, -2, 1, 1, 12});
  CHECK(d[4] == doctest::Approx(-48));
}

TEST_CASE("zero denominators name the function") {
  try {
    rhs_first_order(SystemId::S1(AloffWallach::make(2, 1)), {1, 0, 1, 1});
    FAIL("expected ZeroDenominator");
  } catch (const ZeroDenominator& e) {
    CHECK(e.function == "b");
  }
  CHECK_THROWS_AS(residual_einstein(SystemId::E2(), {1, 1, 1, 1, 0}, std::vector<double>(5, 1.0),
                                    std::vector<double>(5, 1.0), 0.0),
                  ZeroDenominator);
}

TEST_CASE("vector field matches the series derivative") {
  auto oc = orbit_case(CaseId::E, AloffWallach::make(2, 1));
  auto sol = solve_series(oc, {{"b0", Rational(1)}, {"q", Rational(1, 2)}}, 20);
  double t0 = 0.02;
  std::vector<double> x, dx;
  for (const auto& s : sol.functions) {
    x.push_back(series_eval_float(s, t0).value);
    dx.push_back(series_eval_float(series_derivative(s), t0).value);
  }
  auto rhs = rhs_first_order(oc.system, x);
  for (size_t i = 0; i < x.size(); ++i) CHECK(std::abs(rhs[i] - dx[i]) < 1e-8);
}

TEST_CASE("Einstein residual symmetries") {
  std::mt19937_64 rng(testutil::kSeed);
  for (auto sys : {SystemId::E1(AloffWallach::make(2, 1)), SystemId::E1(AloffWallach::make(1, -1)), SystemId::E2()}) {
    int n = sys.nfun();
    for (int trial = 0; trial < 50; ++trial) {
      auto x = random_state(rng, n), d1 = random_state(rng, n), d2 = random_state(rng, n);
      auto r = residual_einstein(sys, x, d1, d2, 0.7);
      std::vector<double> nd1(d1);
      for (auto& v : nd1) v = -v;
      REQUIRE(residual_einstein(sys, x, nd1, d2, 0.7) == r);
      for (int i = 0; i < n; ++i) {
        auto y = x, e1 = d1, e2 = d2;
        y[i] = -y[i];
        e1[i] = -e1[i];
        e2[i] = -e2[i];
        REQUIRE(residual_einstein(sys, y, e1, e2, 0.7) == r);
      }
    }
  }
  // a1 = a2, b = c: components pair up exactly
  auto r = residual_einstein(SystemId::E2(), {1.3, 1.3, 0.7, 0.7, 0.4}, {0.2, 0.2, -0.5, -0.5, 1.1},
                             {0.3, 0.3, 0.9, 0.9, -0.2}, 0.0);
  CHECK(r[0] == r[1]);
  CHECK(r[2] == r[3]);
}

// Exact cancellation is covered by the Case G series (a1 - a2 = 0 in Q);
// in floating point the two equations sum their terms in different orders.
TEST_CASE("a1 = a2 kills the S2 difference terms") {
  std::mt19937_64 rng(testutil::kSeed + 3);
  for (int i = 0; i < 20; ++i) {
    auto x = random_state(rng, 5);
    x[1] = x[0];
    auto d = rhs_first_order(SystemId::S2(), x);
    CHECK(d[0] == doctest::Approx(d[1]).epsilon(1e-14));
  }
}

TEST_CASE("dual-number second derivatives agree with finite differences") {
  std::mt19937_64 rng(testutil::kSeed + 4);
  for (auto sys : {SystemId::S1(AloffWallach::make(2, 1)), SystemId::S2()}) {
    for (int i = 0; i < 20; ++i) {
      auto x = random_state(rng, sys.nfun());
      auto a = second_derivative_chain(sys, x), b = second_derivative_fd(sys, x);
      for (size_t j = 0; j < a.size(); ++j) CHECK(a[j] == doctest::Approx(b[j]).epsilon(1e-5));
    }
  }
}

TEST_CASE("symmetry maps are involutions") {
  std::mt19937_64 rng(testutil::kSeed + 5);
  for (auto sys : {SystemId::S1(AloffWallach::make(2, 1)), SystemId::S1(AloffWallach::make(1, -1)), SystemId::S2()}) {
    for (const auto& m : symmetry_maps(sys)) {
      auto x = random_state(rng, sys.nfun());
      auto twice = apply_to_values(m, apply_to_values(m, x));
      CHECK(twice == x);
      auto id = compose(identity_map(sys), m);
      CHECK(apply_to_values(id, x) == apply_to_values(m, x));
    }
  }
}

TEST_CASE("Case H series is fixed by neg_b_f") {
  auto sol = solve_series(orbit_case(CaseId::H), {{"a0", 1}, {"q", Rational(2, 3)}}, 12);
  CHECK(apply_to_series(find_map(symmetry_maps(sol.system), "neg_b_f"), sol.functions) == sol.functions);
}

TEST_CASE("symmetry maps preserve the vector field") {
  std::mt19937_64 rng(testutil::kSeed + 6);
  for (auto sys : {SystemId::S1(AloffWallach::make(2, 1)), SystemId::S1(AloffWallach::make(1, -1)), SystemId::S2()}) {
    for (const auto& m : symmetry_maps(sys)) {
      auto x = random_state(rng, sys.nfun());
      auto lhs = apply_to_derivative(m, rhs_first_order(sys, x));
      auto rhs = rhs_first_order(sys, apply_to_values(m, x));
      for (size_t i = 0; i < x.size(); ++i) CHECK(lhs[i] == doctest::Approx(rhs[i]).epsilon(1e-12));
    }
  }
}

TEST_CASE("series transported by symmetries") {
  SUBCASE("identity map") {
    auto sol = solve_series(orbit_case(CaseId::C), {{"a0", 2}, {"b0", 1}, {"c0", 1}}, 8);
    CHECK(apply_to_series(identity_map(sol.system), sol.functions) == sol.functions);
  }
  SUBCASE("t-reversal on an odd function") {
    SymmetryMap m{"odd", {0}, {-1}, -1};
    auto out = apply_to_series(m, {testutil::S({"0", "1", "0", "-1"})});
    CHECK(out[0] == testutil::S({"0", "1", "0", "-1"}));
  }
  SUBCASE("swap b,c fixes Case F") {
    auto sol = solve_series(orbit_case(CaseId::F), {{"b0", 1}, {"q1", Rational(1, 3)}, {"q2", Rational(1, 3)}}, 10);
    CHECK(apply_to_series(find_map(symmetry_maps(sol.system), "swap_bc"), sol.functions) == sol.functions);
  }
  SUBCASE("Case C is fixed by the a1/a2 swap map") {
    auto sol = solve_series(orbit_case(CaseId::C), {{"a0", 2}, {"b0", 1}, {"c0", 1}}, 12);
    CHECK(apply_to_series(find_map(symmetry_maps(sol.system), "swap_neg_a"), sol.functions) == sol.functions);
  }
  SUBCASE("S^5 mirror maps Case D to a solution of the same problem") {
    auto sol = solve_series(orbit_case(CaseId::D), {{"b0", 1}, {"f0", 1}}, 12);
    auto img = apply_to_series(find_map(symmetry_maps(sol.system), "s5_mirror"), sol.functions);
    CHECK(solves(sol.system, img, 11));
    for (size_t i = 0; i < img.size(); ++i) CHECK(img[i][0] == sol.functions[i][0]);
  }
}

TEST_CASE("polynomial identities") {
  CHECK(polynomialize(SystemId::S1(AloffWallach::make(2, 1))).size() == 4);
  CHECK(polynomialize(SystemId::S2()).size() == 5);
  CHECK(polynomialize(SystemId::E1(AloffWallach::make(2, 1))).size() == 5);
  CHECK(polynomialize(SystemId::E2()).size() == 6);

  auto sys = SystemId::S1(AloffWallach::make(1, -1));
  auto d = solve_series(orbit_case(CaseId::D), {{"b0", 1}, {"f0", 1}}, 7);
  CHECK(solves(sys, d.functions, 6));
  // constants a = b = c = 1, f = 0 are not a solution
  std::vector<TruncSeries> cst{testutil::S({"1", "0"}), testutil::S({"1", "0"}), testutil::S({"1", "0"}),
                               testutil::S({"0", "0"})};
  CHECK_FALSE(evaluate_identity(polynomialize(sys)[0], cst, 0).is_zero());
}

TEST_CASE("E2 on the Case F series") {
  auto sol = solve_series(orbit_case(CaseId::F), {{"b0", 1}, {"q1", 0}, {"q2", 0}}, 5);
  CHECK(solves(SystemId::E2(), sol.functions, 3));
}

TEST_CASE("case catalog") {
  auto c = orbit_case(CaseId::C);
  CHECK(c.name == "C_N11Z2_flag");
  CHECK(c.system.kind == SystemKind::S2);
  CHECK(c.normalization.at("f") == Rational(12));
  CHECK(c.parity.at("f") == Parity::odd);
  auto d = orbit_case(CaseId::D);
  CHECK(d.system.aw == AloffWallach::make(1, -1));
  CHECK(d.normalization.at("a") == Rational(2));
  CHECK(d.vanishing == std::vector<std::string>{"a"});
  auto e = orbit_case(CaseId::E, AloffWallach::make(2, 1));
  CHECK(e.normalization.at("f") == Rational(14, 3));
  for (auto [k, l] : std::vector<std::pair<int, int>>{{1, -1}, {1, 1}, {1, -2}, {2, -1}})
    CHECK_THROWS_AS(orbit_case(CaseId::E, AloffWallach::make(k, l)), std::invalid_argument);
  CHECK_THROWS_AS(orbit_case(CaseId::A, AloffWallach::make(1, 1)), std::invalid_argument);
  CHECK(orbit_case(CaseId::F).normalization.at("f") == Rational(3));
  CHECK(orbit_case(CaseId::G).normalization.at("f") == Rational(6));
  CHECK(orbit_case(CaseId::H).normalization.at("f") == Rational(6));
  CHECK_THROWS_AS(case_from_letter("Z"), std::invalid_argument);
}
