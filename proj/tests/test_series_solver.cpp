#include <random>

#include "cohom/series_solver.hpp"
#include "doctest.h"
#include "util.hpp"

using namespace cohom;
using testutil::head;
using testutil::Q;

namespace {
std::vector<SlotId> slots(std::initializer_list<std::pair<const char*, int>> xs) {
  std::vector<SlotId> v;
  for (auto [l, o] : xs) v.push_back({l, o});
  return v;
}

SolverError::Kind solver_error_kind(auto&& f) {
  try {
    f();
  } catch (const SolverError& e) {
    return e.kind;
  }
  FAIL("no SolverError");
  return SolverError::Kind::constraint;
}
}  // namespace

TEST_CASE("golden coefficients") {
  SUBCASE("C at (2,1,1)") {
    auto s = solve_series(orbit_case(CaseId::C), {{"a0", 2}, {"b0", 1}, {"c0", 1}});
    CHECK(head(s.fn("a1"), 2) == Q({"2", "-1", "11/4"}));
    CHECK(head(s.fn("a2"), 2) == Q({"-2", "-1", "-11/4"}));
    CHECK(head(s.fn("b"), 2) == Q({"1", "0", "1/2"}));
    CHECK(head(s.fn("c"), 2) == Q({"1", "0", "1/2"}));
    CHECK(head(s.fn("f"), 2) == Q({"0", "12", "0"}));
  }
  SUBCASE("D at b0 = f0 = 1") {
    auto s = solve_series(orbit_case(CaseId::D), {{"b0", 1}, {"f0", 1}}, 4);
    CHECK(head(s.fn("a"), 3) == Q({"0", "2", "0", "-35/27"}));
    CHECK(head(s.fn("b"), 3) == Q({"1", "-1/6", "67/72", "337/6480"}));
    CHECK(head(s.fn("c"), 3) == Q({"1", "1/6", "67/72", "-337/6480"}));
    CHECK(head(s.fn("f"), 3) == Q({"1", "0", "1/6", "0"}));
  }
  SUBCASE("E at (1,0), b0 = 1, q = 0") {
    auto s = solve_series(orbit_case(CaseId::E, AloffWallach::make(1, 0)), {{"b0", 1}, {"q", 0}}, 4);
    CHECK(head(s.fn("a"), 4) == Q({"0", "1", "0", "-1/2", "0"}));
    CHECK(head(s.fn("b"), 4) == Q({"1", "0", "2/3", "0", "-13/36"}));
    CHECK(head(s.fn("c"), 3) == Q({"1", "0", "5/6", "0"}));
    CHECK(head(s.fn("f"), 4) == Q({"0", "2", "0", "0", "0"}));
  }
  SUBCASE("F at b0 = 1, q1 = q2 = 0") {
    auto s = solve_series(orbit_case(CaseId::F), {{"b0", 1}, {"q1", 0}, {"q2", 0}}, 5);
    for (const char* a : {"a1", "a2"}) CHECK(head(s.fn(a), 5) == Q({"0", "1", "0", "0", "0", "0"}));
    for (const char* b : {"b", "c"}) CHECK(head(s.fn(b), 5) == Q({"1", "0", "3/4", "0", "-39/96", "0"}));
    CHECK(head(s.fn("f"), 5) == Q({"0", "3", "0", "-3", "0", "9/2"}));
  }
  SUBCASE("G at a0 = 1, q = 0") {
    auto s = solve_series(orbit_case(CaseId::G), {{"a0", 1}, {"q", 0}}, 5);
    for (const char* a : {"a1", "a2"}) CHECK(head(s.fn(a), 5) == Q({"1", "0", "1", "0", "-7/8", "0"}));
    CHECK(head(s.fn("b"), 5) == Q({"0", "1", "0", "0", "0", "-3/40"}));
    CHECK(head(s.fn("c"), 5) == Q({"1", "0", "1/2", "0", "-1/4", "0"}));
    CHECK(head(s.fn("f"), 5) == Q({"0", "-6", "0", "6", "0", "-123/10"}));
  }
  SUBCASE("H at a0 = 1, q = 0") {
    auto s = solve_series(orbit_case(CaseId::H), {{"a0", 1}, {"q", 0}}, 5);
    CHECK(head(s.fn("a1"), 5) == Q({"1", "0", "1", "0", "-23/24", "0"}));
    CHECK(head(s.fn("a2"), 5) == Q({"-1", "0", "-2", "0", "7/24", "0"}));
    CHECK(head(s.fn("b"), 5) == Q({"0", "1", "0", "-1/6", "0", "-5/48"}));
    CHECK(head(s.fn("c"), 5) == Q({"1", "0", "0", "0", "1/8", "0"}));
    CHECK(head(s.fn("f"), 5) == Q({"0", "6", "0", "-4", "0", "35/4"}));
  }
}

TEST_CASE("re-substitution and order bookkeeping") {
  for (char c : std::string("CDEFGH")) {
    auto oc = orbit_case(case_from_letter(std::string(1, c)));
    Params p;
    for (const auto& n : oc.params) p[n] = Rational(c == 'C' && n == "a0" ? 2 : 1);
    for (const auto& s : oc.free_slots) p[s.param] = Rational(1, 3);
    auto sol = solve_series(oc, p, 14);
    CAPTURE(c);
    CHECK(sol.order == 14);
    for (const auto& f : sol.functions) CHECK(f.order() == 14);
    CHECK_FALSE(verify_substitution(sol).has_value());
    CHECK(sol.diagnostics.size() > 0);
  }
}

TEST_CASE("solver errors") {
  auto D = orbit_case(CaseId::D);
  CHECK(solver_error_kind([&] { solve_series(orbit_case(CaseId::E), {{"b0", 1}}, 8); }) ==
        SolverError::Kind::missing_slot);
  try {
    solve_series(orbit_case(CaseId::E), {{"b0", 1}}, 8);
  } catch (const SolverError& e) {
    CHECK(std::string(e.what()).find("(f,3)") != std::string::npos);
  }
  CHECK(solver_error_kind([&] { solve_series(D, {{"b0", 1}, {"f0", 1}, {"c0", 2}}, 8); }) ==
        SolverError::Kind::constraint);
  CHECK(solver_error_kind([&] { solve_series(orbit_case(CaseId::C), {{"a0", 0}, {"b0", 1}, {"c0", 1}}, 8); }) ==
        SolverError::Kind::constraint);
  CHECK(solver_error_kind([&] { solve_series(orbit_case(CaseId::C), {{"a0", 2}, {"b0", 1}, {"c0", 1}, {"x", 1}}); }) ==
        SolverError::Kind::constraint);
  CHECK(solver_error_kind([&] { solve_series(D, {{"f0", 1}}, 8); }) == SolverError::Kind::constraint);
  CHECK(solver_error_kind([&] { einstein_series(orbit_case(CaseId::E), {{"b0", 1}, {"q", 0}}, 0, 8); }) ==
        SolverError::Kind::constraint);
}

TEST_CASE("uniqueness for C and D") {
  auto c1 = solve_series(orbit_case(CaseId::C), {{"a0", 5}, {"b0", 3}, {"c0", 4}}, 20);
  auto c2 = solve_series(orbit_case(CaseId::C), {{"a0", 5}, {"b0", 3}, {"c0", 4}}, 20);
  CHECK(c1.functions == c2.functions);
  auto d1 = solve_series(orbit_case(CaseId::D), {{"b0", Rational(2, 3)}, {"f0", 1}}, 20);
  auto d2 = solve_series(orbit_case(CaseId::D), {{"b0", Rational(2, 3)}, {"f0", 1}}, 20);
  CHECK(d1.functions == d2.functions);
}

TEST_CASE("homothety covariance of Case D") {
  Rational sigma(2);
  auto s1 = solve_series(orbit_case(CaseId::D), {{"b0", 1}, {"f0", Rational(3, 2)}}, 12);
  auto s2 = solve_series(orbit_case(CaseId::D), {{"b0", sigma}, {"f0", sigma * Rational(3, 2)}}, 12);
  for (size_t f = 0; f < s1.functions.size(); ++f)
    for (int i = 0; i <= 12; ++i) CHECK(s2.functions[f][i] == s1.functions[f][i] * sigma.pow(1 - i));
}

TEST_CASE("free-slot census") {
  using V = std::vector<SlotId>;
  CHECK(free_slots(orbit_case(CaseId::C)) == V{});
  CHECK(free_slots(orbit_case(CaseId::D)) == V{});
  CHECK(free_slots(orbit_case(CaseId::E)) == slots({{"f", 3}}));
  CHECK(free_slots(orbit_case(CaseId::E, AloffWallach::make(3, 2))) == slots({{"f", 3}}));
  CHECK(free_slots(orbit_case(CaseId::F)) == slots({{"a1", 3}, {"a2", 3}}));
  CHECK(free_slots(orbit_case(CaseId::G)) == slots({{"b", 3}}));
  CHECK(free_slots(orbit_case(CaseId::H)) == slots({{"c", 2}}));
}

TEST_CASE("free slots do not depend on parameter values") {
  std::mt19937_64 rng(testutil::kSeed);
  std::uniform_int_distribution<int> n(1, 9), d(1, 4);
  for (char c : std::string("CDEFGH")) {
    auto oc = orbit_case(case_from_letter(std::string(1, c)));
    auto base = free_slots(oc);
    for (int k = 0; k < 2; ++k) {
      Params p;
      for (const auto& name : oc.params) p[name] = Rational(n(rng), d(rng));
      if (c == 'C') p["a0"] = p["a0"] + 10;
      CHECK(free_slots(oc, 8, p) == base);
    }
  }
}

TEST_CASE("every Spin(7) series solves the Einstein system with lambda = 0") {
  for (char c : std::string("CDEFGH")) {
    auto oc = orbit_case(case_from_letter(std::string(1, c)));
    Params p;
    for (const auto& n : oc.params) p[n] = Rational(c == 'C' && n == "a0" ? 5 : 2);
    if (c == 'C') p["c0"] = 3;
    for (const auto& s : oc.free_slots) p[s.param] = Rational(-1, 2);
    auto sol = solve_series(oc, p, 16);
    for (const auto& id : polynomialize(oc.system.einstein_version(), 0))
      CHECK(evaluate_identity(id, sol.functions, 14).is_zero());
  }
}

TEST_CASE("smoothness") {
  SUBCASE("Case C passes, mirror fault found once") {
    auto sol = solve_series(orbit_case(CaseId::C), {{"a0", 2}, {"b0", 1}, {"c0", 1}}, 8);
    auto r = check_smoothness(sol);
    CHECK(r.ok());
    CHECK(r.normalization_ok.at("f"));
    sol.functions[0][2] = -sol.functions[0][2];
    r = check_smoothness(sol);
    REQUIRE(r.violations.size() == 1);
    CHECK(r.violations[0].order == 2);
    CHECK_FALSE(r.mirror_ok);
  }
  SUBCASE("Case D mirror and |a'(0)| = 2") {
    auto sol = solve_series(orbit_case(CaseId::D), {{"b0", 1}, {"f0", 1}}, 8);
    auto r = check_smoothness(sol);
    CHECK(r.ok());
    CHECK(r.mirror_ok);
    CHECK(r.normalization_ok.at("a"));
    sol.functions[1][2] = -sol.functions[1][2];
    r = check_smoothness(sol);
    REQUIRE(r.violations.size() == 1);
    CHECK(r.violations[0].function == "b");
    CHECK(r.violations[0].order == 2);
  }
  SUBCASE("parity and normalization faults") {
    auto sol = solve_series(orbit_case(CaseId::E), {{"b0", 1}, {"q", 0}}, 8);
    CHECK(check_smoothness(sol).ok());
    auto bad = sol;
    bad.functions[1][3] = Rational(7);
    auto r = check_smoothness(bad);
    REQUIRE(r.violations.size() == 1);
    CHECK(r.violations[0].order == 3);
    CHECK_FALSE(r.parity_ok.at("b"));
    bad = sol;
    bad.functions[3][1] = Rational(3);
    r = check_smoothness(bad);
    REQUIRE(r.violations.size() == 1);
    CHECK_FALSE(r.normalization_ok.at("f"));
  }
}

TEST_CASE("Case A Spin(7) branch is degenerate") {
  auto sol = solve_series(orbit_case(CaseId::A, AloffWallach::make(2, 1)), {{"a0", 1}, {"b0", 2}, {"c0", 3}}, 12);
  CHECK(sol.fn("f").is_zero());
  REQUIRE_FALSE(sol.flags.empty());
  CHECK(sol.flags[0].rfind("degenerate: f", 0) == 0);
}

TEST_CASE("Einstein series") {
  auto A = orbit_case(CaseId::A, AloffWallach::make(2, 1));
  Params p{{"a0", 1}, {"b0", 1}, {"c0", 1}};
  SUBCASE("Case A: the diagonal recursion fixes f'''(0)") {
    auto s0 = einstein_series(A, p, 0, 8);
    CHECK(s0.fn("f")[1] == Rational(14));
    CHECK(s0.fn("f")[3] == Rational(-35));
    CHECK(s0.slots.empty());
    CHECK_FALSE(verify_substitution(s0).has_value());
    CHECK(einstein_series(A, p, 1, 8).fn("f")[3] == Rational(-91, 3));
    auto q = p;
    q["f3"] = 0;
    CHECK(solver_error_kind([&] { einstein_series(A, q, 0, 8); }) == SolverError::Kind::inconsistent);
  }
  SUBCASE("Case D: (b-c,1) is free") {
    auto D = orbit_case(CaseId::D);
    auto s = einstein_series(D, {{"b0", 1}, {"f0", 1}, {"b1", Rational(1, 2)}}, 0, 10);
    CHECK_FALSE(verify_substitution(s).has_value());
    REQUIRE(s.slots.size() == 1);
    CHECK(s.slots[0].label == "b-c");
    CHECK(einstein_free_slots(D, 0) == slots({{"b-c", 1}}));
    CHECK(solver_error_kind([&] { einstein_series(D, {{"b0", 1}, {"f0", 1}}, 0, 8); }) ==
          SolverError::Kind::missing_slot);
  }
  SUBCASE("Case C: (a1+a2,1) is free and the Spin(7) series is the asum1 = 0 member") {
    auto C = orbit_case(CaseId::C);
    CHECK(einstein_free_slots(C, 0) == slots({{"a1+a2", 1}}));
    Params pc{{"a0", 2}, {"b0", 1}, {"c0", 1}};
    auto spin7 = solve_series(C, pc, 10);
    pc["asum1"] = spin7.fn("a1")[1] + spin7.fn("a2")[1];
    auto ein = einstein_series(C, pc, 0, 10);
    CHECK(ein.functions == spin7.functions);
  }
}
