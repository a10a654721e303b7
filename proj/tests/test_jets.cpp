#include "hitchin/jets.hpp"

#include <doctest.h>

#include <random>

using namespace hitchin;

TEST_CASE("parser basics") {
  AffineVariety v = parse_system("vars x,y; x^2 - y^3");
  CHECK(v.vars == std::vector<std::string>{"x", "y"});
  REQUIRE(v.generators.size() == 1);
  CHECK(v.zeroGenerators.empty());
  CHECK(v.generators[0].total_degree() == 3);

  AffineVariety plain = parse_system("vars x,y;");
  CHECK(plain.generators.empty());
}

TEST_CASE("parser errors carry positions") {
  try {
    parse_system("vars x; x^2 +");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 1);
    CHECK(e.col == 14);
  }
  CHECK_THROWS_WITH_AS(parse_system("vars x; x + w"), doctest::Contains("undeclared identifier"),
                       ParseError);
  CHECK_THROWS_AS(parse_system("vars x, x; x"), ParseError);
  CHECK_THROWS_AS(parse_system("x^2"), ParseError);
  try {
    parse_system("vars x;\n x^2 - )");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
}

TEST_CASE("expansion normalises to zero") {
  AffineVariety v = parse_system("vars x,y; (x+y)^2 - x^2 - 2*x*y - y^2");
  REQUIRE(v.generators.size() == 1);
  CHECK(v.generators[0].is_zero());
  CHECK(v.zeroGenerators == std::vector<int>{0});
}

TEST_CASE("rational literals") {
  AffineVariety v = parse_system("vars x; 1/2*x - 3/6*x");
  CHECK(v.generators[0].is_zero());
}

TEST_CASE("affine space jets") {
  AffineVariety plane = parse_system("vars x,y;");
  JetScheme j = jet_equations(plane, 3);
  CHECK(j.vars.size() == 8);
  CHECK(j.equations.empty());
  CHECK(j.vars[0] == "x_0");
  CHECK(j.vars[4] == "y_0");
}

TEST_CASE("cusp jets at order one") {
  AffineVariety cusp = parse_system("vars x,y; x^2 - y^3");
  JetScheme j = jet_equations(cusp, 1);
  REQUIRE(j.equations.size() == 2);
  // Variables: x_0, x_1, y_0, y_1.
  MultiPoly g0(4), g1(4);
  g0.add_term({2, 0, 0, 0}, 1);
  g0.add_term({0, 0, 3, 0}, -1);
  g1.add_term({1, 1, 0, 0}, 2);
  g1.add_term({0, 0, 2, 1}, -3);
  CHECK(j.equations[0] == g0);
  CHECK(j.equations[1] == g1);
  CHECK(j.equations[0].to_string(j.vars) == "x_0^2 - y_0^3");
}

TEST_CASE("order zero renames the originals") {
  AffineVariety cusp = parse_system("vars x,y; x^2 - y^3");
  JetScheme j0 = jet_equations(cusp, 0);
  REQUIRE(j0.equations.size() == 1);
  MultiPoly expected(2);
  expected.add_term({2, 0}, 1);
  expected.add_term({0, 3}, -1);
  CHECK(j0.equations[0] == expected);
}

TEST_CASE("truncation compatibility") {
  AffineVariety cusp = parse_system("vars x,y; x^2 - y^3");
  JetScheme j1 = jet_equations(cusp, 1);
  JetScheme j2 = jet_equations(cusp, 2);
  CHECK(truncation_check(j2, j1));

  JetScheme corrupted = j2;
  corrupted.equations[0].add_term({1, 0, 0, 0, 0, 0}, Rational(1));
  CHECK(!truncation_check(corrupted, j1));

  AffineVariety other = parse_system("vars u,v; u^2 - v^3");
  JetScheme o1 = jet_equations(other, 1);
  CHECK_THROWS_AS(truncation_check(j2, o1), std::invalid_argument);
  CHECK_THROWS_AS(truncation_check(j2, j2), std::invalid_argument);
}

TEST_CASE("functoriality under adding a generator") {
  AffineVariety w = parse_system("vars x,y; x^2 - y^3");
  AffineVariety v = parse_system("vars x,y; x^2 - y^3; x*y - 1");
  for (int n = 0; n <= 3; ++n) {
    JetScheme jw = jet_equations(w, n);
    JetScheme jv = jet_equations(v, n);
    for (const auto& eq : jw.equations) {
      bool found = false;
      for (const auto& eq2 : jv.equations) found = found || eq2 == eq;
      CHECK(found);
    }
  }
}

TEST_CASE("random systems: counts and truncation tower") {
  std::mt19937 rng(31337u);
  std::uniform_int_distribution<int> nv(1, 3), ng(0, 2), nt(1, 4), expo(0, 3), coef(-4, 4);
  for (int trial = 0; trial < 10; ++trial) {
    int N = nv(rng);
    AffineVariety v;
    for (int i = 0; i < N; ++i) v.vars.push_back("t" + std::to_string(i));
    int gens = ng(rng);
    for (int l = 0; l < gens; ++l) {
      MultiPoly f(N);
      for (int t = nt(rng); t > 0; --t) {
        MultiPoly::Exponents e(static_cast<std::size_t>(N));
        for (int i = 0; i < N; ++i) e[static_cast<std::size_t>(i)] = expo(rng);
        f.add_term(e, Rational(coef(rng)));
      }
      v.generators.push_back(std::move(f));
    }
    JetScheme prev = jet_equations(v, 0);
    for (int n = 1; n <= 4; ++n) {
      JetScheme cur = jet_equations(v, n);
      CHECK(static_cast<int>(cur.vars.size()) == N * (n + 1));
      CHECK(cur.equations.size() <= v.generators.size() * static_cast<std::size_t>(n + 1));
      CHECK(truncation_check(cur, prev));
      prev = std::move(cur);
    }
  }
}
