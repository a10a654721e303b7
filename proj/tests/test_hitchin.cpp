#include "hitchin/hitchin.hpp"

#include <doctest.h>

#include <random>

using namespace hitchin;

namespace {

std::mt19937 rng(2718u);

Rational rnd_q() {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 3);
  return Rational(num(rng), den(rng));
}

Poly rnd_poly(int maxDeg) {
  std::vector<Rational> c(static_cast<std::size_t>(maxDeg) + 1);
  for (auto& x : c) x = rnd_q();
  return Poly(std::move(c));
}

TracelessMatrix rnd_traceless(int n, int maxDeg) {
  std::vector<Poly> e(static_cast<std::size_t>(n) * n);
  Poly diag;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == n - 1 && j == n - 1) continue;
      Poly p = rnd_poly(maxDeg);
      e[static_cast<std::size_t>(i) * n + j] = p;
      if (i == j) diag += p;
    }
  e[static_cast<std::size_t>(n) * n - 1] = -diag;
  return TracelessMatrix(n, std::move(e));
}

DivisorP1 d_at_zero(int d) { return DivisorP1({{Rational(0), d}}); }

}  // namespace

TEST_CASE("divisor validation") {
  CHECK_THROWS_AS(DivisorP1({{Rational(0), 2}}), std::domain_error);            // degree < 3
  CHECK_THROWS_AS(DivisorP1({{Rational(0), 2}, {Rational(0), 2}}), std::domain_error);
  CHECK_THROWS_AS(DivisorP1({{Rational(0), 0}, {Rational(1), 3}}), std::domain_error);
  DivisorP1 D({{Rational(0), 2}, {Rational(1), 1}, {Rational(-1, 2), 1}});
  CHECK(D.degree() == 4);
  CHECK(D.delta().degree() == 4);
  CHECK(D.delta()(Rational(1)) == 0);
  CHECK(D.contains(Rational(-1, 2)));
}

TEST_CASE("line bundle cohomology on genus zero") {
  CHECK(LineBundleP1{0}.h0() == 1);
  CHECK(LineBundleP1{0}.h1() == 0);
  CHECK(LineBundleP1{-2}.h0() == 0);
  CHECK(LineBundleP1{-2}.h1() == 1);
  CHECK(LineBundleP1{3}.h0() == 4);
  CHECK(LineBundleP1{3}.h1() == 0);
}

TEST_CASE("hitchin map on standard shapes") {
  DivisorP1 D = d_at_zero(4);
  Poly q = Poly::parse({"1", "0", "-2"});
  HiggsFieldP1 phi(TracelessMatrix(2, {Poly(), Poly(Rational(1)), q, Poly()}), D);
  auto b = hitchin_map(phi);
  REQUIRE(b.size() == 1);
  CHECK(b[0] == -q);
  CHECK(spectral_coefficient_a1(phi) == q);

  Poly a = Poly::parse({"0", "1", "1"});
  HiggsFieldP1 diag(TracelessMatrix(2, {a, Poly(), Poly(), -a}), D);
  CHECK(hitchin_map(diag)[0] == -(a * a));

  HiggsFieldP1 zero(TracelessMatrix::zero(2), D);
  CHECK(hitchin_map(zero)[0].is_zero());

  // Entry degrees above m are rejected at construction.
  CHECK_THROWS_AS(HiggsFieldP1(TracelessMatrix(2, {Poly(), Poly::monomial(3), Poly(), Poly()}), D),
                  std::domain_error);
}

TEST_CASE("hitchin map degree bounds and conjugation invariance") {
  for (int n = 2; n <= 3; ++n) {
    for (int d = 3; d <= 6; ++d) {
      const int m = d - 2;
      HiggsFieldP1 phi(rnd_traceless(n, m), d_at_zero(d));
      auto b = hitchin_map(phi);
      for (std::size_t i = 0; i < b.size(); ++i) {
        int di = static_cast<int>(i) + 2;
        if (!b[i].is_zero()) CHECK(b[i].degree() <= di * m);
      }
    }
  }
}

TEST_CASE("dimension report") {
  DimensionReport r14 = dimension_report('A', 1, 4);
  CHECK(r14.dimB == 5);
  CHECK(r14.dimB0 == 1);
  CHECK(r14.dimHiggs == 6);

  DimensionReport r15 = dimension_report('A', 1, 5);
  CHECK(r15.dimB == 7);
  CHECK(r15.dimB0 == 2);
  CHECK(r15.dimHiggs == 9);

  DimensionReport r24 = dimension_report('A', 2, 4);
  CHECK(r24.dimB == 12);
  CHECK(r24.dimB0 == 4);
  CHECK(r24.dimHiggs == 16);

  CHECK_THROWS_AS(dimension_report('A', 1, 2), std::domain_error);
}

TEST_CASE("genericity check") {
  DivisorP1 D = d_at_zero(4);
  BranchReport ok = genericity_check(Poly::parse({"4", "0", "-5", "0", "1"}), D);
  CHECK(ok.ok);
  CHECK(ok.branchCount == 4);

  // (z-1)^2 (z^2+1)
  Poly rep = Poly::parse({"1", "-2", "1"}) * Poly::parse({"1", "0", "1"});
  BranchReport bad = genericity_check(rep, D);
  CHECK(!bad.ok);
  CHECK(bad.reason == "repeated root");

  BranchReport inf = genericity_check(Poly::parse({"1", "0", "0", "1"}), D);
  CHECK(!inf.ok);
  CHECK(inf.reason == "branch at infinity");

  BranchReport onD = genericity_check(Poly::parse({"0", "0", "-5", "0", "1"}), D);
  CHECK(!onD.ok);
  CHECK(onD.reason == "branch point meets divisor");
}

TEST_CASE("genericity acceptance implies squarefree and coprime to the divisor") {
  for (int trial = 0; trial < 25; ++trial) {
    int d = 4 + (trial % 3);
    DivisorP1 D = d_at_zero(d);
    Poly b = rnd_poly(2 * (d - 2) - 1) + Poly::monomial(2 * (d - 2));
    BranchReport rep = genericity_check(b, D);
    if (!rep.ok) continue;
    CHECK(discriminant(b) != 0);
    CHECK(poly_gcd(b, D.delta()).degree() == 0);
  }
}

TEST_CASE("cameral genus bookkeeping") {
  CameralReport r4 = cameral_genus('A', 1, 4);
  CHECK(r4.N == 4);
  CHECK(*r4.genus == 1);
  CameralReport r5 = cameral_genus('A', 1, 5);
  CHECK(r5.N == 6);
  CHECK(*r5.genus == 2);
  CameralReport r24 = cameral_genus('A', 2, 4);
  CHECK(r24.N == 12);
  CHECK(!r24.genus);
  for (int d = 4; d <= 8; ++d)
    CHECK(*cameral_genus('A', 1, d).genus == dimension_report('A', 1, d).dimB0);
}

TEST_CASE("leaf base directions") {
  DivisorP1 D = d_at_zero(5);
  LeafBase base = leaf_base('A', 1, D, {Poly::monomial(6)});
  CHECK(base.dim() == dimension_report('A', 1, 5).dimB0);
  for (const auto& dirs : base.directions)
    for (const auto& dir : dirs) CHECK(exact_div(dir, D.delta()).has_value());
  CHECK_THROWS_AS(leaf_base('A', 1, D, {Poly::monomial(7)}), std::domain_error);
  CHECK_THROWS_AS(leaf_base('A', 2, D, {Poly::monomial(1)}), std::domain_error);
}
