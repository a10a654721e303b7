#include "hitchin/lie.hpp"
#include "hitchin/qlinalg.hpp"

#include <doctest.h>

#include <random>

using namespace hitchin;

namespace {

std::mt19937 rng(999u);

Rational rnd_q(int lo = -5, int hi = 5) {
  std::uniform_int_distribution<int> num(lo, hi), den(1, 3);
  return Rational(num(rng), den(rng));
}

// Exact inverse of a constant matrix, column by column.
std::vector<Rational> mat_inverse(const std::vector<Rational>& g, int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = g[static_cast<std::size_t>(i) * n + j];
  std::vector<Rational> inv(static_cast<std::size_t>(n) * n);
  for (int col = 0; col < n; ++col) {
    std::vector<Rational> e(static_cast<std::size_t>(n), Rational(0));
    e[static_cast<std::size_t>(col)] = 1;
    auto x = q_solve(m, e);
    REQUIRE(x);
    for (int i = 0; i < n; ++i) inv[static_cast<std::size_t>(i) * n + col] = (*x)[static_cast<std::size_t>(i)];
  }
  return inv;
}

TracelessMatrix conjugate(const TracelessMatrix& M, const std::vector<Rational>& g,
                          const std::vector<Rational>& ginv) {
  const int n = M.size();
  std::vector<Poly> tmp(static_cast<std::size_t>(n) * n), out(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Poly s;
      for (int k = 0; k < n; ++k) s += g[static_cast<std::size_t>(i) * n + k] * M.at(k, j);
      tmp[static_cast<std::size_t>(i) * n + j] = std::move(s);
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Poly s;
      for (int k = 0; k < n; ++k) s += ginv[static_cast<std::size_t>(k) * n + j] * tmp[static_cast<std::size_t>(i) * n + k];
      out[static_cast<std::size_t>(i) * n + j] = std::move(s);
    }
  return TracelessMatrix(n, std::move(out));
}

}  // namespace

TEST_CASE("lie table entries") {
  SimpleTypeInfo a1 = lie_info('A', 1);
  CHECK(a1.dim == 3);
  CHECK(a1.degrees == std::vector<int>{2});
  CHECK(a1.numRoots == 2);
  CHECK(a1.weylOrder == 2);

  SimpleTypeInfo a2 = lie_info('A', 2);
  CHECK(a2.dim == 8);
  CHECK(a2.degrees == std::vector<int>{2, 3});
  CHECK(a2.numRoots == 6);
  CHECK(a2.weylOrder == 6);

  SimpleTypeInfo g2 = lie_info('G', 2);
  CHECK(g2.dim == 14);
  CHECK(g2.degrees == std::vector<int>{2, 6});
  CHECK(g2.numRoots == 12);
  CHECK(g2.weylOrder == 12);
}

TEST_CASE("lie table identities across families") {
  struct Probe {
    char f;
    int lo, hi;
  };
  for (const Probe& p : {Probe{'A', 1, 6}, Probe{'B', 2, 5}, Probe{'C', 2, 5}, Probe{'D', 3, 6},
                         Probe{'E', 6, 8}, Probe{'F', 4, 4}, Probe{'G', 2, 2}}) {
    for (int l = p.lo; l <= p.hi; ++l) {
      SimpleTypeInfo info = lie_info(p.f, l);
      long long sum = 0;
      for (int d : info.degrees) sum += 2 * d - 1;
      CHECK(sum == info.dim);
      CHECK(info.numRoots == info.dim - info.rank);
    }
  }
  CHECK_THROWS_AS(lie_info('D', 2), std::domain_error);
  CHECK_THROWS_AS(lie_info('E', 5), std::domain_error);
  CHECK_THROWS_AS(lie_info('F', 3), std::domain_error);
  CHECK_THROWS_AS(lie_info('H', 1), std::domain_error);
  CHECK_THROWS_AS(lie_info('A', 0), std::domain_error);
}

TEST_CASE("characteristic polynomial invariants") {
  Poly q = Poly::parse({"1", "0", "2"});
  TracelessMatrix M(2, {Poly(), Poly(Rational(1)), q, Poly()});
  auto p = charpoly_invariants(M);
  REQUIRE(p.size() == 1);
  CHECK(p[0] == -q);

  auto pz = charpoly_invariants(TracelessMatrix::zero(3));
  CHECK(pz[0].is_zero());
  CHECK(pz[1].is_zero());

  // Companion matrix of lambda^3 + a lambda + b.
  Poly a = Poly::parse({"2", "1"}), b = Poly::parse({"-1", "0", "3"});
  TracelessMatrix C(3, {Poly(), Poly(Rational(1)), Poly(),
                        Poly(), Poly(), Poly(Rational(1)),
                        -b, -a, Poly()});
  auto pc = charpoly_invariants(C);
  REQUIRE(pc.size() == 2);
  CHECK(pc[0] == a);
  CHECK(pc[1] == b);

  TracelessMatrix bad(2, {Poly(Rational(1)), Poly(), Poly(), -Poly(Rational(1))});
  CHECK_THROWS_WITH_AS(TracelessMatrix(2, {Poly(Rational(1)), Poly(), Poly(), Poly(Rational(1))}),
                       doctest::Contains("not traceless"), std::domain_error);
}

TEST_CASE("characteristic polynomial discriminant") {
  Poly b = Poly::parse({"4", "0", "-5", "0", "1"});
  TracelessMatrix M(2, {Poly(), Poly(Rational(1)), b, Poly()});  // p_2 = -b
  CHECK(charpoly_discriminant(M) == Rational(4) * b);

  Poly a = Poly::parse({"0", "1"});
  TracelessMatrix D(2, {a, Poly(), Poly(), -a});
  CHECK(charpoly_discriminant(D) == Rational(4) * a * a);

  TracelessMatrix Nil(2, {Poly(), Poly(Rational(1)), Poly(), Poly()});
  CHECK(charpoly_discriminant(Nil).is_zero());
}

TEST_CASE("discriminant of diagonal traceless matrices") {
  for (int n = 2; n <= 4; ++n) {
    for (int trial = 0; trial < 6; ++trial) {
      std::vector<Rational> d(static_cast<std::size_t>(n));
      Rational sum(0);
      for (int i = 0; i + 1 < n; ++i) {
        d[static_cast<std::size_t>(i)] = rnd_q();
        sum += d[static_cast<std::size_t>(i)];
      }
      d[static_cast<std::size_t>(n - 1)] = -sum;
      std::vector<Poly> e(static_cast<std::size_t>(n) * n);
      for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i) * n + i] = Poly(d[static_cast<std::size_t>(i)]);
      TracelessMatrix M(n, std::move(e));
      Rational expected(1);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          Rational diff = d[static_cast<std::size_t>(i)] - d[static_cast<std::size_t>(j)];
          expected *= diff * diff;
        }
      Poly disc = charpoly_discriminant(M);
      CHECK(disc == Poly(expected));
    }
  }
}

TEST_CASE("conjugation invariance of the invariants") {
  std::uniform_int_distribution<int> small(-3, 3);
  for (int n = 2; n <= 3; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      // Random matrix with polynomial entries, trace pushed into the corner.
      std::vector<Poly> e(static_cast<std::size_t>(n) * n);
      Poly diag;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          if (i == n - 1 && j == n - 1) continue;
          Poly p(std::vector<Rational>{rnd_q(), rnd_q()});
          e[static_cast<std::size_t>(i) * n + j] = p;
          if (i == j) diag += p;
        }
      e[static_cast<std::size_t>(n) * n - 1] = -diag;
      TracelessMatrix M(n, std::move(e));

      std::vector<Rational> g;
      Rational det(0);
      do {
        g.assign(static_cast<std::size_t>(n) * n, Rational(0));
        QMatrix gm(n, n);
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) {
            g[static_cast<std::size_t>(i) * n + j] = Rational(small(rng));
            gm.at(i, j) = g[static_cast<std::size_t>(i) * n + j];
          }
        det = q_det(gm);
      } while (det == 0);
      auto ginv = mat_inverse(g, n);
      TracelessMatrix conj = conjugate(M, g, ginv);
      CHECK(charpoly_invariants(conj) == charpoly_invariants(M));
    }
  }
}
