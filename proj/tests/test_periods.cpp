#include "hitchin/periods.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace hitchin;
using namespace hitchin::periods;

namespace {

bool has_root_near(const std::vector<Cplx>& roots, Cplx target, double tol = 1e-12) {
  for (const auto& r : roots)
    if (std::abs(r - target) <= tol * std::max(1.0, std::abs(target))) return true;
  return false;
}

// Simpson quadrature of the defining elliptic integral, as an independent
// cross-check of the AGM oracle.
double K_by_quadrature(double k) {
  const int n = 20000;
  const double h = (3.14159265358979323846 / 2.0) / n;
  auto f = [&](double t) { return 1.0 / std::sqrt(1.0 - k * k * std::sin(t) * std::sin(t)); };
  double s = f(0.0) + f(n * h);
  for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * f(i * h);
  return s * h / 3.0;
}

}  // namespace

TEST_CASE("complex roots") {
  auto r1 = complex_roots(Poly::parse({"1", "0", "1"}));
  CHECK(has_root_near(r1.roots, Cplx(0, 1)));
  CHECK(has_root_near(r1.roots, Cplx(0, -1)));

  auto r2 = complex_roots(Poly::parse({"4", "0", "-5", "0", "1"}));
  for (double x : {1.0, -1.0, 2.0, -2.0}) CHECK(has_root_near(r2.roots, Cplx(x, 0)));

  auto r3 = complex_roots(Poly::parse({"-1", "0", "0", "0", "1"}));
  for (const Cplx t : {Cplx(1, 0), Cplx(-1, 0), Cplx(0, 1), Cplx(0, -1)})
    CHECK(has_root_near(r3.roots, t));

  CHECK_THROWS_WITH_AS(complex_roots(Poly::parse({"1", "-2", "1"})),
                       doctest::Contains("not squarefree"), std::domain_error);
  CHECK_THROWS_AS(complex_roots(Poly(Rational(3))), std::domain_error);
}

TEST_CASE("agm and elliptic K") {
  CHECK(agm(1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(agm_elliptic_K(0.0) == doctest::Approx(3.14159265358979323846 / 2.0).epsilon(1e-14));
  CHECK(agm_elliptic_K(0.5) == doctest::Approx(K_by_quadrature(0.5)).epsilon(1e-10));
  CHECK_THROWS_AS(agm_elliptic_K(1.0), std::domain_error);
  CHECK_THROWS_AS(agm_elliptic_K(-0.1), std::domain_error);
}

TEST_CASE("cut planning rejects crowded layouts") {
  PeriodConfig cfg;
  // Roots -1, 1, 21/20, 3: the stranger 21/20 sits 0.05 from the long cut [-1, 1].
  Poly b = Poly::parse({"-1", "0", "1"}) * Poly::parse({"-21", "20"}) * Poly::parse({"-3", "1"});
  auto roots = complex_roots(b).roots;
  CHECK_THROWS_WITH_AS(plan_cuts(roots, cfg), doctest::Contains("too degenerate"),
                       std::domain_error);
}

TEST_CASE("elliptic period against the AGM closed form") {
  // y^2 = (1 - z^2)(1 - k^2 z^2), k = 1/2: in the canonical basis from
  // lexicographic cut pairing, tau = 2 i K(k) / K(k').
  Poly b = Poly::parse({"1", "0", "-5/4", "0", "1/4"});
  RiemannMatrix rm = period_matrix(b);
  double K = agm_elliptic_K(0.5), Kp = agm_elliptic_K(std::sqrt(3.0) / 2.0);
  Cplx expected(0.0, 2.0 * K / Kp);
  CHECK(std::abs(rm.tauReduced[0][0] - expected) <= 1e-8 * std::abs(expected));
  CHECK(rm.imPositiveDefinite);
  CHECK(rm.symmetryResidual == 0.0);
}

TEST_CASE("square lattice for z^4 - 1") {
  RiemannMatrix rm = period_matrix(Poly::parse({"-1", "0", "0", "0", "1"}));
  CHECK(std::abs(rm.tauReduced[0][0] - Cplx(0.0, 1.0)) < 1e-6);
}

TEST_CASE("contour and chain engines agree on a real layout") {
  Poly b = Poly::parse({"9", "0", "-10", "0", "1"});  // roots +-1, +-3
  PeriodConfig chainCfg;
  PeriodConfig contourCfg;
  contourCfg.forceContour = true;
  RiemannMatrix a = period_matrix(b, chainCfg);
  RiemannMatrix c = period_matrix(b, contourCfg);
  CHECK(std::abs(a.tau[0][0] - c.tau[0][0]) < 1e-9 * std::abs(a.tau[0][0]));
}

TEST_CASE("genus-2 matrix is symmetric with positive-definite imaginary part") {
  Poly b = Poly::parse({"-36", "0", "49", "0", "-14", "0", "1"});
  RiemannMatrix rm = period_matrix(b);
  CHECK(rm.genus == 2);
  CHECK(rm.symmetryResidual <= 1e-8);
  CHECK(rm.imPositiveDefinite);

  // Asymmetric layout as well.
  Poly b2 = Poly::parse({"-48", "4", "64", "-5", "-17", "1", "1"});
  RiemannMatrix rm2 = period_matrix(b2);
  CHECK(rm2.symmetryResidual <= 1e-8);
  CHECK(rm2.imPositiveDefinite);
}

TEST_CASE("tau is invariant under recombining the raw form basis") {
  Poly b = Poly::parse({"-36", "0", "49", "0", "-14", "0", "1"});
  RiemannMatrix rm = period_matrix(b);
  // Recombination acts on the form index (columns of A and B) on the right;
  // tau = B A^{-1} must not move.
  const CMatrix M = {{Cplx(2, 0), Cplx(1, 0)}, {Cplx(3, 0), Cplx(2, 0)}};  // det 1
  auto mul = [&](const CMatrix& X) {
    CMatrix R(2, std::vector<Cplx>(2, Cplx(0, 0)));
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) R[i][j] += X[i][k] * M[k][j];
    return R;
  };
  CMatrix A2 = mul(rm.aPeriods), B2 = mul(rm.bPeriods);
  // Solve tau2 = B2 * inverse(A2) by hand (2x2).
  Cplx det = A2[0][0] * A2[1][1] - A2[0][1] * A2[1][0];
  CMatrix Ainv = {{A2[1][1] / det, -A2[0][1] / det}, {-A2[1][0] / det, A2[0][0] / det}};
  CMatrix tau2(2, std::vector<Cplx>(2, Cplx(0, 0)));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) tau2[i][j] += B2[i][k] * Ainv[k][j];
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(std::abs(tau2[i][j] - rm.tau[i][j]) < 1e-10);
}

TEST_CASE("finite differences of tau") {
  Poly b = Poly::parse({"4", "0", "-5", "0", "1"});
  Poly zero;
  FdResult fd0 = dtau_fd(b, zero, 1e-3);
  CHECK(std::abs(fd0.richardson[0][0]) < 1e-12);

  Poly bdot = Poly::monomial(4);
  FdResult fd = dtau_fd(b, bdot, 1e-3);
  FdResult fdNeg = dtau_fd(b, -bdot, 1e-3);
  CHECK(std::abs(fd.richardson[0][0] + fdNeg.richardson[0][0]) <
        1e-8 * std::abs(fd.richardson[0][0]));
  // The h and h/2 estimates must be Richardson-consistent.
  CHECK(std::abs(fd.richardson[0][0] - fd.fdHalf[0][0]) <=
        std::abs(fd.fdH[0][0] - fd.fdHalf[0][0]) + 1e-12);
}

TEST_CASE("degenerate inputs are rejected") {
  CHECK_THROWS_AS(period_matrix(Poly::parse({"1", "0", "1"})), std::domain_error);  // genus 0 shape
  // Genus 3 is out of range.
  std::vector<Rational> c(9, Rational(0));
  c[0] = Rational(1);
  c[8] = Rational(1);
  CHECK_THROWS_AS(period_matrix(Poly(std::move(c))), std::domain_error);
}
