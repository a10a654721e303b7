#pragma once

#include "hitchin/hitchin.hpp"
#include "hitchin/laurent.hpp"
#include "hitchin/lie.hpp"
#include "hitchin/qlinalg.hpp"

#include <vector>

namespace hitchin::cech {

// n x n matrix of Laurent polynomials; the common currency for overlap data
// on the standard two-chart cover of P^1, always expressed in the chart-0
// coordinate and trivialisation.
struct LaurentMat {
  int n = 0;
  std::vector<LaurentPoly> e;

  LaurentMat() = default;
  explicit LaurentMat(int n_) : n(n_), e(static_cast<std::size_t>(n_) * n_) {}
  LaurentPoly& at(int i, int j) { return e[static_cast<std::size_t>(i) * n + j]; }
  const LaurentPoly& at(int i, int j) const { return e[static_cast<std::size_t>(i) * n + j]; }

  bool is_zero() const;
  bool supported_in(int lo, int hi) const;
  LaurentMat part_at_least(int k) const;
  LaurentMat part_at_most(int k) const;

  LaurentMat operator-() const;
  friend LaurentMat operator+(const LaurentMat& a, const LaurentMat& b);
  friend LaurentMat operator-(const LaurentMat& a, const LaurentMat& b);
  friend LaurentMat operator*(const LaurentPoly& s, const LaurentMat& m);
  bool operator==(const LaurentMat&) const = default;

  LaurentPoly trace_with(const LaurentMat& o) const;  // Tr(this * o)
};

LaurentMat commutator(const LaurentMat& a, const LaurentMat& b);
LaurentMat to_laurent(const TracelessMatrix& m);

// Problem data for the two-term complexes attached to a Higgs field theta on
// the trivial bundle: K  = [ ad P --[theta,.]--> ad P (x) O(m) ] and its
// Serre dual (after the trace identification)
//        G = [ ad P (x) O(-d) --[theta,.]--> ad P (x) K ].
// The inclusion O(-D) -> O is multiplication by delta in chart 0. Both
// differentials carry the same sign; this is the choice that makes the
// explicit trace pairing below insensitive to coboundaries.
struct Instance {
  TracelessMatrix theta;
  int m;        // deg K(D)
  int d;        // deg D
  Poly delta;   // divisor polynomial, degree d

  Instance(TracelessMatrix theta_, const DivisorP1& D);
  Instance(TracelessMatrix theta_, int m_, int d_, Poly delta_);
  int n() const { return theta.size(); }
};

// Hypercocycle (s, t) of K: s on the overlap, t = (t0, t1) per chart, all in
// chart-0 coordinates. Windows: t0 >= 0, t1 <= m; cocycle: [theta, s] = t1 - t0.
struct TangentCocycle {
  LaurentMat s01, t0, t1;
};

// Hypercocycle (sigma, tau) of G. Windows: tau0 >= 0, tau1 <= -2 (a section
// of K regular at infinity); cocycle: [theta, sigma] = tau1 - tau0.
struct CotangentCocycle {
  LaurentMat sigma01, tau0, tau1;
};

// Cohomology of O(k) on the projective line.
std::pair<int, int> line_cohomology(int k);

struct HyperCohomologyReport {
  int h0 = 0, h1 = 0, h2 = 0;
  int eulerNeg = 0;  // h1 - h0 - h2
  int dimG = 0;      // dim of the Lie algebra
  int m = 0;
  bool identityOk = false;  // eulerNeg == dimG * m
};

// Hypercohomology dimensions of K for sl_n on genus 0 with trivial bundle:
// h0 = ker(ad theta on global sections), h1 picks up only the coker (the
// H^1 contribution of the bundle vanishes for m >= 0), h2 = 0.
HyperCohomologyReport hyper_dims(const TracelessMatrix& theta, int m);
HyperCohomologyReport hyper_dims(const HiggsFieldP1& phi);

void validate_tangent(const Instance& I, const TangentCocycle& a);      // throws std::domain_error
void validate_cotangent(const Instance& I, const CotangentCocycle& b);  // throws std::domain_error

// Serre-duality pairing at cocycle level: the class of
//   c_01 = Tr(t0 sigma01) - Tr(s01 tau1)
// in H^1(K_X), normalised as the coefficient of dz/z.
Rational duality_pair(const Instance& I, const TangentCocycle& a, const CotangentCocycle& b);

// Cotangent-to-tangent map induced by O(-D) -> O: multiply every component
// by delta.
TangentCocycle poisson_apply(const Instance& I, const CotangentCocycle& b);

// Bases of the first hypercohomology of K and of G. Tangent classes are
// global coker representatives (s = 0); cotangent classes are overlap tails
// z^{-1}..z^{-(d-1)} with vanishing commutator residue.
std::vector<TangentCocycle> tangent_basis(const Instance& I);
std::vector<CotangentCocycle> cotangent_basis(const Instance& I);

// Coordinates of a tangent hypercocycle in the tangent_basis ordering.
std::vector<Rational> tangent_coordinates(const Instance& I, const TangentCocycle& a);

// Gram matrix of duality_pair over the two bases.
QMatrix gram_matrix(const Instance& I);

// Matrix of poisson_apply: columns are tangent coordinates of Psi(beta_j).
QMatrix poisson_matrix(const Instance& I);

}  // namespace hitchin::cech
