#pragma once

#include "hitchin/lie.hpp"
#include "hitchin/poly.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hitchin {

// Effective divisor on the affine chart of P^1; support must avoid infinity
// and the total degree must be at least 3 (so deg K(D) >= 1 on genus 0).
struct DivisorP1 {
  std::vector<std::pair<Rational, int>> points;  // (coordinate, multiplicity)

  explicit DivisorP1(std::vector<std::pair<Rational, int>> pts);
  int degree() const;
  Poly delta() const;  // prod (z - q_j)^{n_j}
  bool contains(const Rational& q) const;
};

struct LineBundleP1 {
  int degree = 0;
  int h0() const { return std::max(degree + 1, 0); }
  int h1() const { return std::max(-degree - 1, 0); }
};

// Trivial-bundle chart model of a K(D)-valued Higgs field: a traceless
// polynomial matrix whose entries are sections of O(m), m = deg D - 2.
struct HiggsFieldP1 {
  TracelessMatrix theta;
  DivisorP1 D;

  HiggsFieldP1(TracelessMatrix t, DivisorP1 d);  // checks entry degrees <= m
  int n() const { return theta.size(); }
  int m() const { return D.degree() - 2; }
};

// Invariant coefficients b_i = p_{d_i}(theta); asserts deg b_i <= d_i * m.
std::vector<Poly> hitchin_map(const HiggsFieldP1& phi);

// Spectral coefficient of an sl_2 field: the double cover is y^2 = b.
Poly spectral_coefficient_a1(const HiggsFieldP1& phi);

struct DimensionReport {
  int dimB = 0;      // sum_i (d_i m + 1)
  int dimB0 = 0;     // sum_i max(d_i m - d + 1, 0)
  int dimHiggs = 0;  // dim g * m
  int fibreDim = 0;  // dimHiggs - dimB (meaningful when >= 0)
};
DimensionReport dimension_report(char family, int rank, int d);

struct BranchReport {
  bool ok = false;
  std::string reason;        // set when rejected
  int branchCount = 0;       // 2m on success
  Poly branchPoly;           // the squarefree coefficient itself
};

// Type-A1 genericity: deg b = 2m exactly (no branching at infinity),
// b squarefree, and b nonvanishing on supp D. Failures are reported.
BranchReport genericity_check(const Poly& b, const DivisorP1& D);

struct CameralReport {
  long long N = 0;               // |R| * (d - 2)
  std::optional<int> genus;      // A1 only: N/2 - 1
};
CameralReport cameral_genus(char family, int rank, int d);

// Base point plus a basis of the leaf directions: for each invariant degree
// d_i, the sections of L^{d_i}(-D) (every one divisible by delta_D).
struct LeafBase {
  std::vector<Poly> basepoint;
  std::vector<std::vector<Poly>> directions;  // directions[i] for degree d_i
  int dim() const;
};
LeafBase leaf_base(char family, int rank, const DivisorP1& D, std::vector<Poly> basepoint);

}  // namespace hitchin
