#include "hitchin/hitchin.hpp"

#include <set>
#include <stdexcept>

namespace hitchin {

DivisorP1::DivisorP1(std::vector<std::pair<Rational, int>> pts) : points(std::move(pts)) {
  std::set<Rational> seen;
  for (const auto& [q, n] : points) {
    if (n <= 0) throw std::domain_error("divisor multiplicities must be positive");
    if (!seen.insert(q).second) throw std::domain_error("divisor points must be distinct");
  }
  if (degree() < 3) throw std::domain_error("divisor degree must be at least 3");
}

int DivisorP1::degree() const {
  int d = 0;
  for (const auto& [q, n] : points) d += n;
  return d;
}

Poly DivisorP1::delta() const {
  Poly p(Rational(1));
  for (const auto& [q, n] : points)
    p = p * pow(Poly(std::vector<Rational>{-q, Rational(1)}), n);
  return p;
}

bool DivisorP1::contains(const Rational& q) const {
  for (const auto& [p, n] : points)
    if (p == q) return true;
  return false;
}

HiggsFieldP1::HiggsFieldP1(TracelessMatrix t, DivisorP1 d) : theta(std::move(t)), D(std::move(d)) {
  if (theta.max_entry_degree() > m())
    throw std::domain_error("Higgs field entry degree exceeds deg K(D)");
}

std::vector<Poly> hitchin_map(const HiggsFieldP1& phi) {
  std::vector<Poly> b = charpoly_invariants(phi.theta);
  for (std::size_t i = 0; i < b.size(); ++i) {
    const int di = static_cast<int>(i) + 2;  // degrees 2..n for sl_n
    if (!b[i].is_zero() && b[i].degree() > di * phi.m())
      throw std::logic_error("hitchin_map: invariant degree overflow");
  }
  return b;
}

Poly spectral_coefficient_a1(const HiggsFieldP1& phi) {
  if (phi.n() != 2) throw std::domain_error("spectral coefficient defined for 2x2 fields");
  return -hitchin_map(phi)[0];  // y^2 = -p_2
}

DimensionReport dimension_report(char family, int rank, int d) {
  if (d < 3) throw std::domain_error("divisor degree must be at least 3");
  SimpleTypeInfo info = lie_info(family, rank);
  const int m = d - 2;
  DimensionReport rep;
  for (int di : info.degrees) {
    rep.dimB += di * m + 1;
    rep.dimB0 += std::max(di * m - d + 1, 0);
  }
  rep.dimHiggs = info.dim * m;
  rep.fibreDim = rep.dimHiggs - rep.dimB;
  return rep;
}

BranchReport genericity_check(const Poly& b, const DivisorP1& D) {
  const int m = D.degree() - 2;
  BranchReport rep;
  if (b.is_zero() || b.degree() != 2 * m) {
    rep.reason = "branch at infinity";  // wrong total branch degree
    return rep;
  }
  if (!is_squarefree(b)) {
    rep.reason = "repeated root";
    return rep;
  }
  for (const auto& [q, n] : D.points) {
    if (b(q) == 0) {
      rep.reason = "branch point meets divisor";
      return rep;
    }
  }
  rep.ok = true;
  rep.branchCount = 2 * m;
  rep.branchPoly = b;
  return rep;
}

CameralReport cameral_genus(char family, int rank, int d) {
  if (d < 3) throw std::domain_error("divisor degree must be at least 3");
  SimpleTypeInfo info = lie_info(family, rank);
  CameralReport rep;
  rep.N = info.numRoots * (d - 2);
  if (family == 'A' && rank == 1) {
    rep.genus = static_cast<int>(rep.N / 2 - 1);
    // Lagrangian fibration dimension identity on the leaf.
    if (*rep.genus != dimension_report(family, rank, d).dimB0)
      throw std::logic_error("cameral genus does not match leaf dimension");
  }
  return rep;
}

int LeafBase::dim() const {
  int s = 0;
  for (const auto& v : directions) s += static_cast<int>(v.size());
  return s;
}

LeafBase leaf_base(char family, int rank, const DivisorP1& D, std::vector<Poly> basepoint) {
  SimpleTypeInfo info = lie_info(family, rank);
  if (basepoint.size() != info.degrees.size())
    throw std::domain_error("basepoint component count does not match rank");
  const int d = D.degree();
  const int m = d - 2;
  Poly delta = D.delta();
  LeafBase base;
  base.basepoint = std::move(basepoint);
  for (std::size_t i = 0; i < info.degrees.size(); ++i) {
    const int di = info.degrees[i];
    if (!base.basepoint[i].is_zero() && base.basepoint[i].degree() > di * m)
      throw std::domain_error("basepoint component degree too large");
    std::vector<Poly> dirs;
    const int dim_i = std::max(di * m - d + 1, 0);
    for (int j = 0; j < dim_i; ++j) dirs.push_back(Poly::monomial(j) * delta);
    base.directions.push_back(std::move(dirs));
  }
  return base;
}

}  // namespace hitchin
