#pragma once

#include "hitchin/hitchin.hpp"
#include "hitchin/laurent.hpp"

#include <vector>

namespace hitchin::cubic {

// Type-A1 cameral (= spectral) data: the double cover y^2 = b(z) with b
// squarefree of degree exactly 2m, nonvanishing on supp D.
struct CameralDataA1 {
  Poly b;
  DivisorP1 D;
  Poly delta;  // divisor polynomial
  int m;
  int genus;   // m - 1

  CameralDataA1(Poly b_, DivisorP1 D_);  // throws std::domain_error on genericity failure
};

// u(z) dz / y with deg u <= genus - 1.
struct HolomorphicForm {
  Poly u;
};

// A leaf direction bdot (divisible by delta, deg <= 2m) together with the
// associated form u = bdot / (2 delta); the association bdot -> bdot dz/(2 y delta)
// is the tautological-differential contraction, linear in bdot.
struct LeafTangent {
  Poly bdot;
  HolomorphicForm qform;
};

HolomorphicForm tangent_to_form(const Poly& bdot, const CameralDataA1& data);
LeafTangent leaf_tangent(const Poly& bdot, const CameralDataA1& data);

// Quadratic residue at the ramification point over the branch point c of the
// quadratic differential pulled back from bdot/b * u v dz^2 / b.
// Closed form: 4 bdot(c) u(c) v(c) / b'(c)^2. Requires b(c) = 0, b'(c) != 0.
Rational res2_at_branch(const CameralDataA1& data, const Poly& bdot, const Poly& u, const Poly& v,
                        const Rational& c);
Cplx res2_at_branch(const CameralDataA1& data, const Poly& bdot, const Poly& u, const Poly& v,
                    const Cplx& c);

// Same value by local Laurent expansion: solve b(c + x(w)) = w^2 for the
// series x(w), expand the differential, read off the w^{-2} coefficient.
// When reparam (a unit series r with r(0) != 0) is given, the expansion is
// recomputed in the coordinate w' with w = w' r(w'); the answer must not move.
Rational res2_at_branch_series(const CameralDataA1& data, const Poly& bdot, const Poly& u,
                               const Poly& v, const Rational& c, int order = 8,
                               const Poly* reparam = nullptr);
Cplx res2_at_branch_series(const CameralDataA1& data, const Poly& bdot, const Poly& u,
                           const Poly& v, const Cplx& c, int order = 8,
                           const Poly* reparam = nullptr);

// Half the sum of quadratic residues over the ramification points:
//   2 sum_{b(c)=0} bdot(c) u(c) v(c) / b'(c)^2,
// evaluated exactly by symmetric functions (no root extraction).
Rational cubic_eval(const CameralDataA1& data, const Poly& bdot, const Poly& u, const Poly& v);

// The same sum over numerically computed roots.
Cplx cubic_eval_numeric(const CameralDataA1& data, const Poly& bdot, const Poly& u, const Poly& v,
                        double rootTol = 1e-12);

// Fully symmetric cubic tensor on the leaf: directions bdot_i = 2 z^i delta,
// forms u_j = z^j (0 <= i, j < genus). Empty for genus 0.
struct CubicTensor {
  int genus = 0;
  std::vector<Rational> entries;  // index = (i * genus + j) * genus + k
  const Rational& at(int i, int j, int k) const;
};

CubicTensor cubic_tensor(const CameralDataA1& data);

}  // namespace hitchin::cubic
