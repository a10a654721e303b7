#include "hitchin/verify.hpp"

#include "hitchin/cech.hpp"
#include "hitchin/cubic.hpp"
#include "hitchin/jets.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

namespace hitchin::verify {

namespace {

using Clock = std::chrono::steady_clock;

Rational rand_rational(std::mt19937& rng, int lo = -6, int hi = 6) {
  std::uniform_int_distribution<int> num(lo, hi);
  std::uniform_int_distribution<int> den(1, 3);
  return Rational(num(rng), den(rng));
}

Poly rand_poly(std::mt19937& rng, int maxDeg) {
  std::vector<Rational> c(static_cast<std::size_t>(maxDeg + 1));
  for (auto& x : c) x = rand_rational(rng);
  return Poly(std::move(c));
}

TracelessMatrix rand_traceless(std::mt19937& rng, int n, int maxDeg) {
  std::vector<Poly> e(static_cast<std::size_t>(n) * n);
  Poly diagsum;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == n - 1 && j == n - 1) continue;
      Poly p = rand_poly(rng, maxDeg);
      e[static_cast<std::size_t>(i) * n + j] = p;
      if (i == j) diagsum += p;
    }
  e[static_cast<std::size_t>(n) * n - 1] = -diagsum;
  return TracelessMatrix(n, std::move(e));
}

DivisorP1 divisor_at_zero(int d) { return DivisorP1({{Rational(0), d}}); }

// Random sl_2 field over D = d[0] whose spectral coefficient is generic.
struct A1Instance {
  TracelessMatrix theta;
  Poly b;
};

A1Instance rand_generic_a1(std::mt19937& rng, int d) {
  const int m = d - 2;
  DivisorP1 D = divisor_at_zero(d);
  for (int tries = 0; tries < 200; ++tries) {
    Poly a = rand_poly(rng, m), c = rand_poly(rng, m), e = rand_poly(rng, m);
    Poly b = a * a + c * e;
    if (!genericity_check(b, D).ok) continue;
    std::vector<Poly> ent{a, c, e, -a};
    return {TracelessMatrix(2, std::move(ent)), b};
  }
  throw std::runtime_error("failed to draw a generic sl_2 instance");
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3g", x);
  return buf;
}

CriterionResult timed(int id, const std::string& name, const std::function<std::pair<bool, std::string>()>& body) {
  CriterionResult r;
  r.id = id;
  r.name = name;
  auto t0 = Clock::now();
  try {
    auto [ok, detail] = body();
    r.pass = ok;
    r.detail = detail;
  } catch (const std::exception& ex) {
    r.pass = false;
    r.detail = std::string("exception: ") + ex.what();
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return r;
}

// ---- criterion bodies ---------------------------------------------------

std::pair<bool, std::string> crit_dimension_identity() {
  std::mt19937 rng(20240811u);
  int checked = 0;
  for (int rank = 1; rank <= 2; ++rank) {
    const int n = rank + 1;
    for (int d = 2; d <= 6; ++d) {
      const int m = d - 2;
      std::vector<TracelessMatrix> thetas;
      thetas.push_back(TracelessMatrix::zero(n));
      for (int k = 0; k < 3; ++k) thetas.push_back(rand_traceless(rng, n, m));
      for (const auto& th : thetas) {
        cech::HyperCohomologyReport rep = cech::hyper_dims(th, m);
        if (!rep.identityOk || rep.h2 != 0)
          return {false, "identity failed at rank " + std::to_string(rank) + ", d " + std::to_string(d)};
        ++checked;
      }
    }
  }
  return {true, std::to_string(checked) + " instances, h1 - h0 - h2 = dim g * (d-2) exactly"};
}

std::pair<bool, std::string> crit_lagrangian_dimension() {
  for (int d = 4; d <= 8; ++d) {
    CameralReport cr = cameral_genus('A', 1, d);
    DimensionReport dr = dimension_report('A', 1, d);
    if (!cr.genus || *cr.genus != dr.dimB0)
      return {false, "genus != dim B0 at d = " + std::to_string(d)};
  }
  return {true, "genus == dim B0 for d = 4..8"};
}

std::pair<bool, std::string> crit_jets() {
  // Affine plane: N (n+1) variables, no equations.
  AffineVariety plane = parse_system("vars x,y;");
  JetScheme j3 = jet_equations(plane, 3);
  if (j3.vars.size() != 8 || !j3.equations.empty()) return {false, "affine-space jets wrong shape"};

  // Cuspidal cubic at order 1.
  AffineVariety cusp = parse_system("vars x,y; x^2 - y^3");
  JetScheme c1 = jet_equations(cusp, 1);
  if (c1.equations.size() != 2) return {false, "cusp order-1 equation count"};
  // Expected: x0^2 - y0^3 and 2 x0 x1 - 3 y0^2 y1 in variables (x0,x1,y0,y1).
  MultiPoly g0(4), g1(4);
  g0.add_term({2, 0, 0, 0}, 1);
  g0.add_term({0, 0, 3, 0}, -1);
  g1.add_term({1, 1, 0, 0}, 2);
  g1.add_term({0, 0, 2, 1}, -3);
  if (!(c1.equations[0] == g0) || !(c1.equations[1] == g1))
    return {false, "cusp order-1 equations differ from the hand expansion"};

  // Truncation compatibility on random small systems.
  std::mt19937 rng(77u);
  std::uniform_int_distribution<int> nv(1, 3), ng(0, 2), nt(1, 4), expo(0, 3);
  for (int trial = 0; trial < 12; ++trial) {
    int N = nv(rng);
    AffineVariety v;
    for (int i = 0; i < N; ++i) v.vars.push_back("x" + std::to_string(i));
    int gens = ng(rng);
    for (int l = 0; l < gens; ++l) {
      MultiPoly f(N);
      int terms = nt(rng);
      for (int t = 0; t < terms; ++t) {
        MultiPoly::Exponents e(static_cast<std::size_t>(N), 0);
        for (int i = 0; i < N; ++i) e[static_cast<std::size_t>(i)] = expo(rng) % 4;
        f.add_term(e, rand_rational(rng));
      }
      if (f.is_zero()) v.zeroGenerators.push_back(static_cast<int>(v.generators.size()));
      v.generators.push_back(std::move(f));
    }
    JetScheme prev = jet_equations(v, 0);
    if (static_cast<int>(prev.vars.size()) != N) return {false, "variable count at order 0"};
    for (int n = 1; n <= 4; ++n) {
      JetScheme cur = jet_equations(v, n);
      if (static_cast<int>(cur.vars.size()) != N * (n + 1))
        return {false, "variable count is not N(n+1)"};
      if (!truncation_check(cur, prev)) return {false, "truncation mismatch"};
      prev = std::move(cur);
    }
  }
  return {true, "affine-space shape, cusp equations, truncation maps for n <= 4"};
}

std::pair<bool, std::string> crit_duality_poisson() {
  std::mt19937 rng(4242u);
  const int d = 4;
  DivisorP1 D = divisor_at_zero(d);
  for (int inst = 0; inst < 5; ++inst) {
    A1Instance a1 = rand_generic_a1(rng, d);
    cech::Instance I(a1.theta, D);
    auto tb = cech::tangent_basis(I);
    auto cb = cech::cotangent_basis(I);
    if (tb.size() != cb.size()) return {false, "hypercohomology dimensions disagree"};
    QMatrix G = cech::gram_matrix(I);
    if (q_det(G) == 0) return {false, "singular duality Gram matrix"};
    // Skew-adjointness of the cotangent-to-tangent map, exactly.
    const int N = static_cast<int>(cb.size());
    for (int i = 0; i < N; ++i) {
      cech::TangentCocycle Pi = cech::poisson_apply(I, cb[static_cast<std::size_t>(i)]);
      for (int j = 0; j < N; ++j) {
        Rational lhs = cech::duality_pair(I, Pi, cb[static_cast<std::size_t>(j)]);
        cech::TangentCocycle Pj = cech::poisson_apply(I, cb[static_cast<std::size_t>(j)]);
        Rational rhs = cech::duality_pair(I, Pj, cb[static_cast<std::size_t>(i)]);
        if (lhs != -rhs) return {false, "Poisson map is not skew-adjoint"};
      }
    }
  }
  return {true, "5 instances: nonsingular 6x6 Gram, skew-adjoint Poisson map, exact"};
}

std::pair<bool, std::string> crit_cubic_consistency() {
  // Reference instance: the residue sum evaluates to 5/9.
  DivisorP1 D4 = divisor_at_zero(4);
  cubic::CameralDataA1 ref(Poly::parse({"4", "0", "-5", "0", "1"}), D4);
  Poly bdot = Poly::monomial(4);
  Poly one(Rational(1));
  if (cubic::cubic_eval(ref, bdot, one, one) != Rational(5, 9))
    return {false, "reference cubic is not 5/9"};

  // Closed form vs series extraction at every rational branch point.
  Poly reparam = Poly::parse({"1", "1"});  // w (1 + w)
  for (const Rational& c : {Rational(1), Rational(-1), Rational(2), Rational(-2)}) {
    Rational closed = cubic::res2_at_branch(ref, bdot, one, one, c);
    Rational viaSeries = cubic::res2_at_branch_series(ref, bdot, one, one, c);
    Rational viaReparam = cubic::res2_at_branch_series(ref, bdot, one, one, c, 8, &reparam);
    if (closed != viaSeries) return {false, "series residue differs from the closed form"};
    if (closed != viaReparam) return {false, "residue moved under coordinate change"};
  }

  // Float mode on an instance with irrational branch points.
  cubic::CameralDataA1 irr(Poly::parse({"-2", "0", "0", "0", "1"}), D4);
  auto roots = periods::complex_roots(irr.b).roots;
  for (const auto& c : roots) {
    Cplx closed = cubic::res2_at_branch(irr, bdot, one, one, c);
    Cplx viaSeries = cubic::res2_at_branch_series(irr, bdot, one, one, c);
    Cplx viaReparam = cubic::res2_at_branch_series(irr, bdot, one, one, c, 8, &reparam);
    if (std::abs(closed - viaSeries) > 1e-12 * std::abs(closed))
      return {false, "float-mode series residue drifted"};
    if (std::abs(closed - viaReparam) > 1e-12 * std::abs(closed))
      return {false, "float-mode residue moved under coordinate change"};
  }

  // Sym^3 on random d = 5, 6 instances, exact.
  std::mt19937 rng(777u);
  for (int d = 5; d <= 6; ++d) {
    DivisorP1 D = divisor_at_zero(d);
    for (int inst = 0; inst < 2; ++inst) {
      Poly b;
      for (int tries = 0;; ++tries) {
        b = rand_poly(rng, 2 * (d - 2) - 1) + Poly::monomial(2 * (d - 2));
        if (genericity_check(b, D).ok) break;
        if (tries > 500) return {false, "could not draw a generic instance"};
      }
      cubic::CameralDataA1 data(b, D);
      cubic::CubicTensor T = cubic::cubic_tensor(data);
      const int g = data.genus;
      for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j)
          for (int k = 0; k < g; ++k) {
            const Rational& v = T.at(i, j, k);
            if (v != T.at(i, k, j) || v != T.at(j, i, k) || v != T.at(j, k, i) ||
                v != T.at(k, i, j) || v != T.at(k, j, i))
              return {false, "cubic tensor not Sym^3"};
          }
    }
  }
  return {true, "closed form == series (exact/1e-12), coordinate-independent, Sym^3, reference 5/9"};
}

std::pair<bool, std::string> crit_period_oracle(const SuiteOptions& opt) {
  // Quartic with modulus k = 1/2: tau = 2 i K(k) / K(k') in the canonical
  // basis attached to lexicographic cut pairing (fundamental-domain form).
  Poly bAGM = Poly::parse({"1", "0", "-5/4", "0", "1/4"});  // (1 - z^2)(1 - z^2/4)
  periods::RiemannMatrix rm = periods::period_matrix(bAGM, opt.periods);
  double K = periods::agm_elliptic_K(0.5);
  double Kp = periods::agm_elliptic_K(std::sqrt(3.0) / 2.0);
  Cplx expected(0.0, 2.0 * K / Kp);
  Cplx got = rm.tauReduced[0][0];
  if (std::abs(got - expected) > 1e-8 * std::abs(expected))
    return {false, "AGM elliptic instance off by " + fmt(std::abs(got - expected) / std::abs(expected))};

  // Square lattice from z -> iz symmetry.
  periods::RiemannMatrix rmI = periods::period_matrix(Poly::parse({"-1", "0", "0", "0", "1"}), opt.periods);
  if (std::abs(rmI.tauReduced[0][0] - Cplx(0.0, 1.0)) > 1e-6)
    return {false, "z^4 - 1 did not land on the square lattice"};

  // Genus-2 sanity: symmetric tau, positive-definite imaginary part.
  Poly b6 = Poly::parse({"-36", "0", "49", "0", "-14", "0", "1"});  // (z^2-1)(z^2-4)(z^2-9)
  periods::RiemannMatrix rm2 = periods::period_matrix(b6, opt.periods);
  if (rm2.symmetryResidual > 1e-8) return {false, "genus-2 tau asymmetry " + fmt(rm2.symmetryResidual)};
  if (!rm2.imPositiveDefinite) return {false, "genus-2 Im tau not positive definite"};
  if (!rm.imPositiveDefinite || !rmI.imPositiveDefinite) return {false, "Im tau not positive"};
  return {true, "AGM match 1e-8, square lattice 1e-6, genus-2 symmetry/positivity"};
}

std::pair<bool, std::string> crit_theorem_a(const SuiteOptions& opt) {
  DivisorP1 D4 = divisor_at_zero(4);
  DivisorP1 D5 = divisor_at_zero(5);
  std::vector<cubic::CameralDataA1> instances;
  instances.emplace_back(Poly::parse({"4", "0", "-5", "0", "1"}), D4);
  instances.emplace_back(Poly::parse({"9", "0", "-10", "0", "1"}), D4);
  instances.emplace_back(Poly::parse({"36", "0", "-13", "0", "1"}), D4);
  // Asymmetric genus-2 leaf: (z^2-1)(z^2-4)(z^2+z-12), roots +-1, +-2, 3, -4.
  instances.emplace_back(Poly::parse({"-48", "4", "64", "-5", "-17", "1", "1"}), D5);
  periods::CalibrationReport rep =
      periods::calibrate_and_compare(instances, opt.periods, opt.fdStep, opt.ratioTol);
  if (!rep.pass)
    return {false, "ratio spread " + fmt(rep.maxPairwiseRel) + " exceeds " + fmt(rep.ratioTol)};
  for (const auto& ic : rep.instances)
    if (ic.genus > 1 && ic.fdSymmetryResidual > opt.fdSymTol)
      return {false, "FD tensor asymmetry " + fmt(ic.fdSymmetryResidual)};
  std::ostringstream os;
  os << "universal constant " << rep.constant.real() << (rep.constant.imag() < 0 ? " - " : " + ")
     << std::abs(rep.constant.imag()) << "i, spread " << fmt(rep.maxPairwiseRel);
  return {true, os.str()};
}

}  // namespace

std::vector<CriterionResult> run_suite(const SuiteOptions& opt) {
  std::vector<CriterionResult> out;
  out.push_back(timed(1, "dimension identity of the deformation complex", crit_dimension_identity));
  out.push_back(timed(2, "cameral genus equals leaf dimension", crit_lagrangian_dimension));
  out.push_back(timed(3, "jet schemes", crit_jets));
  out.push_back(timed(4, "duality pairing and Poisson skewness", crit_duality_poisson));
  out.push_back(timed(5, "cubic internal consistency", crit_cubic_consistency));
  out.push_back(timed(6, "period oracle", [&] { return crit_period_oracle(opt); }));
  out.push_back(timed(7, "period derivative matches the cubic", [&] { return crit_theorem_a(opt); }));
  return out;
}

}  // namespace hitchin::verify
