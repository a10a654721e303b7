#include "hitchin/cech.hpp"

#include <stdexcept>

namespace hitchin::cech {

bool LaurentMat::is_zero() const {
  for (const auto& p : e)
    if (!p.is_zero()) return false;
  return true;
}

bool LaurentMat::supported_in(int lo, int hi) const {
  for (const auto& p : e)
    if (!p.supported_in(lo, hi)) return false;
  return true;
}

LaurentMat LaurentMat::part_at_least(int k) const {
  LaurentMat r(n);
  for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = e[i].part_at_least(k);
  return r;
}

LaurentMat LaurentMat::part_at_most(int k) const {
  LaurentMat r(n);
  for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = e[i].part_at_most(k);
  return r;
}

LaurentMat LaurentMat::operator-() const {
  LaurentMat r(n);
  for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = -e[i];
  return r;
}

LaurentMat operator+(const LaurentMat& a, const LaurentMat& b) {
  if (a.n != b.n) throw std::invalid_argument("matrix size mismatch");
  LaurentMat r(a.n);
  for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = a.e[i] + b.e[i];
  return r;
}

LaurentMat operator-(const LaurentMat& a, const LaurentMat& b) { return a + (-b); }

LaurentMat operator*(const LaurentPoly& s, const LaurentMat& m) {
  LaurentMat r(m.n);
  for (std::size_t i = 0; i < m.e.size(); ++i) r.e[i] = s * m.e[i];
  return r;
}

LaurentPoly LaurentMat::trace_with(const LaurentMat& o) const {
  if (n != o.n) throw std::invalid_argument("matrix size mismatch");
  LaurentPoly t;
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) t += at(i, k) * o.at(k, i);
  return t;
}

LaurentMat commutator(const LaurentMat& a, const LaurentMat& b) {
  if (a.n != b.n) throw std::invalid_argument("matrix size mismatch");
  LaurentMat r(a.n);
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j) {
      LaurentPoly s;
      for (int k = 0; k < a.n; ++k) s += a.at(i, k) * b.at(k, j) - b.at(i, k) * a.at(k, j);
      r.at(i, j) = std::move(s);
    }
  return r;
}

LaurentMat to_laurent(const TracelessMatrix& m) {
  LaurentMat r(m.size());
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j) r.at(i, j) = LaurentPoly(m.at(i, j));
  return r;
}

namespace {

// Basis of sl_n: the off-diagonal units E_{ij}, then H_i = E_{ii} - E_{i+1,i+1}.
struct GBasis {
  int n;
  int dim;  // n^2 - 1
  explicit GBasis(int n_) : n(n_), dim(n_ * n_ - 1) {}

  // Coordinates of a traceless LaurentMat entrywise: off-diagonal entries map
  // to themselves, the diagonal maps to partial sums in the H_i coordinates.
  std::vector<LaurentPoly> coords(const LaurentMat& m) const {
    std::vector<LaurentPoly> v;
    v.reserve(static_cast<std::size_t>(dim));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) v.push_back(m.at(i, j));
    LaurentPoly partial;
    for (int i = 0; i < n - 1; ++i) {
      partial += m.at(i, i);
      v.push_back(partial);
    }
    return v;
  }

  // Inverse of coords for a single basis index: the constant matrix.
  LaurentMat element(int idx) const {
    LaurentMat m(n);
    int count = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) {
          if (count == idx) {
            m.at(i, j) = LaurentPoly::monomial(0);
            return m;
          }
          ++count;
        }
    int i = idx - count;  // H_i
    m.at(i, i) = LaurentPoly::monomial(0);
    m.at(i + 1, i + 1) = LaurentPoly::monomial(0, Rational(-1));
    return m;
  }
};

// Flat coordinates of a polynomial-valued g element in g (x) P_m:
// index = basisIdx * (m + 1) + degree.
std::vector<Rational> flat_coords(const GBasis& g, const LaurentMat& m, int deg) {
  std::vector<LaurentPoly> gc = g.coords(m);
  std::vector<Rational> v(static_cast<std::size_t>(g.dim) * (deg + 1), Rational(0));
  for (int a = 0; a < g.dim; ++a)
    for (int k = 0; k <= deg; ++k)
      v[static_cast<std::size_t>(a) * (deg + 1) + k] = gc[static_cast<std::size_t>(a)].coeff(k);
  return v;
}

void check_traceless(const LaurentMat& m, const char* what) {
  LaurentPoly tr;
  for (int i = 0; i < m.n; ++i) tr += m.at(i, i);
  if (!tr.is_zero()) throw std::domain_error(std::string(what) + ": values are not traceless");
}

// Matrix of ad theta : g -> g (x) P_m in flat coordinates (columns indexed by
// the g basis).
QMatrix ad_matrix(const GBasis& g, const LaurentMat& theta, int m) {
  QMatrix A(g.dim * (m + 1), g.dim);
  for (int a = 0; a < g.dim; ++a) {
    auto col = flat_coords(g, commutator(theta, g.element(a)), m);
    for (int r = 0; r < A.rows; ++r) A.at(r, a) = col[static_cast<std::size_t>(r)];
  }
  return A;
}

// Row-reduced image data of ad theta, used both for complement bases of the
// cokernel and for reducing vectors modulo the image.
struct CokerData {
  QMatrix rref;             // rref of the transposed image matrix
  std::vector<int> pivots;  // pivot columns
  std::vector<int> complement;

  std::vector<Rational> reduce(std::vector<Rational> v) const {
    for (std::size_t k = 0; k < pivots.size(); ++k) {
      Rational c = v[static_cast<std::size_t>(pivots[k])];
      if (c == 0) continue;
      for (int j = 0; j < rref.cols; ++j) v[static_cast<std::size_t>(j)] -= c * rref.at(static_cast<int>(k), j);
    }
    return v;
  }
};

CokerData coker_data(const GBasis& g, const LaurentMat& theta, int m) {
  QMatrix A = ad_matrix(g, theta, m);
  QMatrix T(A.cols, A.rows);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) T.at(j, i) = A.at(i, j);
  CokerData ck;
  ck.pivots = q_rref(T);
  T.rows = static_cast<int>(ck.pivots.size());  // keep the nonzero rows only
  T.a.resize(static_cast<std::size_t>(T.rows) * T.cols);
  ck.rref = std::move(T);
  std::vector<bool> is_pivot(static_cast<std::size_t>(ck.rref.cols), false);
  for (int p : ck.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  for (int j = 0; j < ck.rref.cols; ++j)
    if (!is_pivot[static_cast<std::size_t>(j)]) ck.complement.push_back(j);
  return ck;
}

void check_theta(const TracelessMatrix& theta, int m) {
  if (m < 0) throw std::domain_error("deg K(D) must be >= 0 in the chart model");
  if (theta.max_entry_degree() > m) throw std::domain_error("theta entry degree exceeds deg K(D)");
}

}  // namespace

Instance::Instance(TracelessMatrix theta_, const DivisorP1& D)
    : theta(std::move(theta_)), m(D.degree() - 2), d(D.degree()), delta(D.delta()) {
  check_theta(theta, m);
}

Instance::Instance(TracelessMatrix theta_, int m_, int d_, Poly delta_)
    : theta(std::move(theta_)), m(m_), d(d_), delta(std::move(delta_)) {
  if (d != m + 2) throw std::invalid_argument("twist degrees must satisfy d = m + 2");
  if (delta.is_zero() || delta.degree() != d)
    throw std::invalid_argument("divisor polynomial degree mismatch");
  check_theta(theta, m);
}

std::pair<int, int> line_cohomology(int k) {
  return {std::max(k + 1, 0), std::max(-k - 1, 0)};
}

HyperCohomologyReport hyper_dims(const TracelessMatrix& theta, int m) {
  check_theta(theta, m);
  GBasis g(theta.size());
  const int rank = q_rank(ad_matrix(g, to_laurent(theta), m));
  HyperCohomologyReport rep;
  rep.dimG = g.dim;
  rep.m = m;
  rep.h0 = g.dim - rank;
  rep.h1 = g.dim * (m + 1) - rank;  // coker only: H^1 of the trivial bundle vanishes
  rep.h2 = 0;                       // H^1(O(m)) = 0 for m >= 0
  rep.eulerNeg = rep.h1 - rep.h0 - rep.h2;
  rep.identityOk = (rep.eulerNeg == g.dim * m);
  return rep;
}

HyperCohomologyReport hyper_dims(const HiggsFieldP1& phi) { return hyper_dims(phi.theta, phi.m()); }

void validate_tangent(const Instance& I, const TangentCocycle& a) {
  if (a.s01.n != I.n() || a.t0.n != I.n() || a.t1.n != I.n())
    throw std::domain_error("tangent cocycle: size mismatch");
  check_traceless(a.s01, "tangent cocycle");
  check_traceless(a.t0, "tangent cocycle");
  check_traceless(a.t1, "tangent cocycle");
  if (!a.t0.supported_in(0, std::numeric_limits<int>::max() / 2))
    throw std::domain_error("tangent cocycle: t0 not regular on chart 0");
  if (!a.t1.supported_in(std::numeric_limits<int>::min() / 2, I.m))
    throw std::domain_error("tangent cocycle: t1 not regular at infinity");
  LaurentMat lhs = commutator(to_laurent(I.theta), a.s01);
  if (!(lhs == a.t1 - a.t0)) throw std::domain_error("tangent cocycle condition violated");
}

void validate_cotangent(const Instance& I, const CotangentCocycle& b) {
  if (b.sigma01.n != I.n() || b.tau0.n != I.n() || b.tau1.n != I.n())
    throw std::domain_error("cotangent cocycle: size mismatch");
  check_traceless(b.sigma01, "cotangent cocycle");
  check_traceless(b.tau0, "cotangent cocycle");
  check_traceless(b.tau1, "cotangent cocycle");
  if (!b.tau0.supported_in(0, std::numeric_limits<int>::max() / 2))
    throw std::domain_error("cotangent cocycle: tau0 not regular on chart 0");
  if (!b.tau1.supported_in(std::numeric_limits<int>::min() / 2, -2))
    throw std::domain_error("cotangent cocycle: tau1 not regular at infinity");
  LaurentMat lhs = commutator(to_laurent(I.theta), b.sigma01);
  if (!(lhs == b.tau1 - b.tau0)) throw std::domain_error("cotangent cocycle condition violated");
}

Rational duality_pair(const Instance& I, const TangentCocycle& a, const CotangentCocycle& b) {
  validate_tangent(I, a);
  validate_cotangent(I, b);
  LaurentPoly c01 = a.t0.trace_with(b.sigma01) - a.s01.trace_with(b.tau1);
  return c01.residue();
}

TangentCocycle poisson_apply(const Instance& I, const CotangentCocycle& b) {
  validate_cotangent(I, b);
  LaurentPoly delta(I.delta);
  TangentCocycle a{delta * b.sigma01, delta * b.tau0, delta * b.tau1};
  validate_tangent(I, a);
  return a;
}

std::vector<TangentCocycle> tangent_basis(const Instance& I) {
  GBasis g(I.n());
  CokerData ck = coker_data(g, to_laurent(I.theta), I.m);
  std::vector<TangentCocycle> basis;
  for (int idx : ck.complement) {
    const int a = idx / (I.m + 1);
    const int k = idx % (I.m + 1);
    LaurentMat t = LaurentPoly::monomial(k) * g.element(a);
    basis.push_back(TangentCocycle{LaurentMat(I.n()), t, t});
  }
  return basis;
}

std::vector<Rational> tangent_coordinates(const Instance& I, const TangentCocycle& a) {
  validate_tangent(I, a);
  GBasis g(I.n());
  LaurentMat theta = to_laurent(I.theta);
  // Kill the overlap component by a coboundary: s = f1 - f0 with f0 = -(s)_{>=1}
  // regular on chart 0 and f1 = (s)_{<=0} regular at infinity.
  LaurentMat f1 = a.s01.part_at_most(0);
  LaurentMat f0 = -a.s01.part_at_least(1);
  LaurentMat t0 = a.t0 - commutator(theta, f0);
  LaurentMat t1 = a.t1 - commutator(theta, f1);
  if (!(t0 == t1)) throw std::logic_error("normalised tangent cocycle is not a global section");
  if (!t0.supported_in(0, I.m)) throw std::logic_error("normalised section escapes O(m)");
  CokerData ck = coker_data(g, theta, I.m);
  std::vector<Rational> red = ck.reduce(flat_coords(g, t0, I.m));
  std::vector<Rational> out;
  out.reserve(ck.complement.size());
  for (int idx : ck.complement) out.push_back(red[static_cast<std::size_t>(idx)]);
  return out;
}

std::vector<CotangentCocycle> cotangent_basis(const Instance& I) {
  GBasis g(I.n());
  LaurentMat theta = to_laurent(I.theta);
  const int tail = I.d - 1;  // overlap exponents -1 .. -(d-1)
  // Constraint matrix: residue of [theta, sigma] over all candidates.
  QMatrix C(g.dim, g.dim * tail);
  for (int a = 0; a < g.dim; ++a)
    for (int j = 1; j <= tail; ++j) {
      LaurentMat cand = LaurentPoly::monomial(-j) * g.element(a);
      LaurentMat res = commutator(theta, cand);
      std::vector<LaurentPoly> gc = g.coords(res);
      const int col = a * tail + (j - 1);
      for (int r = 0; r < g.dim; ++r) C.at(r, col) = gc[static_cast<std::size_t>(r)].coeff(-1);
    }
  std::vector<CotangentCocycle> basis;
  for (const auto& ker : q_kernel(C)) {
    LaurentMat sigma(I.n());
    for (int a = 0; a < g.dim; ++a)
      for (int j = 1; j <= tail; ++j) {
        const Rational& c = ker[static_cast<std::size_t>(a * tail + (j - 1))];
        if (c == 0) continue;
        sigma = sigma + (LaurentPoly::monomial(-j, c) * g.element(a));
      }
    LaurentMat h = commutator(theta, sigma);
    CotangentCocycle b{sigma, -h.part_at_least(0), h.part_at_most(-2)};
    basis.push_back(std::move(b));
  }
  return basis;
}

QMatrix gram_matrix(const Instance& I) {
  auto tb = tangent_basis(I);
  auto cb = cotangent_basis(I);
  QMatrix G(static_cast<int>(tb.size()), static_cast<int>(cb.size()));
  for (std::size_t i = 0; i < tb.size(); ++i)
    for (std::size_t j = 0; j < cb.size(); ++j)
      G.at(static_cast<int>(i), static_cast<int>(j)) = duality_pair(I, tb[i], cb[j]);
  return G;
}

QMatrix poisson_matrix(const Instance& I) {
  auto tb = tangent_basis(I);
  auto cb = cotangent_basis(I);
  QMatrix P(static_cast<int>(tb.size()), static_cast<int>(cb.size()));
  for (std::size_t j = 0; j < cb.size(); ++j) {
    std::vector<Rational> col = tangent_coordinates(I, poisson_apply(I, cb[j]));
    if (col.size() != tb.size()) throw std::logic_error("tangent coordinate arity mismatch");
    for (std::size_t i = 0; i < tb.size(); ++i) P.at(static_cast<int>(i), static_cast<int>(j)) = col[i];
  }
  return P;
}

}  // namespace hitchin::cech
