#include "hitchin/cubic.hpp"

#include "hitchin/periods.hpp"

#include <stdexcept>

namespace hitchin::cubic {

CameralDataA1::CameralDataA1(Poly b_, DivisorP1 D_)
    : b(std::move(b_)), D(std::move(D_)), delta(D.delta()), m(D.degree() - 2), genus(m - 1) {
  BranchReport rep = genericity_check(b, D);
  if (!rep.ok) throw std::domain_error("cameral data not generic: " + rep.reason);
  if (poly_gcd(b, delta).degree() != 0)
    throw std::domain_error("cameral data not generic: branch point meets divisor");
}

HolomorphicForm tangent_to_form(const Poly& bdot, const CameralDataA1& data) {
  if (bdot.is_zero()) return HolomorphicForm{Poly()};
  if (bdot.degree() > 2 * data.m) throw std::domain_error("direction degree exceeds 2 deg K(D)");
  auto q = exact_div(bdot, Rational(2) * data.delta);
  if (!q) throw std::domain_error("direction not tangent to leaf");
  return HolomorphicForm{*q};
}

LeafTangent leaf_tangent(const Poly& bdot, const CameralDataA1& data) {
  return LeafTangent{bdot, tangent_to_form(bdot, data)};
}

namespace {

template <class T>
T closed_form_res2(const CameralDataA1& data, const Poly& bdot, const Poly& u, const Poly& v,
                   const T& bc, const T& dbc, const T& f_bdot, const T& f_u, const T& f_v);

template <>
Rational closed_form_res2(const CameralDataA1&, const Poly&, const Poly&, const Poly&,
                          const Rational& bc, const Rational& dbc, const Rational& f_bdot,
                          const Rational& f_u, const Rational& f_v) {
  if (bc != 0) throw std::domain_error("res2: not a branch point");
  if (dbc == 0) throw std::domain_error("res2: non-simple branch point");
  return Rational(4) * f_bdot * f_u * f_v / (dbc * dbc);
}

template <>
Cplx closed_form_res2(const CameralDataA1& data, const Poly&, const Poly&, const Poly&,
                      const Cplx& bc, const Cplx& dbc, const Cplx& f_bdot, const Cplx& f_u,
                      const Cplx& f_v) {
  double scale = 0.0;
  for (const auto& c : data.b.coeffs()) scale = std::max(scale, std::abs(rational_to_double(c)));
  if (std::abs(bc) > 1e-8 * std::max(1.0, scale)) throw std::domain_error("res2: not a branch point");
  if (dbc == Cplx(0.0, 0.0)) throw std::domain_error("res2: non-simple branch point");
  return 4.0 * f_bdot * f_u * f_v / (dbc * dbc);
}

long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Series of p(c + x) in x, coefficients computed in T.
template <class T>
LaurentSeries<T> shifted_poly_series(const Poly& p, const T& c, int trunc) {
  const int deg = p.is_zero() ? 0 : p.degree();
  std::vector<T> a(static_cast<std::size_t>(deg + 1), T(0));
  for (int k = 0; k <= deg; ++k)
    a[static_cast<std::size_t>(k)] = hitchin::detail::SeriesScalar<T>::from_rational(p.coeff(k));
  std::vector<T> b(static_cast<std::size_t>(deg + 1), T(0));
  for (int j = 0; j <= deg; ++j) {
    T acc(0);
    for (int k = deg; k >= j; --k) acc = acc * c + a[static_cast<std::size_t>(k)] * T(binom(k, j));
    b[static_cast<std::size_t>(j)] = acc;
  }
  return LaurentSeries<T>(0, trunc, std::move(b));
}

template <class T>
T series_res2(const CameralDataA1& data, const Poly& bdot, const Poly& u, const Poly& v, const T& c,
              int order, const Poly* reparam) {
  const int trunc = std::max(order, 6);
  // B(x) = b(c + x) = b'(c) x (1 + ...): solve B(x(w)) = w^2 by Newton.
  LaurentSeries<T> B = shifted_poly_series(data.b, c, trunc + 2);
  if (!hitchin::detail::SeriesScalar<T>::is_zero(B.coeff(0)))
    throw std::domain_error("res2: not a branch point");
  if (hitchin::detail::SeriesScalar<T>::is_zero(B.coeff(1)))
    throw std::domain_error("res2: non-simple branch point");
  LaurentSeries<T> w2 = LaurentSeries<T>::identity(trunc) * LaurentSeries<T>::identity(trunc);
  LaurentSeries<T> x(2, trunc, {T(1) / B.coeff(1)});  // first approximation w^2 / B'(0)
  LaurentSeries<T> Bd = B.derivative();
  for (int it = 0; it < trunc + 2; ++it) {
    LaurentSeries<T> err = B.compose(x) - w2;
    if (err.valuation() > trunc) break;
    x = (x - err * Bd.compose(x).inverse()).truncated(trunc);
  }
  // z(w) = c + x(w); the differential is N(z) dz^2 / b^2 with b(z(w)) = w^2.
  LaurentSeries<T> dz = x.derivative();
  auto eval_shifted = [&](const Poly& p) { return shifted_poly_series(p, c, trunc + 2).compose(x); };
  LaurentSeries<T> N = eval_shifted(bdot) * eval_shifted(u) * eval_shifted(v);
  LaurentSeries<T> Q = (N * dz * dz).shifted(-4);  // divide by b(z(w))^2 = w^4
  if (reparam != nullptr) {
    // New coordinate s with s = w * reparam(w) (a unit); re-expand via the
    // inverse w = g(s) and the chain rule for quadratic differentials.
    LaurentSeries<T> r = LaurentSeries<T>::from_poly(*reparam, trunc);
    if (hitchin::detail::SeriesScalar<T>::is_zero(r.coeff(0)))
      throw std::domain_error("reparametrisation must be a unit");
    LaurentSeries<T> f = (LaurentSeries<T>::identity(trunc + 1) * r).truncated(trunc + 1);
    LaurentSeries<T> g = LaurentSeries<T>::reversion(f);
    LaurentSeries<T> dg = g.derivative();
    Q = Q.compose(g) * dg * dg;
  }
  return Q.coeff(-2);
}

}  // namespace

Rational res2_at_branch(const CameralDataA1& data, const Poly& bdot, const Poly& u, const Poly& v,
                        const Rational& c) {
  return closed_form_res2<Rational>(data, bdot, u, v, data.b(c), data.b.derivative()(c), bdot(c),
                                    u(c), v(c));
}

Cplx res2_at_branch(const CameralDataA1& data, const Poly& bdot, const Poly& u, const Poly& v,
                    const Cplx& c) {
  return closed_form_res2<Cplx>(data, bdot, u, v, data.b.eval(c), data.b.derivative().eval(c),
                                bdot.eval(c), u.eval(c), v.eval(c));
}

Rational res2_at_branch_series(const CameralDataA1& data, const Poly& bdot, const Poly& u,
                               const Poly& v, const Rational& c, int order, const Poly* reparam) {
  return series_res2<Rational>(data, bdot, u, v, c, order, reparam);
}

Cplx res2_at_branch_series(const CameralDataA1& data, const Poly& bdot, const Poly& u, const Poly& v,
                           const Cplx& c, int order, const Poly* reparam) {
  return series_res2<Cplx>(data, bdot, u, v, c, order, reparam);
}

Rational cubic_eval(const CameralDataA1& data, const Poly& bdot, const Poly& u, const Poly& v) {
  if (bdot.is_zero() || u.is_zero() || v.is_zero()) return Rational(0);
  Poly db = data.b.derivative();
  return Rational(2) * sum_over_roots(bdot * u * v, db * db, data.b);
}

Cplx cubic_eval_numeric(const CameralDataA1& data, const Poly& bdot, const Poly& u, const Poly& v,
                        double rootTol) {
  auto roots = periods::complex_roots(data.b, rootTol).roots;
  Cplx acc(0.0, 0.0);
  Poly db = data.b.derivative();
  for (const auto& c : roots) {
    Cplx d = db.eval(c);
    acc += bdot.eval(c) * u.eval(c) * v.eval(c) / (d * d);
  }
  return 2.0 * acc;
}

const Rational& CubicTensor::at(int i, int j, int k) const {
  return entries[static_cast<std::size_t>((i * genus + j) * genus + k)];
}

CubicTensor cubic_tensor(const CameralDataA1& data) {
  CubicTensor t;
  t.genus = data.genus;
  if (data.genus <= 0) return t;
  t.entries.reserve(static_cast<std::size_t>(data.genus) * data.genus * data.genus);
  for (int i = 0; i < data.genus; ++i) {
    Poly bdot = Rational(2) * (Poly::monomial(i) * data.delta);
    for (int j = 0; j < data.genus; ++j)
      for (int k = 0; k < data.genus; ++k)
        t.entries.push_back(cubic_eval(data, bdot, Poly::monomial(j), Poly::monomial(k)));
  }
  return t;
}

}  // namespace hitchin::cubic
