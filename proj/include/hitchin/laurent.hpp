#pragma once

#include "hitchin/poly.hpp"
#include "hitchin/rational.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace hitchin {

// Finite two-sided Laurent polynomial over Q (exact; no truncation semantics).
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(const Poly& p);
  static LaurentPoly monomial(int k, const Rational& c = 1);

  bool is_zero() const { return c_.empty(); }
  int min_exp() const;  // lowest exponent with nonzero coefficient; throws on zero
  int max_exp() const;
  Rational coeff(int k) const;
  Rational residue() const { return coeff(-1); }

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const Rational& s, LaurentPoly p);
  bool operator==(const LaurentPoly&) const = default;

  LaurentPoly part_at_least(int k) const;  // keep exponents >= k
  LaurentPoly part_at_most(int k) const;   // keep exponents <= k
  bool supported_in(int lo, int hi) const;
  Poly nonnegative_part() const;

 private:
  void normalize();
  int min_ = 0;
  std::vector<Rational> c_;  // c_[i] = coefficient of z^{min_ + i}
};

namespace detail {

template <class T>
struct SeriesScalar;

template <>
struct SeriesScalar<Rational> {
  static bool is_zero(const Rational& x) { return x == 0; }
  static Rational sqrt(const Rational& x) {
    auto r = rational_sqrt(x);
    if (!r) throw std::domain_error("series_sqrt: leading coefficient has no rational square root");
    return *r;
  }
  static Rational from_rational(const Rational& x) { return x; }
};

template <>
struct SeriesScalar<Cplx> {
  static bool is_zero(const Cplx& x) { return x == Cplx(0.0, 0.0); }
  static Cplx sqrt(const Cplx& x) { return std::sqrt(x); }
  static Cplx from_rational(const Rational& x) { return Cplx(rational_to_double(x), 0.0); }
};

}  // namespace detail

// Truncated Laurent series: coefficients of w^k are stored for
// min_exp <= k <= trunc_order, are exactly zero below min_exp, and are
// unknown above trunc_order. Truncation orders are explicit data; arithmetic
// never reports coefficients it cannot certify.
template <class T>
class LaurentSeries {
 public:
  LaurentSeries(int min_exp, int trunc_order, std::vector<T> coeffs)
      : min_(min_exp), trunc_(trunc_order), c_(std::move(coeffs)) {
    if (trunc_ < min_ - 1) throw std::invalid_argument("truncation order below minimum exponent");
    c_.resize(static_cast<std::size_t>(trunc_ - min_ + 1), T(0));
  }

  static LaurentSeries zero(int trunc_order) { return LaurentSeries(0, trunc_order, {}); }

  static LaurentSeries from_poly(const Poly& p, int trunc_order) {
    std::vector<T> v;
    for (const auto& r : p.coeffs()) v.push_back(detail::SeriesScalar<T>::from_rational(r));
    v.resize(std::max<std::size_t>(v.size(), 0));
    if (static_cast<int>(v.size()) - 1 > trunc_order) v.resize(trunc_order + 1);
    return LaurentSeries(0, trunc_order, std::move(v));
  }

  static LaurentSeries identity(int trunc_order) {  // the series w
    return LaurentSeries(1, trunc_order, {T(1)});
  }

  int min_exp() const { return min_; }
  int trunc_order() const { return trunc_; }

  T coeff(int k) const {
    if (k > trunc_) throw std::domain_error("laurent_coeff: insufficient precision");
    if (k < min_) return T(0);
    return c_[static_cast<std::size_t>(k - min_)];
  }

  // Lowest exponent with a nonzero stored coefficient; trunc_order + 1 when
  // every stored coefficient vanishes.
  int valuation() const {
    for (int k = min_; k <= trunc_; ++k)
      if (!detail::SeriesScalar<T>::is_zero(c_[static_cast<std::size_t>(k - min_)])) return k;
    return trunc_ + 1;
  }

  LaurentSeries operator-() const {
    LaurentSeries r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
    int trunc = std::min(a.trunc_, b.trunc_);
    int lo = std::min(a.min_, b.min_);
    std::vector<T> v(static_cast<std::size_t>(trunc - lo + 1), T(0));
    for (int k = lo; k <= trunc; ++k) {
      T s = (k >= a.min_ && k <= a.trunc_ ? a.c_[static_cast<std::size_t>(k - a.min_)] : T(0));
      if (k >= b.min_ && k <= b.trunc_) s += b.c_[static_cast<std::size_t>(k - b.min_)];
      v[static_cast<std::size_t>(k - lo)] = s;
    }
    return LaurentSeries(lo, trunc, std::move(v));
  }

  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    int va = a.valuation(), vb = b.valuation();
    int trunc = std::min(a.trunc_ + vb, b.trunc_ + va);
    int lo = va + vb;
    if (trunc < lo) return LaurentSeries(lo, trunc, {});
    std::vector<T> v(static_cast<std::size_t>(trunc - lo + 1), T(0));
    for (int i = va; i <= a.trunc_; ++i) {
      const T& ai = a.c_[static_cast<std::size_t>(i - a.min_)];
      if (detail::SeriesScalar<T>::is_zero(ai)) continue;
      for (int j = vb; j <= b.trunc_ && i + j <= trunc; ++j)
        v[static_cast<std::size_t>(i + j - lo)] += ai * b.c_[static_cast<std::size_t>(j - b.min_)];
    }
    return LaurentSeries(lo, trunc, std::move(v));
  }

  friend LaurentSeries operator*(const T& s, LaurentSeries p) {
    for (auto& x : p.c_) x = s * x;
    return p;
  }

  LaurentSeries shifted(int k) const {  // multiply by w^k
    return LaurentSeries(min_ + k, trunc_ + k, c_);
  }

  LaurentSeries truncated(int trunc) const {
    if (trunc >= trunc_) return *this;
    std::vector<T> v(c_.begin(), c_.begin() + std::max(0, trunc - min_ + 1));
    return LaurentSeries(min_, trunc, std::move(v));
  }

  LaurentSeries derivative() const {
    std::vector<T> v;
    for (int k = min_; k <= trunc_; ++k)
      v.push_back(T(k) * c_[static_cast<std::size_t>(k - min_)]);
    return LaurentSeries(min_ - 1, trunc_ - 1, std::move(v));
  }

  // Multiplicative inverse; the valuation term must be nonzero.
  LaurentSeries inverse() const {
    int v = valuation();
    if (v > trunc_) throw std::domain_error("series inverse of (truncation-level) zero");
    int rel = trunc_ - v;  // relative precision
    const T lead = c_[static_cast<std::size_t>(v - min_)];
    std::vector<T> u(static_cast<std::size_t>(rel + 1), T(0));  // unit part, u[0] = 1-ish
    for (int i = 0; i <= rel; ++i) u[static_cast<std::size_t>(i)] = coeff(v + i);
    std::vector<T> b(static_cast<std::size_t>(rel + 1), T(0));
    b[0] = T(1) / lead;
    for (int n = 1; n <= rel; ++n) {
      T acc(0);
      for (int k = 1; k <= n; ++k) acc += u[static_cast<std::size_t>(k)] * b[static_cast<std::size_t>(n - k)];
      b[static_cast<std::size_t>(n)] = -acc / lead;
    }
    return LaurentSeries(-v, -v + rel, std::move(b));
  }

  // Square root; requires even valuation ("not a perfect square locally"
  // otherwise) and a leading coefficient with a computable square root.
  LaurentSeries sqrt() const {
    int v = valuation();
    if (v > trunc_) throw std::domain_error("series_sqrt of (truncation-level) zero");
    if (v % 2 != 0) throw std::domain_error("series_sqrt: not a perfect square locally");
    int rel = trunc_ - v;
    const T s0 = detail::SeriesScalar<T>::sqrt(c_[static_cast<std::size_t>(v - min_)]);
    std::vector<T> r(static_cast<std::size_t>(rel + 1), T(0));
    r[0] = s0;
    for (int n = 1; n <= rel; ++n) {
      T acc = coeff(v + n);
      for (int k = 1; k < n; ++k) acc -= r[static_cast<std::size_t>(k)] * r[static_cast<std::size_t>(n - k)];
      r[static_cast<std::size_t>(n)] = acc / (T(2) * s0);
    }
    return LaurentSeries(v / 2, v / 2 + rel, std::move(r));
  }

  // this(inner); requires valuation(inner) >= 1. Negative powers of the
  // argument go through inverse(). Truncation bookkeeping is inherited from
  // the arithmetic operators, with the outer series' own truncation entering
  // as the unknown tail f_{T+1} * inner^{T+1}.
  LaurentSeries compose(const LaurentSeries& inner) const {
    int v = inner.valuation();
    if (v < 1) throw std::domain_error("series composition needs valuation >= 1");
    const int budget = (trunc_ + 1) * v - 1;  // tail of the outer series
    LaurentSeries acc = LaurentSeries::zero(budget);
    for (int k = std::max(0, trunc_); k >= std::max(0, min_); --k) {
      acc = acc * inner;
      T ck = coeff(k);
      if (!detail::SeriesScalar<T>::is_zero(ck)) acc = acc + constant(ck, budget);
    }
    if (min_ < 0) {
      LaurentSeries inv = inner.inverse();
      LaurentSeries p = inv;
      for (int k = -1; k >= min_; --k) {
        T ck = coeff(k);
        if (!detail::SeriesScalar<T>::is_zero(ck)) acc = acc + ck * p;
        if (k > min_) p = p * inv;
      }
    }
    return acc.truncated(std::min(budget, acc.trunc_order()));
  }

  static LaurentSeries constant(const T& x, int trunc) { return LaurentSeries(0, trunc, {x}); }

  // Functional inverse of f (valuation exactly 1): g with f(g(w)) = w.
  static LaurentSeries reversion(const LaurentSeries& f) {
    if (f.valuation() != 1) throw std::domain_error("series reversion needs valuation 1");
    int trunc = f.trunc_order();
    const T f1 = f.coeff(1);
    LaurentSeries g(1, trunc, {T(1) / f1});
    for (int it = 0; it < trunc; ++it) {
      LaurentSeries err = f.compose(g) - identity(trunc);
      LaurentSeries corr = (T(1) / f1) * err;
      g = (g - corr).truncated(trunc);
    }
    return g;
  }

 private:
  int min_;
  int trunc_;
  std::vector<T> c_;
};

using QSeries = LaurentSeries<Rational>;
using CSeries = LaurentSeries<Cplx>;

// Horner evaluation of an exact polynomial at a series argument (val >= 0);
// the result's truncation comes from the argument alone.
template <class T>
LaurentSeries<T> eval_poly_at_series(const Poly& f, const LaurentSeries<T>& x) {
  const int cap = x.trunc_order() + (f.is_zero() ? 1 : f.degree() + 1) * std::max(1, x.valuation());
  LaurentSeries<T> acc = LaurentSeries<T>::zero(cap);
  for (int k = std::max(0, f.degree()); k >= 0; --k) {
    acc = acc * x;
    Rational ck = f.coeff(k);
    if (ck != 0) acc = acc + LaurentSeries<T>::constant(detail::SeriesScalar<T>::from_rational(ck), cap);
  }
  return acc;
}

}  // namespace hitchin
