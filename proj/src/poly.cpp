#include "hitchin/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace hitchin {

Poly::Poly(const Rational& constant) {
  if (constant != 0) c_.push_back(constant);
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

Poly Poly::monomial(int degree, const Rational& c) {
  if (degree < 0) throw std::invalid_argument("monomial degree must be >= 0");
  if (c == 0) return Poly();
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return Poly(std::move(v));
}

Poly Poly::parse(const std::vector<std::string>& coeffs) {
  std::vector<Rational> v;
  v.reserve(coeffs.size());
  for (const auto& s : coeffs) v.push_back(rational_from_string(s));
  return Poly(std::move(v));
}

void Poly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
  return c_[k];
}

const Rational& Poly::lc() const {
  if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
  return c_.back();
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  normalize();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(v));
}

Poly operator*(const Rational& s, Poly p) {
  if (s == 0) return Poly();
  for (auto& x : p.c_) x *= s;
  return p;
}

Rational Poly::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Cplx Poly::eval(const Cplx& x) const {
  Cplx acc(0.0, 0.0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * x + Cplx(rational_to_double(*it), 0.0);
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rational> v(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) v[k - 1] = Rational(static_cast<int>(k)) * c_[k];
  return Poly(std::move(v));
}

Poly Poly::monic() const {
  if (is_zero()) throw std::domain_error("monic of zero polynomial");
  return (Rational(1) / lc()) * (*this);
}

std::pair<Poly, Poly> Poly::divrem(const Poly& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  Poly r = *this;
  if (r.degree() < d.degree()) return {Poly(), r};
  std::vector<Rational> q(r.degree() - d.degree() + 1, Rational(0));
  while (!r.is_zero() && r.degree() >= d.degree()) {
    int k = r.degree() - d.degree();
    Rational f = r.lc() / d.lc();
    q[k] = f;
    r -= f * (Poly::monomial(k) * d);
  }
  return {Poly(std::move(q)), r};
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x.divrem(y).second;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return Poly();
  return x.monic();
}

std::optional<Poly> exact_div(const Poly& a, const Poly& b) {
  if (b.is_zero()) return std::nullopt;
  auto [q, r] = a.divrem(b);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

Poly pow(const Poly& base, int e) {
  if (e < 0) throw std::invalid_argument("negative polynomial power");
  Poly acc(Rational(1)), b = base;
  while (e > 0) {
    if (e & 1) acc = acc * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return acc;
}

Poly taylor_shift(const Poly& f, const Rational& c) {
  // Horner on f(z) with z -> (z + c).
  Poly acc;
  Poly shift(std::vector<Rational>{c, Rational(1)});
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it)
    acc = acc * shift + Poly(*it);
  return acc;
}

namespace {

// Fraction-free Bareiss determinant over Q.
Rational bareiss_det(std::vector<std::vector<Rational>> m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return Rational(1);
  Rational sign(1), prev(1);
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[i][k] != 0) {
          p = i;
          break;
        }
      if (p < 0) return Rational(0);
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace

Rational resultant(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Rational(0);
  const int da = a.degree(), db = b.degree();
  if (da == 0) {
    Rational r(1);
    for (int i = 0; i < db; ++i) r *= a.coeff(0);
    return r;
  }
  if (db == 0) {
    Rational r(1);
    for (int i = 0; i < da; ++i) r *= b.coeff(0);
    return r;
  }
  const int n = da + db;
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < db; ++i)
    for (int j = 0; j <= da; ++j) m[i][i + j] = a.coeff(da - j);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j <= db; ++j) m[db + i][i + j] = b.coeff(db - j);
  return bareiss_det(std::move(m));
}

Rational discriminant(const Poly& f) {
  if (f.is_zero() || f.degree() < 1) throw std::domain_error("discriminant: degree too small");
  const int n = f.degree();
  Rational r = resultant(f, f.derivative()) / f.lc();
  if (((n * (n - 1)) / 2) % 2 != 0) r = -r;
  return r;
}

bool is_squarefree(const Poly& f) {
  if (f.is_zero()) return false;
  if (f.degree() == 0) return true;
  return poly_gcd(f, f.derivative()).degree() == 0;
}

std::tuple<Poly, Poly, Poly> poly_egcd(const Poly& a, const Poly& b) {
  Poly r0 = a, r1 = b;
  Poly s0(Rational(1)), s1, t0, t1(Rational(1));
  while (!r1.is_zero()) {
    auto [q, r] = r0.divrem(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {Poly(), s0, t0};
  Rational inv = Rational(1) / r0.lc();
  return {inv * r0, inv * s0, inv * t0};
}

Poly poly_inverse_mod(const Poly& a, const Poly& f) {
  if (f.degree() < 1) throw std::domain_error("modulus must have degree >= 1");
  auto [g, u, v] = poly_egcd(a.divrem(f).second, f);
  (void)v;
  if (g.degree() != 0) throw std::domain_error("element not invertible modulo f");
  return u.divrem(f).second;
}

std::vector<Rational> power_sums(const Poly& f, int upto) {
  if (f.degree() < 1) throw std::domain_error("power_sums: degree too small");
  const int n = f.degree();
  Poly g = f.monic();
  // c[i] = coefficient of z^{n-i} in the monic polynomial.
  std::vector<Rational> c(n + 1);
  for (int i = 0; i <= n; ++i) c[i] = g.coeff(n - i);
  std::vector<Rational> p(upto + 1, Rational(0));
  p[0] = Rational(n);
  for (int k = 1; k <= upto; ++k) {
    Rational acc(0);
    if (k <= n) acc = Rational(k) * c[k];
    for (int i = 1; i < k && i <= n; ++i) acc += c[i] * p[k - i];
    p[k] = -acc;
  }
  return p;
}

Rational sum_over_roots(const Poly& numer, const Poly& denom, const Poly& f) {
  if (!is_squarefree(f)) throw std::domain_error("sum_over_roots: polynomial not squarefree");
  Poly s = (numer * poly_inverse_mod(denom, f)).divrem(f).second;
  if (s.is_zero()) return Rational(0);
  auto p = power_sums(f, s.degree());
  Rational acc(0);
  for (int k = 0; k <= s.degree(); ++k) acc += s.coeff(k) * p[k];
  return acc;
}

std::string to_string(const Poly& f, const std::string& var) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = f.degree(); k >= 0; --k) {
    Rational c = f.coeff(k);
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    if (first && c < 0) os << "-";
    Rational ac = abs(c);
    bool unitc = (ac == 1 && k > 0);
    if (!unitc) os << rational_to_string(ac);
    if (k > 0) {
      if (!unitc) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

}  // namespace hitchin
