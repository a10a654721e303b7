#pragma once

#include "hitchin/rational.hpp"

#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hitchin {

// Dense univariate polynomial over Q; coefficient k belongs to z^k.
// The zero polynomial is the empty list; its degree is the kZeroDegree
// sentinel, kept distinct from 0 so gcd/degree logic never conflates the two.
class Poly {
 public:
  static constexpr int kZeroDegree = std::numeric_limits<int>::min();

  Poly() = default;
  Poly(const Rational& constant);
  Poly(int constant) : Poly(Rational(constant)) {}
  explicit Poly(std::vector<Rational> coeffs);

  static Poly monomial(int degree, const Rational& c = 1);
  // Coefficient strings "p/q", index = degree.
  static Poly parse(const std::vector<std::string>& coeffs);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return c_.empty() ? kZeroDegree : static_cast<int>(c_.size()) - 1; }
  Rational coeff(int k) const;
  const Rational& lc() const;  // leading coefficient; throws on the zero polynomial
  const std::vector<Rational>& coeffs() const { return c_; }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& s, Poly p);
  bool operator==(const Poly&) const = default;

  Rational operator()(const Rational& x) const;
  Cplx eval(const Cplx& x) const;

  Poly derivative() const;
  Poly monic() const;  // throws on the zero polynomial
  // Euclidean division, divisor nonzero: returns (quotient, remainder).
  std::pair<Poly, Poly> divrem(const Poly& d) const;

 private:
  void normalize();
  std::vector<Rational> c_;
};

// Monic gcd; gcd(a, 0) = monic(a), gcd(0, 0) = 0.
Poly poly_gcd(const Poly& a, const Poly& b);

// Quotient a/b when the division is exact, nullopt otherwise.
std::optional<Poly> exact_div(const Poly& a, const Poly& b);

Poly pow(const Poly& base, int e);

// f(z + c)
Poly taylor_shift(const Poly& f, const Rational& c);

// Sylvester resultant (fraction-free elimination).
Rational resultant(const Poly& a, const Poly& b);

// (-1)^{n(n-1)/2} resultant(f, f') / lc(f); requires deg f >= 1.
Rational discriminant(const Poly& f);

bool is_squarefree(const Poly& f);

// Extended Euclid: returns (g, u, v) with u*a + v*b = g, g monic (or 0).
std::tuple<Poly, Poly, Poly> poly_egcd(const Poly& a, const Poly& b);

// Inverse of a modulo f; requires gcd(a, f) = 1 and deg f >= 1.
Poly poly_inverse_mod(const Poly& a, const Poly& f);

// Power sums p_0..p_upto of the roots of f (with multiplicity), via Newton's
// identities on the monic normalisation. Requires deg f >= 1.
std::vector<Rational> power_sums(const Poly& f, int upto);

// Sum over the roots c of f (squarefree, gcd(denom, f) = 1) of
// numer(c)/denom(c), evaluated exactly without root extraction.
Rational sum_over_roots(const Poly& numer, const Poly& denom, const Poly& f);

std::string to_string(const Poly& f, const std::string& var = "z");

}  // namespace hitchin
