#pragma once

#include "hitchin/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace hitchin {

// Sparse multivariate polynomial over Q. Exponent vectors are indexed by a
// fixed, ordered variable list held by the caller; no zero coefficients are
// stored.
class MultiPoly {
 public:
  using Exponents = std::vector<int>;

  MultiPoly() = default;
  explicit MultiPoly(int nvars) : nvars_(nvars) {}
  static MultiPoly constant(int nvars, const Rational& c);
  static MultiPoly variable(int nvars, int index);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  int total_degree() const;  // -1 for the zero polynomial

  void add_term(const Exponents& e, const Rational& c);

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const Rational& s, MultiPoly p);
  bool operator==(const MultiPoly&) const = default;

  MultiPoly pow(int e) const;

  // Re-embed into a polynomial ring with new_nvars variables; var_map[i] is
  // the new index of old variable i.
  MultiPoly remap(int new_nvars, const std::vector<int>& var_map) const;

  // Canonical human-readable form (terms in the map's deterministic order).
  std::string to_string(const std::vector<std::string>& names) const;

 private:
  int nvars_ = 0;
  std::map<Exponents, Rational> terms_;
};

}  // namespace hitchin
