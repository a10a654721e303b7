#pragma once

#include "hitchin/poly.hpp"

#include <string>
#include <vector>

namespace hitchin {

// Basic data of a simple Lie type. Two identities pin the table down:
// sum_i (2 d_i - 1) = dim and |R| = dim - rank.
struct SimpleTypeInfo {
  char family;  // 'A'..'G'
  int rank = 0;
  int dim = 0;
  std::vector<int> degrees;  // degrees of basic invariant polynomials
  long long numRoots = 0;
  long long weylOrder = 0;  // = prod of the degrees
};

// Throws std::domain_error on an invalid (family, rank) pair.
// Accepted ranks: A >= 1, B >= 2, C >= 2, D >= 3, E in 6..8, F = 4, G = 2.
SimpleTypeInfo lie_info(char family, int rank);

// Square matrix of polynomials with identically vanishing trace.
class TracelessMatrix {
 public:
  TracelessMatrix(int n, std::vector<Poly> entries);  // row-major, throws "not traceless"
  static TracelessMatrix zero(int n);

  int size() const { return n_; }
  const Poly& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * n_ + j]; }
  int max_entry_degree() const;  // kZeroDegree for the zero matrix

 private:
  int n_;
  std::vector<Poly> e_;
};

// Coefficients p_2, ..., p_n of det(lambda I - M) = lambda^n + p_2 lambda^{n-2} + ... + p_n.
std::vector<Poly> charpoly_invariants(const TracelessMatrix& M);

// disc_lambda(det(lambda I - M)); the sign convention gives -4 p_2 for n = 2.
Poly charpoly_discriminant(const TracelessMatrix& M);

}  // namespace hitchin
