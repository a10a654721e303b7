#pragma once

#include "hitchin/rational.hpp"

#include <optional>
#include <vector>

namespace hitchin {

// Dense matrix over Q with exact Gaussian elimination. Sizes here are tiny
// (tens of rows), so no pivoting strategy beyond first-nonzero is needed.
struct QMatrix {
  int rows = 0, cols = 0;
  std::vector<Rational> a;

  QMatrix() = default;
  QMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, Rational(0)) {}
  Rational& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  const Rational& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
};

// Row-reduce in place; returns the pivot columns in order.
std::vector<int> q_rref(QMatrix& m);

int q_rank(QMatrix m);

Rational q_det(QMatrix m);  // square

// Basis of { x : m x = 0 }.
std::vector<std::vector<Rational>> q_kernel(const QMatrix& m);

// One solution of m x = rhs, if any.
std::optional<std::vector<Rational>> q_solve(QMatrix m, std::vector<Rational> rhs);

}  // namespace hitchin
