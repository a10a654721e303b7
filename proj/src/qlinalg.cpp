#include "hitchin/qlinalg.hpp"

#include <stdexcept>

namespace hitchin {

std::vector<int> q_rref(QMatrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int p = -1;
    for (int i = row; i < m.rows; ++i)
      if (m.at(i, col) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(row, j));
    Rational inv = Rational(1) / m.at(row, col);
    for (int j = col; j < m.cols; ++j) m.at(row, j) *= inv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      Rational f = m.at(i, col);
      for (int j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int q_rank(QMatrix m) { return static_cast<int>(q_rref(m).size()); }

Rational q_det(QMatrix m) {
  if (m.rows != m.cols) throw std::invalid_argument("determinant of non-square matrix");
  Rational det(1);
  for (int col = 0; col < m.cols; ++col) {
    int p = -1;
    for (int i = col; i < m.rows; ++i)
      if (m.at(i, col) != 0) {
        p = i;
        break;
      }
    if (p < 0) return Rational(0);
    if (p != col) {
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(col, j));
      det = -det;
    }
    det *= m.at(col, col);
    Rational inv = Rational(1) / m.at(col, col);
    for (int i = col + 1; i < m.rows; ++i) {
      if (m.at(i, col) == 0) continue;
      Rational f = m.at(i, col) * inv;
      for (int j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(col, j);
    }
  }
  return det;
}

std::vector<std::vector<Rational>> q_kernel(const QMatrix& m) {
  QMatrix r = m;
  std::vector<int> pivots = q_rref(r);
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (int free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(m.cols, Rational(0));
    v[free] = Rational(1);
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r.at(static_cast<int>(k), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Rational>> q_solve(QMatrix m, std::vector<Rational> rhs) {
  if (static_cast<int>(rhs.size()) != m.rows) throw std::invalid_argument("rhs size mismatch");
  QMatrix aug(m.rows, m.cols + 1);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols) = rhs[static_cast<std::size_t>(i)];
  }
  std::vector<int> pivots = q_rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols) return std::nullopt;  // inconsistent
  std::vector<Rational> x(m.cols, Rational(0));
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug.at(static_cast<int>(k), m.cols);
  return x;
}

}  // namespace hitchin
