#include "hitchin/lie.hpp"

#include <numeric>
#include <stdexcept>

namespace hitchin {

SimpleTypeInfo lie_info(char family, int rank) {
  SimpleTypeInfo info;
  info.family = family;
  info.rank = rank;
  auto fail = [&] {
    throw std::domain_error(std::string("invalid simple type ") + family + std::to_string(rank));
  };
  const int l = rank;
  switch (family) {
    case 'A':
      if (l < 1) fail();
      info.dim = l * (l + 2);
      for (int i = 2; i <= l + 1; ++i) info.degrees.push_back(i);
      break;
    case 'B':
      if (l < 2) fail();
      info.dim = l * (2 * l + 1);
      for (int i = 1; i <= l; ++i) info.degrees.push_back(2 * i);
      break;
    case 'C':
      if (l < 2) fail();
      info.dim = l * (2 * l + 1);
      for (int i = 1; i <= l; ++i) info.degrees.push_back(2 * i);
      break;
    case 'D':
      if (l < 3) fail();
      info.dim = l * (2 * l - 1);
      for (int i = 1; i <= l - 1; ++i) info.degrees.push_back(2 * i);
      info.degrees.push_back(l);
      std::sort(info.degrees.begin(), info.degrees.end());
      break;
    case 'E':
      if (l == 6) {
        info.dim = 78;
        info.degrees = {2, 5, 6, 8, 9, 12};
      } else if (l == 7) {
        info.dim = 133;
        info.degrees = {2, 6, 8, 10, 12, 14, 18};
      } else if (l == 8) {
        info.dim = 248;
        info.degrees = {2, 8, 12, 14, 18, 20, 24, 30};
      } else {
        fail();
      }
      break;
    case 'F':
      if (l != 4) fail();
      info.dim = 52;
      info.degrees = {2, 6, 8, 12};
      break;
    case 'G':
      if (l != 2) fail();
      info.dim = 14;
      info.degrees = {2, 6};
      break;
    default:
      fail();
  }
  info.numRoots = info.dim - info.rank;
  info.weylOrder = 1;
  for (int d : info.degrees) info.weylOrder *= d;
  // Anchor identity: the Poincare polynomial prod_i (1 + t^{2d_i - 1}) of the
  // adjoint group has degree sum_i (2d_i - 1) = dim.
  long long check = 0;
  for (int d : info.degrees) check += 2 * d - 1;
  if (check != info.dim) throw std::logic_error("lie table inconsistency");
  return info;
}

TracelessMatrix::TracelessMatrix(int n, std::vector<Poly> entries) : n_(n), e_(std::move(entries)) {
  if (n <= 0 || e_.size() != static_cast<std::size_t>(n) * n)
    throw std::invalid_argument("matrix shape mismatch");
  Poly tr;
  for (int i = 0; i < n; ++i) tr += at(i, i);
  if (!tr.is_zero()) throw std::domain_error("not traceless");
}

TracelessMatrix TracelessMatrix::zero(int n) {
  return TracelessMatrix(n, std::vector<Poly>(static_cast<std::size_t>(n) * n));
}

int TracelessMatrix::max_entry_degree() const {
  int d = Poly::kZeroDegree;
  for (const auto& p : e_)
    if (!p.is_zero()) d = std::max(d, p.degree());
  return d;
}

namespace {

using PolyMatrix = std::vector<Poly>;  // n x n row-major

PolyMatrix mat_mul(int n, const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix c(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Poly s;
      for (int k = 0; k < n; ++k)
        s += a[static_cast<std::size_t>(i) * n + k] * b[static_cast<std::size_t>(k) * n + j];
      c[static_cast<std::size_t>(i) * n + j] = std::move(s);
    }
  return c;
}

// Fraction-free Bareiss determinant over Q[z]; every division is exact.
Poly bareiss_det_poly(std::vector<std::vector<Poly>> m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return Poly(Rational(1));
  Rational sign(1);
  Poly prev(Rational(1));
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k].is_zero()) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (!m[i][k].is_zero()) {
          p = i;
          break;
        }
      if (p < 0) return Poly();
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Poly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        auto q = exact_div(num, prev);
        if (!q) throw std::logic_error("Bareiss division not exact");
        m[i][j] = std::move(*q);
      }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace

std::vector<Poly> charpoly_invariants(const TracelessMatrix& M) {
  const int n = M.size();
  PolyMatrix A(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) A[static_cast<std::size_t>(i) * n + j] = M.at(i, j);
  // Faddeev-LeVerrier: det(lambda I - M) = lambda^n - c_1 lambda^{n-1} - ... - c_n.
  PolyMatrix Ak = A;
  std::vector<Poly> p;  // p_2..p_n
  Poly ck;  // c_1 = tr M = 0
  for (int k = 2; k <= n; ++k) {
    PolyMatrix shifted = Ak;
    for (int i = 0; i < n; ++i) shifted[static_cast<std::size_t>(i) * n + i] -= ck;
    Ak = mat_mul(n, A, shifted);
    Poly tr;
    for (int i = 0; i < n; ++i) tr += Ak[static_cast<std::size_t>(i) * n + i];
    auto q = exact_div(tr, Poly(Rational(k)));
    ck = std::move(*q);
    p.push_back(-ck);
  }
  return p;
}

Poly charpoly_discriminant(const TracelessMatrix& M) {
  const int n = M.size();
  std::vector<Poly> p = charpoly_invariants(M);
  // Characteristic polynomial in lambda, ascending: f[k] = coeff of lambda^k.
  std::vector<Poly> f(static_cast<std::size_t>(n) + 1);
  f[static_cast<std::size_t>(n)] = Poly(Rational(1));
  for (int k = 2; k <= n; ++k) f[static_cast<std::size_t>(n - k)] = p[static_cast<std::size_t>(k - 2)];
  std::vector<Poly> df(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) df[static_cast<std::size_t>(k - 1)] = Rational(k) * f[static_cast<std::size_t>(k)];
  while (!df.empty() && df.back().is_zero()) df.pop_back();
  const int dg = static_cast<int>(df.size()) - 1;
  if (dg < 0) return Poly();  // derivative identically zero (n = 0 cannot happen)
  const int rows = n + dg;
  std::vector<std::vector<Poly>> s(static_cast<std::size_t>(rows), std::vector<Poly>(static_cast<std::size_t>(rows)));
  for (int i = 0; i < dg; ++i)
    for (int j = 0; j <= n; ++j) s[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + j)] = f[static_cast<std::size_t>(n - j)];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= dg; ++j) s[static_cast<std::size_t>(dg + i)][static_cast<std::size_t>(i + j)] = df[static_cast<std::size_t>(dg - j)];
  Poly res = bareiss_det_poly(std::move(s));
  if (((n * (n - 1)) / 2) % 2 != 0) res = -res;
  return res;  // leading coefficient of the characteristic polynomial is 1
}

}  // namespace hitchin
