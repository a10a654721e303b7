#include "hitchin/periods.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace hitchin::periods {

namespace {

constexpr double kPi = 3.14159265358979323846;

Rational rational_from_double(double x) {
  if (x == 0.0) return Rational(0);
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite scalar");
  int e = 0;
  double m = std::frexp(x, &e);  // x = m * 2^e with 0.5 <= |m| < 1
  long long mant = static_cast<long long>(std::ldexp(m, 53));
  Rational r(mant);
  int shift = e - 53;
  Integer two53(1);
  if (shift >= 0) {
    r *= Rational(mp::pow(Integer(2), static_cast<unsigned>(shift)));
  } else {
    r /= Rational(mp::pow(Integer(2), static_cast<unsigned>(-shift)));
  }
  return r;
}

std::vector<Cplx> to_complex_coeffs(const Poly& p) {
  std::vector<Cplx> a;
  a.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) a.emplace_back(rational_to_double(c), 0.0);
  return a;
}

Cplx horner(const std::vector<Cplx>& a, const Cplx& z) {
  Cplx acc(0.0, 0.0);
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * z + *it;
  return acc;
}

// ---- Gauss-Legendre nodes on [-1, 1] ----------------------------------

struct GLRule {
  std::vector<double> x, w;
};

const GLRule& gauss_legendre(int n) {
  static std::map<int, GLRule> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  GLRule rule;
  rule.x.resize(static_cast<std::size_t>(n));
  rule.w.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));  // Chebyshev initial guess
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.x[static_cast<std::size_t>(i)] = x;
    rule.w[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return cache.emplace(n, std::move(rule)).first->second;
}

// ---- small complex linear algebra --------------------------------------

CMatrix cmat_identity(int n) {
  CMatrix m(static_cast<std::size_t>(n), std::vector<Cplx>(static_cast<std::size_t>(n), Cplx(0, 0)));
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = Cplx(1, 0);
  return m;
}

CMatrix cmat_inverse(CMatrix a) {
  const int n = static_cast<int>(a.size());
  CMatrix inv = cmat_identity(n);
  for (int col = 0; col < n; ++col) {
    int p = col;
    for (int i = col + 1; i < n; ++i)
      if (std::abs(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)]) >
          std::abs(a[static_cast<std::size_t>(p)][static_cast<std::size_t>(col)]))
        p = i;
    if (std::abs(a[static_cast<std::size_t>(p)][static_cast<std::size_t>(col)]) < 1e-300)
      throw std::domain_error("singular period matrix");
    std::swap(a[static_cast<std::size_t>(p)], a[static_cast<std::size_t>(col)]);
    std::swap(inv[static_cast<std::size_t>(p)], inv[static_cast<std::size_t>(col)]);
    Cplx piv = a[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
    for (int j = 0; j < n; ++j) {
      a[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)] /= piv;
      inv[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)] /= piv;
    }
    for (int i = 0; i < n; ++i) {
      if (i == col) continue;
      Cplx f = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)];
      if (f == Cplx(0, 0)) continue;
      for (int j = 0; j < n; ++j) {
        a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
            f * a[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)];
        inv[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
            f * inv[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)];
      }
    }
  }
  return inv;
}

CMatrix cmat_mul(const CMatrix& a, const CMatrix& b) {
  const int n = static_cast<int>(a.size());
  const int m = static_cast<int>(b[0].size());
  const int k = static_cast<int>(b.size());
  CMatrix c(static_cast<std::size_t>(n), std::vector<Cplx>(static_cast<std::size_t>(m), Cplx(0, 0)));
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < k; ++l)
      for (int j = 0; j < m; ++j)
        c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +=
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)] *
            b[static_cast<std::size_t>(l)][static_cast<std::size_t>(j)];
  return c;
}

double cmat_max_abs(const CMatrix& a) {
  double m = 0.0;
  for (const auto& row : a)
    for (const auto& x : row) m = std::max(m, std::abs(x));
  return m;
}

// ---- engines -----------------------------------------------------------

double dist_point_segment(const Cplx& p, const Cplx& a, const Cplx& b) {
  Cplx ab = b - a;
  double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(p - a);
  double t = std::clamp(((p - a) * std::conj(ab)).real() / len2, 0.0, 1.0);
  return std::abs(p - (a + t * ab));
}

// Real-branch-point engine: cut and gap integrals with the sine substitution
// z = mid + half sin t, which cancels both endpoint square-root zeros.
struct RealChain {
  std::vector<double> e;  // sorted roots
  Cplx sqrtlc;
  int g;

  double smooth_abs(double x, int skip1, int skip2) const {
    double prod = 1.0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (static_cast<int>(i) == skip1 || static_cast<int>(i) == skip2) continue;
      prod *= std::abs(x - e[i]);
    }
    return std::sqrt(prod);
  }

  // a_i: loop around cut i (0-based). A contribution 2i * int dt z^k / W.
  Cplx a_period(int i, int k, int nodes) const {
    const double p = e[static_cast<std::size_t>(2 * i)], q = e[static_cast<std::size_t>(2 * i + 1)];
    const double mid = 0.5 * (p + q), half = 0.5 * (q - p);
    const double sign = ((g - i) % 2 == 0) ? 1.0 : -1.0;
    const GLRule& rule = gauss_legendre(nodes);
    Cplx acc(0.0, 0.0);
    for (std::size_t s = 0; s < rule.x.size(); ++s) {
      double t = 0.5 * kPi * rule.x[s];
      double x = mid + half * std::sin(t);
      Cplx w = sqrtlc * sign * smooth_abs(x, 2 * i, 2 * i + 1);
      acc += rule.w[s] * std::pow(x, k) / w;
    }
    return Cplx(0.0, 2.0) * acc * (0.5 * kPi);
  }

  // gap j (0-based): [e_{2j+1}, e_{2j+2}].
  Cplx gap_integral(int j, int k, int nodes) const {
    const double p = e[static_cast<std::size_t>(2 * j + 1)], q = e[static_cast<std::size_t>(2 * j + 2)];
    const double mid = 0.5 * (p + q), half = 0.5 * (q - p);
    const double sign = ((g - j) % 2 == 0) ? 1.0 : -1.0;
    const GLRule& rule = gauss_legendre(nodes);
    Cplx acc(0.0, 0.0);
    for (std::size_t s = 0; s < rule.x.size(); ++s) {
      double t = 0.5 * kPi * rule.x[s];
      double x = mid + half * std::sin(t);
      Cplx w = sqrtlc * sign * smooth_abs(x, 2 * j + 1, 2 * j + 2);
      acc += rule.w[s] * std::pow(x, k) / w;
    }
    return acc * (0.5 * kPi);
  }

  void periods(int nodes, CMatrix& A, CMatrix& B) const {
    A.assign(static_cast<std::size_t>(g), std::vector<Cplx>(static_cast<std::size_t>(g)));
    B.assign(static_cast<std::size_t>(g), std::vector<Cplx>(static_cast<std::size_t>(g)));
    for (int i = 0; i < g; ++i)
      for (int k = 0; k < g; ++k) {
        A[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = a_period(i, k, nodes);
        Cplx acc(0.0, 0.0);
        for (int j = i; j < g; ++j) acc += gap_integral(j, k, nodes);
        B[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = 2.0 * acc;
      }
  }
};

// Tracked closed-contour engine (genus 1, arbitrary layouts): trapezoid rule
// on an ellipse with the square-root sheet continued stepwise.
struct Contour {
  Cplx center, u;  // unit direction of the major axis
  double ra, rb;
};

Contour make_contour(const Cplx& p, const Cplx& q, double clearance) {
  Contour c;
  c.center = 0.5 * (p + q);
  Cplx d = q - p;
  double len = std::abs(d);
  c.u = (len > 0) ? d / len : Cplx(1.0, 0.0);
  c.ra = 0.5 * len + clearance;
  c.rb = clearance;
  return c;
}

struct ContourResult {
  std::vector<Cplx> integrals;  // z^k dz / y, k = 0..maxK
  bool ok = false;
};

ContourResult integrate_contour(const std::vector<Cplx>& bcoeffs, const Contour& c, int maxK,
                                int nodes) {
  ContourResult res;
  res.integrals.assign(static_cast<std::size_t>(maxK + 1), Cplx(0.0, 0.0));
  Cplx iu = Cplx(0.0, 1.0) * c.u;
  auto zOf = [&](double phi) { return c.center + c.ra * std::cos(phi) * c.u + c.rb * std::sin(phi) * iu; };
  auto dzOf = [&](double phi) { return -c.ra * std::sin(phi) * c.u + c.rb * std::cos(phi) * iu; };
  Cplx y0 = std::sqrt(horner(bcoeffs, zOf(0.0)));
  Cplx yPrev = y0;
  const double dphi = 2.0 * kPi / nodes;
  for (int s = 0; s < nodes; ++s) {
    double phi = dphi * s;
    Cplx z = zOf(phi);
    Cplx y = std::sqrt(horner(bcoeffs, z));
    if (std::abs(y - yPrev) > std::abs(y + yPrev)) y = -y;
    if (std::abs(y - yPrev) > 0.75 * (std::abs(y) + std::abs(yPrev))) return res;  // refine
    Cplx f = dzOf(phi) / y;
    Cplx zk(1.0, 0.0);
    for (int k = 0; k <= maxK; ++k) {
      res.integrals[static_cast<std::size_t>(k)] += f * zk * dphi;
      zk *= z;
    }
    yPrev = y;
  }
  // Sheet must close up after a full revolution.
  Cplx yBack = std::sqrt(horner(bcoeffs, zOf(0.0)));
  if (std::abs(yBack - yPrev) > std::abs(yBack + yPrev)) yBack = -yBack;
  if (std::abs(yBack - y0) > 1e-6 * (std::abs(y0) + 1e-300)) return res;
  res.ok = true;
  return res;
}

bool im_positive_definite(const CMatrix& tau) {
  const int g = static_cast<int>(tau.size());
  if (g == 1) return tau[0][0].imag() > 0.0;
  // Sylvester criterion on Im tau (g = 2 in practice).
  double a = tau[0][0].imag(), b = 0.5 * (tau[0][1].imag() + tau[1][0].imag()), d = tau[1][1].imag();
  if (g == 2) return a > 0.0 && (a * d - b * b) > 0.0;
  return false;
}

Cplx reduce_tau_g1(Cplx t) {
  for (int it = 0; it < 256; ++it) {
    t = Cplx(t.real() - std::round(t.real()), t.imag());
    if (std::abs(t) < 1.0 - 1e-13) {
      t = -1.0 / t;
      continue;
    }
    break;
  }
  return t;
}

struct EngineOutput {
  CMatrix A, B;
};

}  // namespace

RootFindResult complex_roots(const Poly& p, double tol) {
  if (p.is_zero() || p.degree() < 1) throw std::domain_error("complex_roots: degree too small");
  if (!is_squarefree(p)) throw std::domain_error("complex_roots: polynomial not squarefree");
  const int n = p.degree();
  std::vector<Cplx> a = to_complex_coeffs(p);
  std::vector<Cplx> da = to_complex_coeffs(p.derivative());
  double lead = std::abs(a.back());
  double radius = 0.0;
  for (int k = 0; k < n; ++k) radius = std::max(radius, std::abs(a[static_cast<std::size_t>(k)]) / lead);
  radius = 1.0 + radius;

  RootFindResult out;
  out.roots.resize(static_cast<std::size_t>(n));
  // Deterministic perturbed circle: irrational angle offset, mild radius fan.
  for (int j = 0; j < n; ++j) {
    double ang = 2.0 * kPi * j / n + 0.397;
    double r = radius * (0.55 + 0.35 * (j + 1.0) / n);
    out.roots[static_cast<std::size_t>(j)] = Cplx(r * std::cos(ang), r * std::sin(ang));
  }

  auto scale_at = [&](const Cplx& z) {
    double az = std::abs(z), s = 0.0, zk = 1.0;
    for (int k = 0; k <= n; ++k) {
      s += std::abs(a[static_cast<std::size_t>(k)]) * zk;
      zk *= az;
    }
    return std::max(s, 1e-300);
  };

  const int kMaxIter = 400;
  for (int iter = 1; iter <= kMaxIter; ++iter) {
    double moved = 0.0;
    for (int j = 0; j < n; ++j) {
      Cplx z = out.roots[static_cast<std::size_t>(j)];
      Cplx pv = horner(a, z);
      Cplx dv = horner(da, z);
      if (dv == Cplx(0.0, 0.0)) {
        out.roots[static_cast<std::size_t>(j)] = z + Cplx(1e-6 * radius, 1e-6 * radius);
        moved = 1.0;
        continue;
      }
      Cplx newton = pv / dv;
      Cplx rep(0.0, 0.0);
      for (int k = 0; k < n; ++k) {
        if (k == j) continue;
        rep += 1.0 / (z - out.roots[static_cast<std::size_t>(k)]);
      }
      Cplx denom = 1.0 - newton * rep;
      Cplx step = (std::abs(denom) > 1e-300) ? newton / denom : newton;
      out.roots[static_cast<std::size_t>(j)] = z - step;
      moved = std::max(moved, std::abs(step) / std::max(1.0, std::abs(z)));
    }
    out.iterations = iter;
    double worst = 0.0;
    for (int j = 0; j < n; ++j) {
      Cplx z = out.roots[static_cast<std::size_t>(j)];
      worst = std::max(worst, std::abs(horner(a, z)) / scale_at(z));
    }
    out.maxResidual = worst;
    if (worst <= tol && moved <= 1e2 * tol) return out;
  }
  std::ostringstream os;
  os << "complex_roots: no convergence after " << kMaxIter
     << " iterations (scaled residual " << out.maxResidual << ", tol " << tol << ")";
  throw std::runtime_error(os.str());
}

double agm(double a, double b) {
  if (a <= 0.0 || b <= 0.0) throw std::domain_error("agm needs positive arguments");
  for (int i = 0; i < 64; ++i) {
    double an = 0.5 * (a + b), gn = std::sqrt(a * b);
    a = an;
    b = gn;
    if (std::abs(a - b) <= 1e-16 * std::abs(a)) break;
  }
  return 0.5 * (a + b);
}

double agm_elliptic_K(double k) {
  if (k < 0.0 || k >= 1.0) throw std::domain_error("agm_elliptic_K requires 0 <= k < 1");
  return kPi / (2.0 * agm(1.0, std::sqrt(1.0 - k * k)));
}

BranchConfiguration plan_cuts(const std::vector<Cplx>& roots, const PeriodConfig& cfg) {
  if (roots.size() % 2 != 0 || roots.size() < 4)
    throw std::domain_error("plan_cuts: need an even number (>= 4) of branch points");
  BranchConfiguration bc;
  bc.roots = roots;
  std::sort(bc.roots.begin(), bc.roots.end(), [](const Cplx& a, const Cplx& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  double scale = 0.0;
  for (const auto& r : bc.roots) scale = std::max(scale, std::abs(r));
  scale = std::max(scale, 1.0);
  bc.allReal = true;
  for (const auto& r : bc.roots)
    if (std::abs(r.imag()) > 1e-9 * scale) bc.allReal = false;
  bc.minClearance = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < bc.roots.size(); i += 2) {
    bc.cuts.emplace_back(static_cast<int>(i), static_cast<int>(i + 1));
    const Cplx p = bc.roots[i], q = bc.roots[i + 1];
    const double half = 0.5 * std::abs(q - p);
    if (half < 1e-12 * scale) throw std::domain_error("configuration too degenerate: collapsing cut");
    for (std::size_t s = 0; s < bc.roots.size(); ++s) {
      if (s == i || s == i + 1) continue;
      double d = dist_point_segment(bc.roots[s], p, q);
      bc.minClearance = std::min(bc.minClearance, d);
      if (d < half / cfg.separationFactor)
        throw std::domain_error("configuration too degenerate: branch point crowds a cut");
    }
  }
  return bc;
}

RiemannMatrix period_matrix(const Poly& b, const PeriodConfig& cfg) {
  if (b.is_zero() || b.degree() < 4 || b.degree() % 2 != 0)
    throw std::domain_error("period_matrix: spectral coefficient must have even degree >= 4");
  const int g = b.degree() / 2 - 1;
  if (g < 1 || g > 2) throw std::domain_error("period_matrix: genus capped at 2");
  RootFindResult rf = complex_roots(b, cfg.rootTol);
  BranchConfiguration bc = plan_cuts(rf.roots, cfg);

  const double lc = rational_to_double(b.lc());
  auto engine = [&](int nodes) -> EngineOutput {
    EngineOutput out;
    if (bc.allReal && !(cfg.forceContour && g == 1)) {
      RealChain chain;
      chain.g = g;
      chain.sqrtlc = std::sqrt(Cplx(lc, 0.0));
      for (const auto& r : bc.roots) chain.e.push_back(r.real());
      chain.periods(nodes, out.A, out.B);
      return out;
    }
    if (g != 1)
      throw std::domain_error(
          "configuration too degenerate: non-real branch points are supported only in genus 1");
    std::vector<Cplx> bco = to_complex_coeffs(b);
    double clrA = std::numeric_limits<double>::infinity();
    for (int s = 0; s < 4; ++s)
      if (s != 0 && s != 1) clrA = std::min(clrA, dist_point_segment(bc.roots[static_cast<std::size_t>(s)], bc.roots[0], bc.roots[1]));
    double clrB = std::numeric_limits<double>::infinity();
    for (int s = 0; s < 4; ++s)
      if (s != 1 && s != 2) clrB = std::min(clrB, dist_point_segment(bc.roots[static_cast<std::size_t>(s)], bc.roots[1], bc.roots[2]));
    Contour ca = make_contour(bc.roots[0], bc.roots[1], clrA / 3.0);
    Contour cb = make_contour(bc.roots[1], bc.roots[2], clrB / 3.0);
    int localNodes = nodes;
    for (int tries = 0; tries < 8; ++tries) {
      ContourResult ra = integrate_contour(bco, ca, g - 1, localNodes);
      ContourResult rb = integrate_contour(bco, cb, g - 1, localNodes);
      if (ra.ok && rb.ok) {
        out.A = {{ra.integrals[0]}};
        out.B = {{rb.integrals[0]}};
        return out;
      }
      localNodes *= 2;
    }
    throw std::domain_error("configuration too degenerate: sheet tracking failed to stabilise");
  };

  auto tau_of = [&](const EngineOutput& eo) { return cmat_mul(eo.B, cmat_inverse(eo.A)); };

  int nodes = cfg.nodes;
  EngineOutput eo = engine(nodes);
  CMatrix tau = tau_of(eo);
  for (int doubling = 0; doubling < cfg.maxDoublings; ++doubling) {
    EngineOutput eo2 = engine(nodes * 2);
    CMatrix tau2 = tau_of(eo2);
    double diff = 0.0;
    for (int i = 0; i < g; ++i)
      for (int j = 0; j < g; ++j)
        diff = std::max(diff, std::abs(tau2[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
                                       tau[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
    nodes *= 2;
    eo = std::move(eo2);
    bool converged = diff <= cfg.tol * std::max(1.0, cmat_max_abs(tau2));
    tau = std::move(tau2);
    if (converged) break;
    if (doubling + 1 == cfg.maxDoublings)
      throw std::domain_error("period quadrature did not converge at the configured node cap");
  }

  // Orientation: normalise the overall sign of the b-cycles so that Im tau
  // is in the Siegel half-space.
  if (tau[0][0].imag() < 0.0) {
    for (auto& row : eo.B)
      for (auto& x : row) x = -x;
    for (auto& row : tau)
      for (auto& x : row) x = -x;
  }

  RiemannMatrix rm;
  rm.genus = g;
  rm.aPeriods = eo.A;
  rm.bPeriods = eo.B;
  rm.tau = tau;
  rm.nodes = nodes;
  double sym = 0.0;
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j)
      sym = std::max(sym, std::abs(tau[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
                                   tau[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]));
  rm.symmetryResidual = sym / std::max(1.0, cmat_max_abs(tau));
  rm.imPositiveDefinite = im_positive_definite(tau);
  if (!rm.imPositiveDefinite)
    throw std::domain_error("period matrix failed the positivity check");
  rm.tauReduced = tau;
  if (g == 1) rm.tauReduced[0][0] = reduce_tau_g1(tau[0][0]);
  return rm;
}

FdResult dtau_fd(const Poly& b, const Poly& bdot, double h, const PeriodConfig& cfg) {
  if (h <= 0.0) throw std::invalid_argument("fd step must be positive");
  FdResult out;
  out.h = h;
  auto tau_at = [&](double step) {
    Poly bs = b + rational_from_double(step) * bdot;
    return period_matrix(bs, cfg).tau;
  };
  auto central = [&](double step) {
    CMatrix tp = tau_at(step), tm = tau_at(-step);
    const int g = static_cast<int>(tp.size());
    CMatrix fd(static_cast<std::size_t>(g), std::vector<Cplx>(static_cast<std::size_t>(g)));
    for (int i = 0; i < g; ++i)
      for (int j = 0; j < g; ++j)
        fd[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            (tp[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
             tm[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) /
            (2.0 * step);
    return fd;
  };
  out.fdH = central(h);
  out.fdHalf = central(0.5 * h);
  const int g = static_cast<int>(out.fdH.size());
  out.richardson.assign(static_cast<std::size_t>(g), std::vector<Cplx>(static_cast<std::size_t>(g)));
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j)
      out.richardson[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          (4.0 * out.fdHalf[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
           out.fdH[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) /
          3.0;
  return out;
}

CalibrationReport calibrate_and_compare(const std::vector<cubic::CameralDataA1>& instances,
                                        const PeriodConfig& cfg, double fdStep, double ratioTol) {
  if (instances.size() < 2)
    throw std::invalid_argument("calibration needs at least two instances");
  CalibrationReport rep;
  rep.ratioTol = ratioTol;
  for (const auto& data : instances) {
    InstanceCalibration ic;
    ic.genus = data.genus;
    ic.name = to_string(data.b);
    const int g = data.genus;
    RiemannMatrix rm = period_matrix(data.b, cfg);
    CMatrix Ainv = cmat_inverse(rm.aPeriods);

    // Raw FD tensors per leaf direction 2 z^i delta.
    std::vector<CMatrix> F;
    for (int i = 0; i < g; ++i) {
      Poly bdot = Rational(2) * (Poly::monomial(i) * data.delta);
      F.push_back(dtau_fd(data.b, bdot, fdStep, cfg).richardson);
    }
    // Cubic in the a-normalised form basis.
    cubic::CubicTensor T = cubic::cubic_tensor(data);
    std::vector<CMatrix> Chat(static_cast<std::size_t>(g),
                              CMatrix(static_cast<std::size_t>(g), std::vector<Cplx>(static_cast<std::size_t>(g), Cplx(0, 0))));
    for (int i = 0; i < g; ++i)
      for (int j = 0; j < g; ++j)
        for (int k = 0; k < g; ++k) {
          Cplx acc(0.0, 0.0);
          for (int p = 0; p < g; ++p)
            for (int q = 0; q < g; ++q)
              acc += Ainv[static_cast<std::size_t>(p)][static_cast<std::size_t>(j)] *
                     Ainv[static_cast<std::size_t>(q)][static_cast<std::size_t>(k)] *
                     Cplx(rational_to_double(T.at(i, p, q)), 0.0);
          Chat[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] = acc;
        }
    double floorC = 0.0;
    for (int i = 0; i < g; ++i) floorC = std::max(floorC, cmat_max_abs(Chat[static_cast<std::size_t>(i)]));
    floorC *= 1e-8;
    for (int i = 0; i < g; ++i)
      for (int j = 0; j < g; ++j)
        for (int k = 0; k < g; ++k) {
          Cplx c = Chat[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
          if (std::abs(c) <= floorC) continue;
          ic.ratios.push_back(F[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] / c);
        }
    if (ic.ratios.empty()) throw std::domain_error("calibration instance has a vanishing cubic");
    Cplx mean(0.0, 0.0);
    for (const auto& r : ic.ratios) mean += r;
    mean /= static_cast<double>(ic.ratios.size());
    ic.meanRatio = mean;
    for (const auto& r : ic.ratios)
      ic.maxSpreadRel = std::max(ic.maxSpreadRel, std::abs(r - mean) / std::abs(mean));

    // Full Sym^3 test: normalise the direction index as well.
    if (g > 1) {
      std::vector<CMatrix> Ft(static_cast<std::size_t>(g),
                              CMatrix(static_cast<std::size_t>(g), std::vector<Cplx>(static_cast<std::size_t>(g), Cplx(0, 0))));
      for (int l = 0; l < g; ++l)
        for (int j = 0; j < g; ++j)
          for (int k = 0; k < g; ++k) {
            Cplx acc(0.0, 0.0);
            for (int i = 0; i < g; ++i)
              acc += Ainv[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)] *
                     F[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
            Ft[static_cast<std::size_t>(l)][static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] = acc;
          }
      double scale = 0.0;
      for (int l = 0; l < g; ++l) scale = std::max(scale, cmat_max_abs(Ft[static_cast<std::size_t>(l)]));
      double worst = 0.0;
      const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
      for (int l = 0; l < g; ++l)
        for (int j = 0; j < g; ++j)
          for (int k = 0; k < g; ++k) {
            int idx[3] = {l, j, k};
            Cplx base = Ft[static_cast<std::size_t>(l)][static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
            for (const auto& pm : perms) {
              Cplx other = Ft[static_cast<std::size_t>(idx[pm[0]])][static_cast<std::size_t>(idx[pm[1]])][static_cast<std::size_t>(idx[pm[2]])];
              worst = std::max(worst, std::abs(base - other));
            }
          }
      ic.fdSymmetryResidual = worst / std::max(scale, 1e-300);
    }
    rep.instances.push_back(std::move(ic));
  }
  Cplx grand(0.0, 0.0);
  for (const auto& ic : rep.instances) grand += ic.meanRatio;
  grand /= static_cast<double>(rep.instances.size());
  rep.constant = grand;
  for (const auto& a : rep.instances)
    for (const auto& b : rep.instances)
      rep.maxPairwiseRel = std::max(rep.maxPairwiseRel,
                                    std::abs(a.meanRatio - b.meanRatio) / std::abs(grand));
  rep.pass = rep.maxPairwiseRel <= ratioTol;
  for (const auto& ic : rep.instances) rep.pass = rep.pass && ic.maxSpreadRel <= ratioTol;
  return rep;
}

}  // namespace hitchin::periods
