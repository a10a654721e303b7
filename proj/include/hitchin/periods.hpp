#pragma once

#include "hitchin/cubic.hpp"
#include "hitchin/poly.hpp"

#include <string>
#include <vector>

namespace hitchin::periods {

using CMatrix = std::vector<std::vector<Cplx>>;

struct RootFindResult {
  std::vector<Cplx> roots;
  int iterations = 0;
  double maxResidual = 0.0;
};

// Aberth simultaneous iteration with deterministic perturbed-circle start.
// Requires a squarefree polynomial (checked exactly); throws
// std::runtime_error with diagnostics on non-convergence.
RootFindResult complex_roots(const Poly& p, double tol = 1e-12);

double agm(double a, double b);

// K(k) = pi / (2 AGM(1, sqrt(1 - k^2))), 0 <= k < 1.
double agm_elliptic_K(double k);

struct PeriodConfig {
  int nodes = 96;                 // starting quadrature size per integral
  double tol = 1e-10;             // relative convergence target under node doubling
  int maxDoublings = 5;
  double separationFactor = 3.0;  // strangers must clear (cut half-length)/factor
  double rootTol = 1e-12;
  bool forceContour = false;      // genus 1 only: use the tracked-contour engine even for real layouts
};

struct BranchConfiguration {
  std::vector<Cplx> roots;                 // lexicographically sorted (Re, Im)
  std::vector<std::pair<int, int>> cuts;   // consecutive index pairs
  bool allReal = false;
  double minClearance = 0.0;               // stranger distance to nearest cut
};

// Sort roots, pair consecutive points into cuts, and reject layouts where a
// non-paired root crowds a cut. Throws std::domain_error on rejection.
BranchConfiguration plan_cuts(const std::vector<Cplx>& roots, const PeriodConfig& cfg);

struct RiemannMatrix {
  int genus = 0;
  CMatrix aPeriods, bPeriods;  // [cycle][form], forms z^k dz/y
  CMatrix tau;                 // b-periods in the a-normalised form basis
  CMatrix tauReduced;          // genus 1: SL2(Z) fundamental-domain representative
  double symmetryResidual = 0.0;
  bool imPositiveDefinite = false;
  int nodes = 0;  // quadrature size at convergence
};

// Periods of the hyperelliptic curve y^2 = b(z), genus (deg b)/2 - 1 in
// {1, 2}. Real-branch-point layouts use cut/gap integrals with the sine
// substitution; genus-1 complex layouts use tracked closed contours.
RiemannMatrix period_matrix(const Poly& b, const PeriodConfig& cfg = {});

struct FdResult {
  double h = 0.0;
  CMatrix fdH, fdHalf, richardson;
};

// Central difference of tau along b + beta*bdot, with step-halved Richardson
// refinement.
FdResult dtau_fd(const Poly& b, const Poly& bdot, double h, const PeriodConfig& cfg = {});

struct InstanceCalibration {
  std::string name;
  int genus = 0;
  std::vector<Cplx> ratios;       // FD entry / normalised cubic entry
  Cplx meanRatio{0.0, 0.0};
  double maxSpreadRel = 0.0;      // within-instance ratio spread
  double fdSymmetryResidual = 0.0;  // full Sym^3 residual of the normalised FD tensor
};

struct CalibrationReport {
  std::vector<InstanceCalibration> instances;
  Cplx constant{0.0, 0.0};     // grand mean ratio
  double maxPairwiseRel = 0.0; // across instances
  double ratioTol = 0.0;
  bool pass = false;
};

// For each leaf instance, compare the finite-difference derivative of tau
// against the cubic expressed in the a-normalised form basis; the ratio must
// be one universal constant, identical across instances and genera.
CalibrationReport calibrate_and_compare(const std::vector<cubic::CameralDataA1>& instances,
                                        const PeriodConfig& cfg = {}, double fdStep = 1e-3,
                                        double ratioTol = 1e-3);

}  // namespace hitchin::periods
