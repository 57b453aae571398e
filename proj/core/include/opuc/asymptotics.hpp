#pragma once

#include <string>
#include <vector>

#include "opuc/iterates.hpp"
#include "opuc/opuc.hpp"

namespace opuc {

// Throws InvalidArgument unless mu has an absolutely continuous part with
// integrable log density.
void szego_gate(const CircleMeasure& mu);

// n dist(Z(phi_n), xi) for xi = e^{i theta}.
double dist_times_n(const OPUCSystem& sys, double theta, int n);
std::vector<double> zero_scaling(const OPUCSystem& sys, double theta, const std::vector<int>& nList);

struct RadialValue {
  int n;
  double r;     // 1 - a/n
  cplx value;   // f_n(r xi); NaN when skipped
  bool skipped;
};
// f_n((1 - a/n) xi). Degrees with 1 - a/n < 0.5 are skipped.
std::vector<RadialValue> radial_schur(const SchurModel& model, double theta, double a, const std::vector<int>& nList);

// Sample of the Stolz region S_rho(xi), the convex hull of rho D and xi:
// `radial` axial distances from xi in geometric ratio 1.2 starting at
// 1 + rho, times `transverse` evenly spaced points across the region at that
// distance. Points with |z| > 0.999 are dropped.
std::vector<cplx> stolz_mesh(double theta, double rho, int radial = 64, int transverse = 64);
bool in_stolz(cplx z, double theta, double rho);
double stolz_sup(const SchurModel& model, double theta, double rho, int n);

// | |phi_n^*(xi)|^2 - |D(xi)|^{-2} | with |D(xi)|^2 = w(xi).
std::vector<double> phi_star_gap(const OPUCSystem& sys, const CircleMeasure& mu, double theta,
                                 const std::vector<int>& nList);

struct ScalingRow {
  int n;
  double distTimesN;
  cplx radial;
  double radialAbs;
  double stolzSup;
  double phiStarGap;
};

// Finite-n columns for the four equivalent conditions at xi. These hold in
// the limit for almost every xi; a finite series cannot certify a given xi.
struct ScalingSeries {
  double theta = 0.0;
  double a = 1.0;
  double rho = 0.5;
  std::vector<ScalingRow> rows;
  std::vector<std::string> notes;
};
ScalingSeries scaling_series(const OPUCSystem& sys, const SchurModel& model, double theta, const std::vector<int>& nList,
                             double a = 1.0, double rho = 0.5);

// Zeros of phi_n seen from xi at scale 1/n.
struct RescaledZeroProfile {
  int n = 0;
  double theta = 0.0;
  std::vector<cplx> zeros;          // all zeros with multiplicity
  std::vector<cplx> rescaledZeros;  // i n (1 - conj(xi) z)
  // (1/n) sum_k (1 - |z_k|^2) / |xi e^{it/n} - z_k|^2
  double h_prime(double t) const;
  // The same sum over the zeros with n |1 - conj(xi) z_k| < 1.9 b ("near")
  // or the rest ("far").
  double h_prime_near(double t, double b) const;
  double h_prime_far(double t, double b) const;
};
RescaledZeroProfile rescaled_zero_profile(const OPUCSystem& sys, int n, double theta = 0.0);

std::vector<double> rescaled_density(const RescaledZeroProfile& p, const std::vector<double>& tGrid);

// U_b(t) = sum over rescaled zeros with |xi_k| < 1.9 b of 2 Im xi_k / |t - xi_k|^2.
struct LimitKernel {
  std::vector<cplx> points;
  double operator()(double t) const;
};
LimitKernel limit_kernel(const RescaledZeroProfile& p, double b);

struct VnCheck {
  double maxError = 0.0;   // max circular distance after removing the best constant
  double worstTheta = 0.0;
  std::vector<double> formula;    // v_n on the grid
  std::vector<double> conjugate;  // Q log |phi_n^*(1 - xi b_n f_n)|^2
  double offset = 0.0;            // grid offset used
};
// Compares the closed formula for v_n (from gamma_n, |f_n| and kappa_n)
// with the FFT conjugate, modulo 2 pi and an additive constant.
VnCheck vn_argument_check(const OPUCSystem& sys, const SchurModel& model, int n);

// Mesh of {z in S_rho(xi): alpha delta < |z - xi| < beta delta}: 32 distances
// in geometric progression times 33 directions.
std::vector<cplx> upsilon_mesh(double theta, double delta, double rho, double alpha, double beta);
// osc of f_k over that mesh, one value per k. Throws if the mesh is empty.
std::vector<double> region_oscillation(const SchurModel& model, double theta, double delta, double rho, double alpha,
                                       double beta, const std::vector<int>& kList);

}  // namespace opuc
