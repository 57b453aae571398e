#pragma once

#include <vector>

#include "opuc/iterates.hpp"
#include "opuc/measure.hpp"
#include "opuc/opuc.hpp"

namespace opuc {

// K(mu, z) by the definition log P(mu, z) - P(log w, z) and by the Schur
// form log(1 - |z f(z)|^2) - P(log(1 - |f|^2), z).
struct EntropyForms {
  double definition = 0.0;
  double schur = 0.0;
  double diff() const { return std::abs(definition - schur); }
};
EntropyForms entropy_forms(const SchurModel& model, cplx z);
// Definition form; requires |z| <= 0.99.
double entropy(const CircleMeasure& mu, cplx z);

// One row of the product formula K(mu, z) = sum_n log((1-|z f_n|^2)/(1-|f_n|^2)).
struct EntropyRow {
  cplx z;
  double K = 0.0;
  std::vector<double> partial;  // cumulative sums over n
  double product = 0.0;         // last partial sum
  double tailBound = 0.0;
  double residual = 0.0;        // |K - product|
  bool monotone = true;
  int terms = 0;
};
EntropyRow theorem1_product(const SchurModel& model, cplx z, int nMax);

struct EntropyReport {
  std::vector<EntropyRow> rows;
  double maxResidual = 0.0;
  double maxExcess = 0.0;  // max over rows of residual - tailBound
};
EntropyReport entropy_report(const SchurModel& model, const std::vector<cplx>& zGrid, int nMax);

// K(mu, z) = K(mu_1, z) + log((1 - |z f(z)|^2) / (1 - |f(z)|^2)).
struct ChainStep {
  double K = 0.0, K1 = 0.0, factor = 0.0;
  double residual() const { return std::abs(K - K1 - factor); }
};
ChainStep entropy_chain_step(const SchurModel& model, cplx z);

struct MonotonicityReport {
  std::vector<std::vector<double>> K;  // K[n][i] = K(mu_n, zGrid[i])
  double worstViolation = 0.0;         // max of K(mu_n, z) - K(mu, z)
  int worstN = 0;
  cplx worstZ{};
};
MonotonicityReport entropy_monotonicity(const SchurModel& model, const std::vector<cplx>& zGrid, int nMax);

// K applied to the weight 1 - |f_n|^2 (not normalized) against K(mu, z).
struct BoundPair {
  double weightK = 0.0, measureK = 0.0;
  double margin() const { return measureK - weightK; }
};
BoundPair weight_entropy_bound(const SchurModel& model, cplx z, int n);

// The measure with Schur function alpha f.
CircleMeasure clark_measure(const SchurModel& model, cplx alpha);
struct ClarkReport {
  double maxDiff = 0.0;
  cplx worstZ{};
};
ClarkReport clark_dual_invariance(const SchurModel& model, const std::vector<cplx>& zGrid, cplx alpha);

struct BernsteinSzego {
  CircleMeasure measure;
  cplx c{};                     // f_n(z*)
  double massError = 0.0;
  double iterateError = 0.0;    // max_k<=n |hat f_k(z*) - f_k(z*)| and |hat f_{n+1}(z*)|
  double K = 0.0, Khat = 0.0, Knext = 0.0;
  double additivityError() const { return std::abs(K - Khat - Knext); }
};
// Weight (1 - |c|^2) / |phi_n^*(xi) - xi c phi_n(xi)|^2 with c = f_n(z*).
BernsteinSzego bernstein_szego_approx(const SchurModel& model, int n, cplx zStar);

struct RatioReport {
  double maxRatio = 0.0;
  int worstN = 0;
  cplx worstZ{};
  int evaluated = 0;
  bool finite = true;
};
// P(|f_n - f_n(z)|, z) / sqrt(K(mu, z)), skipping K < 1e-10.
RatioReport oscillation_bound(const SchurModel& model, const std::vector<cplx>& zGrid, int nMax);

// eta(z) = max(sqrt K, K exp(K / 2)).
class EtaFunction {
 public:
  explicit EtaFunction(const CircleMeasure& mu) : mu_(mu) {}
  double operator()(cplx z) const;

 private:
  const CircleMeasure& mu_;
};

inline constexpr double kEtaFloor = 1e-8;
// max over z with eta(z) >= 1e-8 of P(|v - P(v,z)|, z) / eta(z).
RatioReport bmo_eta_norm(const GridFunction& v, const CircleMeasure& mu, const std::vector<cplx>& zGrid);

// log w on the log grid, including the zero factors.
GridFunction log_density(const CircleMeasure& mu);

}  // namespace opuc
