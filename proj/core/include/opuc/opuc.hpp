#pragma once

#include <memory>
#include <vector>

#include "opuc/iterates.hpp"
#include "opuc/measure.hpp"
#include "opuc/poly.hpp"
#include "opuc/schur.hpp"

namespace opuc {

// Orthonormal polynomials phi_n, their reversals, the second-kind
// polynomials psi_n (recursion with -a) and leading coefficients k_n.
class OPUCSystem {
 public:
  VerblunskySeq a;
  std::vector<ComplexPoly> phi, phiStar, psi, psiStar;
  std::vector<double> leading;
  // Largest coefficient mismatch in phi_{n+1} = k_{n+1}(z B_n^* - A_n^*),
  // phi_{n+1}^* = k_{n+1}(B_n - z A_n), psi_{n+1} = k_{n+1}(z B_n^* + A_n^*)
  // and psi_{n+1}^* = k_{n+1}(B_n + z A_n), relative to k_{n+1}.
  double wallResidual = 0.0;

  int max_degree() const { return static_cast<int>(phi.size()) - 1; }
  // Zeros of phi_n, computed on first use and cached.
  const RootSet& zeros(int n) const;
  // b_n = phi_n / phi_n^*.
  cplx blaschke(int n, cplx z) const;

 private:
  friend OPUCSystem szego_recursion(const VerblunskySeq&, int);
  struct ZeroCache;
  std::shared_ptr<ZeroCache> cache_;
};

// Throws Consistency if the Wall cross-check exceeds 1e-10.
OPUCSystem szego_recursion(const VerblunskySeq& a, int N);

struct ArgumentProfile {
  int n = 0;
  int l = 0;                  // multiplicity of the zero at the origin
  std::vector<cplx> zeros;    // nonzero zeros of phi_n
  double gamma0 = 0.0;        // principal arg b_n(1)
  double gamma_prime(double t) const;
  // Exact antiderivative of gamma_prime anchored at gamma0: every Blaschke
  // factor contributes t + 2 (arg(1 - z_j e^{-it}) - arg(1 - z_j)).
  double gamma(double t) const;
};

ArgumentProfile argument_profile(const OPUCSystem& sys, int n);

struct CDNorm {
  double lhs;  // sum_{j<n} |phi_j(xi)|^2
  double rhs;  // |phi_n^*(xi)|^2 gamma_n'(t)
  double relError;
};
CDNorm cd_kernel_norm(const OPUCSystem& sys, double t, int n);

struct KhrushchevResidual {
  GridFunction residual;  // | |phi_n^*|^2 w - (1 - |f_n|^2) / |1 - xi b_n f_n|^2 |
  double max = 0.0;
};
KhrushchevResidual khrushchev_residual(const OPUCSystem& sys, const SchurModel& model, int n);

// |p|^2 dmu on the same grids.
CircleMeasure reweight(const CircleMeasure& mu, const ComplexPoly& p, std::string label = {});

struct EntropyPair {
  double lhs;
  double rhs;
  double diff() const { return std::abs(lhs - rhs); }
};
// K(|phi_n^*|^2 dmu, z) against K(mu_n, z) + log((1 - |z b_n f_n|^2) / (1 - |z f_n|^2)).
EntropyPair khrushchev_measure_transform(const OPUCSystem& sys, const SchurModel& model, int n, cplx z);

// psi_n^* / phi_n^*: Caratheodory function of |phi_n^*|^{-2} dm.
cplx hat_caratheodory(const OPUCSystem& sys, int n, cplx z);

}  // namespace opuc
