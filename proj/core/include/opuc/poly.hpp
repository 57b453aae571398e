#pragma once

#include <vector>

#include "opuc/common.hpp"

namespace opuc {

// Polynomial with complex coefficients in ascending order. Trailing zero
// coefficients are trimmed, so the stored degree is the true degree; the
// zero polynomial has a single zero coefficient and degree 0.
class ComplexPoly {
 public:
  ComplexPoly() : coeffs_{cplx{0.0}} {}
  explicit ComplexPoly(std::vector<cplx> coeffs);

  static ComplexPoly constant(cplx c) { return ComplexPoly({c}); }
  static ComplexPoly monomial(int n, cplx c = 1.0);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == cplx{0.0}; }
  const std::vector<cplx>& coeffs() const { return coeffs_; }
  // Coefficient of z^k, zero beyond the degree.
  cplx operator[](int k) const;

  ComplexPoly& operator+=(const ComplexPoly& o);
  ComplexPoly& operator-=(const ComplexPoly& o);
  ComplexPoly& operator*=(cplx s);

 private:
  std::vector<cplx> coeffs_;
};

ComplexPoly operator+(ComplexPoly a, const ComplexPoly& b);
ComplexPoly operator-(ComplexPoly a, const ComplexPoly& b);
ComplexPoly operator*(ComplexPoly a, cplx s);
ComplexPoly operator*(cplx s, ComplexPoly a);
ComplexPoly operator*(const ComplexPoly& a, const ComplexPoly& b);
// Multiply by z^k.
ComplexPoly shift(const ComplexPoly& p, int k);

// Horner evaluation.
cplx eval(const ComplexPoly& p, cplx z);
// p(z) and p'(z) in one pass.
void eval_with_derivative(const ComplexPoly& p, cplx z, cplx& value, cplx& deriv);

// z^n conj(p(1/conj z)): coefficient k is conj(coefficient n-k of p).
ComplexPoly reverse_star(const ComplexPoly& p, int n);

// Largest |coefficient|, used to scale residual and equality checks.
double coeff_scale(const ComplexPoly& p);
double max_coeff_diff(const ComplexPoly& a, const ComplexPoly& b);

struct RootOptions {
  int max_iterations = 200;
  double residual_tol = 1e-10;  // relative backward error per root
  double cluster_tol = 1e-7;
};

struct RootCluster {
  cplx center;
  int multiplicity;
};

struct RootSet {
  std::vector<cplx> roots;        // with multiplicity, clustered roots replaced by their mean
  std::vector<double> residuals;  // |p(r)| / sum_k |c_k| |r|^k
  std::vector<RootCluster> clusters;
  int iterations = 0;
};

class RootError : public Error {
 public:
  RootError(const std::string& what, std::vector<cplx> best, double worst)
      : Error(ErrorKind::NotConverged, what), best_(std::move(best)), worst_(worst) {}
  const std::vector<cplx>& best_iterate() const { return best_; }
  double worst_residual() const { return worst_; }

 private:
  std::vector<cplx> best_;
  double worst_;
};

// Aberth-Ehrlich simultaneous iteration. Exact factors of z are split off
// first and reported as a root at 0.
RootSet roots(const ComplexPoly& p, const RootOptions& opt = {});

}  // namespace opuc
