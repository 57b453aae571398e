#pragma once

#include <memory>
#include <vector>

#include "opuc/measure.hpp"
#include "opuc/schur.hpp"

namespace opuc {

// Result of evaluating f_n(z) along two independent routes.
struct IterateEval {
  cplx mobius;        // Schur-step route
  cplx wall;          // Wall-polynomial route
  double discrepancy;
  bool pointwise;     // both routes used the pointwise value f(z)
};

struct SchurModelOptions {
  int wallDegree = 256;
  // Pointwise routes are used while |z|^n stays above this; below it they
  // lose about log10(1/|z|^n) digits and the series/backward routes take over.
  double pointwiseFloor = 1e-5;
};

// Everything needed to evaluate the Schur family {f_n} of a measure: the
// Verblunsky coefficients, the Taylor series of f, the Wall polynomials and
// the boundary values of f.
//
// Routes for f_n(z):
//   mobius  |z|^n large: forward steps z f_{k+1} = (f_k - a_k)/(1 - conj(a_k) f_k)
//           from f(z); otherwise backward steps from a far index, which
//           contract by |z| per step. Not defined on the circle.
//   wall    |z|^n large: f_n = (f B - A)/(z (B^* - f A^*)) at index n-1;
//           otherwise the same quotient with both series divided by z^n
//           exactly before evaluation.
class SchurModel {
 public:
  explicit SchurModel(CircleMeasure mu, SchurModelOptions opt = {});

  const CircleMeasure& measure() const { return mu_; }
  const VerblunskySeq& verblunsky() const { return a_; }
  const SchurSeries& taylor() const { return data_->taylor; }
  int wall_degree() const { return static_cast<int>(wall_.size()) - 1; }
  const WallPolys& wall(int n) const;
  const SchurModelOptions& options() const { return opt_; }

  // F(z) for |z| <= 1 (infinite at atoms).
  cplx caratheodory(cplx z) const;
  // Schur function on the closed disk.
  cplx f(cplx z) const;

  // Production value of f_n(z), |z| <= 1.
  cplx iterate(int n, cplx z) const;
  cplx mobius_route(int n, cplx z) const;
  cplx wall_route(int n, cplx z) const;
  IterateEval schur_iterate_eval(int n, cplx z) const;

  // f_0(z) .. f_nMax(z) for interior z.
  std::vector<cplx> iterates_at(cplx z, int nMax) const;

  // Largest n for which iterates_at is reliable at this |z|.
  int max_reliable_index(cplx z) const;

  // Boundary values of f and f_n on the public and log grids.
  const GridFunction& boundary_f(bool logGrid) const { return logGrid ? fLog_ : fPub_; }
  BoundarySchur boundary_iterate(int n) const;
  // The measure mu_n with Schur function f_n.
  CircleMeasure iterate_measure(int n) const;

 private:
  bool use_pointwise(int n, cplx z) const;
  cplx wall_pointwise(int n, cplx z, cplx fz) const;
  cplx wall_series(int n, cplx z) const;
  cplx backward(int n, cplx z) const;

  CircleMeasure mu_;
  SchurModelOptions opt_;
  VerblunskySeq a_;
  // Shared with closures handed out by boundary_iterate, which may outlive
  // the model.
  struct Data {
    SchurSeries taylor;
    std::vector<cplx> cara;  // hat w_0, 2 hat w_1, 2 hat w_2, ...
    std::vector<Atom> atoms;
    cplx caratheodory(cplx z) const;
    cplx f(cplx z) const;
  };
  std::shared_ptr<const Data> data_;
  std::vector<WallPolys> wall_;
  GridFunction fPub_, fLog_;
};

}  // namespace opuc
