#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "opuc/common.hpp"

namespace opuc {

inline constexpr int kDefaultGridSize = 4096;
inline constexpr double kDensityFloor = 1e-12;
inline constexpr double kClampRefusal = 1e-6;

// Samples on the equispaced nodes xi_j = exp(2 pi i (j + offset) / M).
// offset is a fraction of one grid step; the public grid uses offset 0.
class GridFunction {
 public:
  GridFunction() = default;
  explicit GridFunction(std::vector<cplx> samples, double offset = 0.0);
  static GridFunction real(const std::vector<double>& samples, double offset = 0.0);

  int size() const { return static_cast<int>(values_.size()); }
  double offset() const { return offset_; }
  double theta(int j) const { return kTwoPi * (j + offset_) / size(); }
  cplx node(int j) const { return unit(theta(j)); }
  const std::vector<cplx>& values() const { return values_; }
  cplx operator[](int j) const { return values_[j]; }
  std::vector<double> real_part() const;
  double mean_real() const;

 private:
  std::vector<cplx> values_;
  double offset_ = 0.0;
};

struct Atom {
  double theta;  // in [-pi, pi)
  double mass;
};

// A boundary point where the density vanishes like |xi - xi0|^(2 order).
struct BoundaryZero {
  double theta;
  int order;
};

// Probability measure w dm + sum of atoms on the unit circle.
//
// The density is held on two grids: the public grid (offset 0), used for
// moments and Poisson integrals of w, and a "log grid" whose offset keeps
// every node away from declared zeros and atoms. Integrals of log w are
// taken on the log grid after dividing out the declared zero factors, whose
// Poisson extensions are known in closed form.
class CircleMeasure {
 public:
  using Density = std::function<double(double)>;

  // Density given pointwise; zeros must list every boundary zero of w.
  static CircleMeasure from_density(const Density& w, int gridSize, std::vector<Atom> atoms = {},
                                    std::vector<BoundaryZero> zeros = {}, std::string label = {});
  // Density known only through samples on the public grid.
  static CircleMeasure from_samples(std::vector<double> samples, std::vector<Atom> atoms = {},
                                    std::string label = {});
  // Samples on both grids already computed by the caller.
  static CircleMeasure from_grids(std::vector<double> publicGrid, std::vector<double> logGrid,
                                  double logOffset, std::vector<Atom> atoms,
                                  std::vector<BoundaryZero> zeros, std::string label = {},
                                  Density pointwise = {});

  int grid_size() const { return static_cast<int>(w_.size()); }
  const std::vector<double>& density() const { return w_; }
  const std::vector<double>& log_grid_density() const { return wLog_; }
  double log_offset() const { return logOffset_; }
  const std::vector<Atom>& atoms() const { return atoms_; }
  const std::vector<BoundaryZero>& zeros() const { return zeros_; }
  const std::string& label() const { return label_; }
  void set_label(std::string s) { label_ = std::move(s); }

  double ac_mass() const { return acFourier_[0].real(); }
  double total_mass() const;
  bool has_pointwise_density() const { return static_cast<bool>(pointwise_); }
  // w at an arbitrary angle: the closed form when known, else the
  // trigonometric interpolant of the public-grid samples.
  double density_at(double theta) const;

  // Fourier coefficients hat w_k = int w xi^{-k} dm, 0 <= k < M/2.
  const std::vector<cplx>& ac_fourier() const { return acFourier_; }

  // log r_j on the log grid, where r = w / prod |xi - xi_k|^(2 m_k).
  // Throws DensityFloor when clamping at the floor would move int log w by
  // more than kClampRefusal.
  const std::vector<double>& log_reduced() const;
  double clamp_change() const { return clampChange_; }

  // Verblunsky coefficients known exactly from construction (finite list,
  // zero afterwards).
  const std::optional<std::vector<cplx>>& exact_verblunsky() const { return exactA_; }
  void set_exact_verblunsky(std::vector<cplx> a) { exactA_ = std::move(a); }

  CircleMeasure with_grid_size(int M) const;

 private:
  CircleMeasure() = default;
  void finalize();

  std::vector<double> w_;
  std::vector<double> wLog_;
  double logOffset_ = 0.0;
  std::vector<Atom> atoms_;
  std::vector<BoundaryZero> zeros_;
  std::string label_;
  Density pointwise_;
  std::vector<cplx> acFourier_;
  std::vector<double> logReduced_;
  double clampChange_ = 0.0;
  std::optional<std::vector<cplx>> exactA_;
};

// Offset (fraction of a step) for the log grid that keeps nodes farthest
// from the given angles.
double choose_log_offset(int M, const std::vector<double>& avoid);

CircleMeasure normalize(const CircleMeasure& mu);

// c_k = int conj(xi)^k dmu, 0 <= k <= K. Requires K < M/2.
std::vector<cplx> moments(const CircleMeasure& mu, int K);

// Largest |z| at which the trapezoid rule resolves the Poisson kernel to
// about 1e-13 on M nodes.
double max_quadrature_radius(int M);

double poisson_kernel(cplx xi, cplx z);
// P(v, z) for samples v on any offset grid.
double poisson_extend(const GridFunction& v, cplx z);
// P(mu, z): density by quadrature, atoms exactly.
double poisson_extend(const CircleMeasure& mu, cplx z);
// P(log w, z), including the closed-form zero factors.
double poisson_log(const CircleMeasure& mu, cplx z);
// int log w dm.
double mean_log(const CircleMeasure& mu);

// Outer function with |D| = sqrt(w) on the circle and D(0) > 0.
cplx szego_function(const CircleMeasure& mu, cplx z);

// Conjugate function via the Fourier multiplier -i sign(k); the Nyquist
// mode is dropped. Works on any offset grid.
GridFunction harmonic_conjugate(const GridFunction& u);

// F = w + iQw + atom terms on the grid with the given offset; nodes that hit
// an atom are returned as infinity.
GridFunction boundary_caratheodory(const CircleMeasure& mu, bool logGrid);
// Boundary Schur function f = (F - 1) / (xi (F + 1)) on the chosen grid.
GridFunction boundary_schur(const CircleMeasure& mu, bool logGrid);

// The polar sweep grid: radii 0.1..0.9, 0.95, 0.99 times `angles` angles.
std::vector<cplx> polar_grid(int angles = 256);

// max over zGrid of P(w, z) exp(-P(log w, z)). The sample overload applies
// the density floor; the measure overload uses the zero-aware log.
double ainfP_characteristic(const GridFunction& w, const std::vector<cplx>& zGrid);
double ainfP_characteristic(const CircleMeasure& mu, const std::vector<cplx>& zGrid);

// w = (1 - |f|^2) / |1 - xi f|^2 pointwise.
GridFunction weight_from_schur_boundary(const GridFunction& f);

// Points where the Schur function of mu (and every iterate and Clark
// rotation of it) has modulus 1, with the order to which 1 - |f|^2
// vanishes: the order of each declared zero plus one at each atom.
std::vector<BoundaryZero> unimodular_points(const CircleMeasure& mu);

// Boundary data of a Schur function g used to realize its measure.
struct BoundarySchur {
  GridFunction publicGrid;
  GridFunction logGrid;
  std::function<cplx(double)> pointwise;  // g(exp(i theta))
};

// The measure whose Schur function has boundary values g. `parent` supplies
// the grids and the candidate points where |g| = 1 (its zeros and atoms);
// atoms of the new measure are placed where xi g(xi) = 1 with mass from the
// boundary derivative, and the density order there drops by one.
CircleMeasure measure_from_schur(const BoundarySchur& g, const CircleMeasure& parent,
                                 std::string label = {});

}  // namespace opuc

namespace opuc {

// log P(mu, z) - P(log w, z). Also used for weights that are not
// probability densities, without normalizing them.
double entropy_definition(const CircleMeasure& mu, cplx z);

}  // namespace opuc
