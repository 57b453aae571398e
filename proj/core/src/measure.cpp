#include "opuc/measure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>

#include "opuc/fft.hpp"

namespace opuc {

GridFunction::GridFunction(std::vector<cplx> samples, double offset)
    : values_(std::move(samples)), offset_(offset) {}

GridFunction GridFunction::real(const std::vector<double>& samples, double offset) {
  std::vector<cplx> v(samples.begin(), samples.end());
  return GridFunction(std::move(v), offset);
}

std::vector<double> GridFunction::real_part() const {
  std::vector<double> out(values_.size());
  for (size_t j = 0; j < values_.size(); ++j) out[j] = values_[j].real();
  return out;
}

double GridFunction::mean_real() const {
  double s = 0.0;
  for (const auto& v : values_) s += v.real();
  return s / static_cast<double>(values_.size());
}

namespace {

void check_grid_size(int M) {
  if (M < 16 || (M & (M - 1)) != 0)
    throw Error(ErrorKind::InvalidArgument, "grid size must be a power of two >= 16, got " + std::to_string(M));
}

void check_radius(cplx z, int M) {
  const double r = std::abs(z);
  const double rmax = std::min(1.0 - 1e-6, max_quadrature_radius(M));
  if (r > rmax) {
    std::ostringstream os;
    os.precision(17);
    os << "|z| = " << r << " is too close to the circle for M = " << M
       << " nodes; largest resolved radius is " << rmax;
    throw Error(ErrorKind::RadiusTooLarge, os.str());
  }
}

std::vector<double> angles_of(const std::vector<Atom>& atoms, const std::vector<BoundaryZero>& zeros) {
  std::vector<double> a;
  for (const auto& at : atoms) a.push_back(at.theta);
  for (const auto& z : zeros) a.push_back(z.theta);
  return a;
}

}  // namespace

double choose_log_offset(int M, const std::vector<double>& avoid) {
  if (avoid.empty()) return 0.0;
  const double h = kTwoPi / M;
  double best = 0.5;
  double bestDist = -1.0;
  for (double s : {0.5, 0.25, 0.75, 0.125, 0.375, 0.625, 0.875}) {
    double dmin = std::numeric_limits<double>::infinity();
    for (double t : avoid) {
      // distance from t to the nearest node 2 pi (j + s) / M
      double u = t / h - s;
      double frac = std::abs(u - std::round(u));
      dmin = std::min(dmin, frac * h);
    }
    if (dmin > bestDist + 1e-15) {
      bestDist = dmin;
      best = s;
    }
  }
  return best;
}

CircleMeasure CircleMeasure::from_density(const Density& w, int gridSize, std::vector<Atom> atoms,
                                          std::vector<BoundaryZero> zeros, std::string label) {
  check_grid_size(gridSize);
  std::vector<double> pub(gridSize);
  for (int j = 0; j < gridSize; ++j) pub[j] = w(kTwoPi * j / gridSize);
  const double s = choose_log_offset(gridSize, angles_of(atoms, zeros));
  std::vector<double> lg;
  if (s != 0.0) {
    lg.resize(gridSize);
    for (int j = 0; j < gridSize; ++j) lg[j] = w(kTwoPi * (j + s) / gridSize);
  }
  return from_grids(std::move(pub), std::move(lg), s, std::move(atoms), std::move(zeros), std::move(label), w);
}

CircleMeasure CircleMeasure::from_samples(std::vector<double> samples, std::vector<Atom> atoms, std::string label) {
  check_grid_size(static_cast<int>(samples.size()));
  return from_grids(std::move(samples), {}, 0.0, std::move(atoms), {}, std::move(label), {});
}

CircleMeasure CircleMeasure::from_grids(std::vector<double> publicGrid, std::vector<double> logGrid, double logOffset,
                                        std::vector<Atom> atoms, std::vector<BoundaryZero> zeros, std::string label,
                                        Density pointwise) {
  check_grid_size(static_cast<int>(publicGrid.size()));
  CircleMeasure m;
  m.w_ = std::move(publicGrid);
  if (logOffset == 0.0 || logGrid.empty()) {
    m.wLog_ = m.w_;
    m.logOffset_ = 0.0;
  } else {
    if (logGrid.size() != m.w_.size()) throw Error(ErrorKind::InvalidArgument, "log grid size mismatch");
    m.wLog_ = std::move(logGrid);
    m.logOffset_ = logOffset;
  }
  for (const auto& a : atoms) {
    if (!(a.mass > 0.0)) throw Error(ErrorKind::InvalidArgument, "atom masses must be positive");
  }
  for (const auto& z : zeros) {
    if (z.order < 1) throw Error(ErrorKind::InvalidArgument, "zero order must be >= 1");
  }
  for (double v : m.w_)
    if (!(v >= 0.0) || !std::isfinite(v)) throw Error(ErrorKind::InvalidArgument, "density samples must be finite and >= 0");
  m.atoms_ = std::move(atoms);
  m.zeros_ = std::move(zeros);
  m.label_ = std::move(label);
  m.pointwise_ = std::move(pointwise);
  m.finalize();
  return m;
}

void CircleMeasure::finalize() {
  const int M = grid_size();
  std::vector<cplx> x(w_.begin(), w_.end());
  auto X = dft(x);
  acFourier_.assign(M / 2, 0.0);
  for (int k = 0; k < M / 2; ++k) acFourier_[k] = X[k] / static_cast<double>(M);

  logReduced_.assign(M, 0.0);
  double change = 0.0;
  for (int j = 0; j < M; ++j) {
    const cplx xi = unit(kTwoPi * (j + logOffset_) / M);
    double r = wLog_[j];
    for (const auto& z : zeros_) r /= std::pow(std::norm(xi - unit(z.theta)), z.order);
    if (r < kDensityFloor) {
      change += r > 0.0 ? std::log(kDensityFloor) - std::log(r) : std::numeric_limits<double>::infinity();
      r = kDensityFloor;
    }
    logReduced_[j] = std::log(r);
  }
  clampChange_ = change / M;
}

double CircleMeasure::total_mass() const {
  double m = ac_mass();
  for (const auto& a : atoms_) m += a.mass;
  return m;
}

double CircleMeasure::density_at(double theta) const {
  if (pointwise_) return pointwise_(theta);
  const cplx e = unit(theta);
  cplx acc = 0.0;
  for (int k = static_cast<int>(acFourier_.size()) - 1; k >= 1; --k) acc = (acc + acFourier_[k]) * e;
  return acFourier_[0].real() + 2.0 * acc.real();
}

const std::vector<double>& CircleMeasure::log_reduced() const {
  if (clampChange_ > kClampRefusal) {
    std::ostringstream os;
    os << "density floor " << kDensityFloor << " changes int log w by " << clampChange_
       << " (limit " << kClampRefusal << "); supply the measure with its boundary zeros declared";
    throw Error(ErrorKind::DensityFloor, os.str());
  }
  return logReduced_;
}

CircleMeasure CircleMeasure::with_grid_size(int M) const {
  if (M == grid_size()) return *this;
  if (!pointwise_) throw Error(ErrorKind::InvalidArgument, "grid size can only change for measures with a closed-form density");
  auto out = from_density(pointwise_, M, atoms_, zeros_, label_);
  out.exactA_ = exactA_;
  return out;
}

CircleMeasure normalize(const CircleMeasure& mu) {
  const double t = mu.total_mass();
  if (!(t > 0.0)) throw Error(ErrorKind::InvalidArgument, "normalize: total mass is zero");
  auto scale = [t](std::vector<double> v) {
    for (auto& x : v) x /= t;
    return v;
  };
  std::vector<Atom> atoms = mu.atoms();
  for (auto& a : atoms) a.mass /= t;
  CircleMeasure::Density pw;
  if (mu.has_pointwise_density()) pw = [mu, t](double th) { return mu.density_at(th) / t; };
  auto out = CircleMeasure::from_grids(scale(mu.density()), scale(mu.log_grid_density()), mu.log_offset(), atoms,
                                       mu.zeros(), mu.label(), pw);
  if (mu.exact_verblunsky()) out.set_exact_verblunsky(*mu.exact_verblunsky());
  return out;
}

std::vector<cplx> moments(const CircleMeasure& mu, int K) {
  const int M = mu.grid_size();
  if (K < 0) throw Error(ErrorKind::InvalidArgument, "moments: negative count");
  if (K >= M / 2)
    throw Error(ErrorKind::InvalidArgument,
                "moments: K = " + std::to_string(K) + " aliases on M = " + std::to_string(M) + " nodes (need K < M/2)");
  std::vector<cplx> c(K + 1);
  for (int k = 0; k <= K; ++k) {
    c[k] = mu.ac_fourier()[k];
    for (const auto& a : mu.atoms()) c[k] += a.mass * unit(-k * a.theta);
  }
  return c;
}

double max_quadrature_radius(int M) { return std::exp(std::log(1e-13) / M); }

double poisson_kernel(cplx xi, cplx z) { return (1.0 - std::norm(z)) / std::norm(xi - z); }

double poisson_extend(const GridFunction& v, cplx z) {
  const int M = v.size();
  check_radius(z, M);
  double s = 0.0;
  for (int j = 0; j < M; ++j) s += v[j].real() * poisson_kernel(v.node(j), z);
  return s / M;
}

double poisson_extend(const CircleMeasure& mu, cplx z) {
  const int M = mu.grid_size();
  check_radius(z, M);
  const auto& w = mu.density();
  double s = 0.0;
  for (int j = 0; j < M; ++j) s += w[j] * poisson_kernel(unit(kTwoPi * j / M), z);
  s /= M;
  for (const auto& a : mu.atoms()) s += a.mass * poisson_kernel(unit(a.theta), z);
  return s;
}

double poisson_log(const CircleMeasure& mu, cplx z) {
  const int M = mu.grid_size();
  check_radius(z, M);
  const auto& lr = mu.log_reduced();
  double s = 0.0;
  for (int j = 0; j < M; ++j) s += lr[j] * poisson_kernel(unit(kTwoPi * (j + mu.log_offset()) / M), z);
  s /= M;
  for (const auto& zr : mu.zeros()) s += zr.order * std::log(std::norm(z - unit(zr.theta)));
  return s;
}

double mean_log(const CircleMeasure& mu) {
  const auto& lr = mu.log_reduced();
  return std::accumulate(lr.begin(), lr.end(), 0.0) / static_cast<double>(lr.size());
}

cplx szego_function(const CircleMeasure& mu, cplx z) {
  const int M = mu.grid_size();
  check_radius(z, M);
  const auto& lr = mu.log_reduced();
  cplx h = 0.0;
  for (int j = 0; j < M; ++j) {
    const cplx xi = unit(kTwoPi * (j + mu.log_offset()) / M);
    h += lr[j] * (xi + z) / (xi - z);
  }
  h /= static_cast<double>(M);
  cplx d = std::exp(0.5 * h);
  for (const auto& zr : mu.zeros()) d *= std::pow(1.0 - std::conj(unit(zr.theta)) * z, zr.order);
  return d;
}

GridFunction harmonic_conjugate(const GridFunction& u) {
  const int M = u.size();
  std::vector<cplx> x(M);
  for (int j = 0; j < M; ++j) x[j] = u[j].real();
  auto X = dft(x);
  for (int k = 0; k < M; ++k) {
    const int f = signed_frequency(k, M);
    if (f == 0 || f == M / 2) X[k] = 0.0;
    else X[k] *= cplx(0.0, f > 0 ? -1.0 : 1.0);
  }
  auto y = idft(X);
  std::vector<cplx> out(M);
  for (int j = 0; j < M; ++j) out[j] = y[j].real();
  return GridFunction(std::move(out), u.offset());
}

GridFunction boundary_caratheodory(const CircleMeasure& mu, bool logGrid) {
  const double offset = logGrid ? mu.log_offset() : 0.0;
  const auto& w = logGrid ? mu.log_grid_density() : mu.density();
  auto wg = GridFunction::real(w, offset);
  auto q = harmonic_conjugate(wg);
  const int M = wg.size();
  std::vector<cplx> F(M);
  for (int j = 0; j < M; ++j) {
    const cplx xi = wg.node(j);
    cplx v(w[j], q[j].real());
    bool hit = false;
    for (const auto& a : mu.atoms()) {
      const cplx xa = unit(a.theta);
      if (std::abs(xa - xi) < 1e-14) {
        hit = true;
        break;
      }
      v += a.mass * (xa + xi) / (xa - xi);
    }
    F[j] = hit ? cplx(std::numeric_limits<double>::infinity(), 0.0) : v;
  }
  return GridFunction(std::move(F), offset);
}

GridFunction boundary_schur(const CircleMeasure& mu, bool logGrid) {
  auto F = boundary_caratheodory(mu, logGrid);
  std::vector<cplx> f(F.size());
  for (int j = 0; j < F.size(); ++j) {
    const cplx xi = F.node(j);
    if (std::isinf(F[j].real())) f[j] = std::conj(xi);
    else f[j] = (F[j] - 1.0) / (xi * (F[j] + 1.0));
  }
  return GridFunction(std::move(f), F.offset());
}

std::vector<cplx> polar_grid(int angles) {
  std::vector<cplx> z;
  std::vector<double> radii = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 0.99};
  for (double r : radii)
    for (int k = 0; k < angles; ++k) z.push_back(r * unit(kTwoPi * k / angles));
  return z;
}

double ainfP_characteristic(const GridFunction& w, const std::vector<cplx>& zGrid) {
  const int M = w.size();
  std::vector<double> lw(M);
  double change = 0.0;
  for (int j = 0; j < M; ++j) {
    double v = w[j].real();
    if (v < kDensityFloor) {
      change += v > 0.0 ? std::log(kDensityFloor) - std::log(v) : std::numeric_limits<double>::infinity();
      v = kDensityFloor;
    }
    lw[j] = std::log(v);
  }
  if (change / M > kClampRefusal)
    throw Error(ErrorKind::DensityFloor, "ainfP_characteristic: density floor would change int log w by more than 1e-6");
  auto lg = GridFunction::real(lw, w.offset());
  double best = 0.0;
  for (const auto& z : zGrid) best = std::max(best, poisson_extend(w, z) * std::exp(-poisson_extend(lg, z)));
  return best;
}

double ainfP_characteristic(const CircleMeasure& mu, const std::vector<cplx>& zGrid) {
  double best = 0.0;
  for (const auto& z : zGrid) best = std::max(best, poisson_extend(mu, z) * std::exp(-poisson_log(mu, z)));
  return best;
}

GridFunction weight_from_schur_boundary(const GridFunction& f) {
  std::vector<cplx> w(f.size());
  for (int j = 0; j < f.size(); ++j) {
    const double a = std::abs(f[j]);
    if (a > 1.0 + 1e-10)
      throw Error(ErrorKind::InvalidArgument, "weight_from_schur_boundary: |f| = " + std::to_string(a) + " exceeds 1");
    const double den = std::norm(1.0 - f.node(j) * f[j]);
    if (den == 0.0) throw Error(ErrorKind::Singular, "weight_from_schur_boundary: xi f(xi) = 1 at a grid node");
    w[j] = std::max(0.0, 1.0 - std::norm(f[j])) / den;
  }
  return GridFunction(std::move(w), f.offset());
}

namespace {

double schur_weight(cplx xi, cplx g) {
  return std::max(0.0, 1.0 - std::norm(g)) / std::norm(1.0 - xi * g);
}

// Nodes this close to a candidate point are evaluated by extrapolation, since
// 1 - |g|^2 and |1 - xi g|^2 both vanish there.
constexpr double kCandidateRadius = 1e-6;

struct Candidate {
  double theta;
  int order;          // vanishing order of 1 - |g|^2
  bool atom = false;  // xi g(xi) = 1 here
  int densityOrder = 0;
};

}  // namespace

std::vector<BoundaryZero> unimodular_points(const CircleMeasure& mu) {
  std::vector<BoundaryZero> pts;
  auto add = [&](double theta, int order) {
    for (auto& p : pts) {
      if (circular_distance(p.theta, theta) < 1e-12) {
        p.order += order;
        return;
      }
    }
    pts.push_back({theta, order});
  };
  for (const auto& z : mu.zeros()) add(z.theta, z.order);
  for (const auto& a : mu.atoms()) add(a.theta, 1);
  return pts;
}

CircleMeasure measure_from_schur(const BoundarySchur& g, const CircleMeasure& parent, std::string label) {
  const int M = parent.grid_size();
  if (g.publicGrid.size() != M || g.logGrid.size() != M)
    throw Error(ErrorKind::InvalidArgument, "measure_from_schur: grid size mismatch");

  std::vector<Candidate> cands;
  for (const auto& p : unimodular_points(parent)) cands.push_back({p.theta, p.order});

  std::vector<Atom> atoms;
  std::vector<BoundaryZero> zeros;
  auto h = [&](double t) { return unit(t) * g.pointwise(t); };
  for (auto& c : cands) {
    const cplx h0 = h(c.theta);
    if (std::abs(1.0 - h0) < 1e-6) {
      const double d = 1e-3;
      const cplx dh = (-h(c.theta + 2 * d) + 8.0 * h(c.theta + d) - 8.0 * h(c.theta - d) + h(c.theta - 2 * d)) / (12.0 * d);
      const cplx mass = cplx(0.0, 1.0) / dh;
      if (!(mass.real() > 0.0) || std::abs(mass.imag()) > 1e-6 * std::max(1.0, mass.real()))
        throw Error(ErrorKind::Consistency, "measure_from_schur: atom mass is not a positive real number");
      double th = std::remainder(c.theta, kTwoPi);
      if (th >= kPi) th -= kTwoPi;
      atoms.push_back({th, mass.real()});
      c.atom = true;
      c.densityOrder = c.order - 1;
    } else {
      c.densityOrder = c.order;
    }
    if (c.densityOrder > 0) zeros.push_back({c.theta, c.densityOrder});
  }

  auto pointwise = [g, cands](double t) {
    for (const auto& c : cands) {
      if (circular_distance(c.theta, t) < kCandidateRadius) {
        if (c.densityOrder > 0) return 0.0;
        const double d = 1e-3;
        auto wv = [&](double s) { return schur_weight(unit(s), g.pointwise(s)); };
        const double a1 = 0.5 * (wv(t + d) + wv(t - d));
        const double a2 = 0.5 * (wv(t + 2 * d) + wv(t - 2 * d));
        return (4.0 * a1 - a2) / 3.0;
      }
    }
    return schur_weight(unit(t), g.pointwise(t));
  };

  auto fill = [&](const GridFunction& gg) {
    std::vector<double> w(M);
    for (int j = 0; j < M; ++j) {
      const double t = gg.theta(j);
      bool near = false;
      for (const auto& c : cands) near = near || circular_distance(c.theta, t) < kCandidateRadius;
      w[j] = near ? pointwise(t) : schur_weight(gg.node(j), gg[j]);
    }
    return w;
  };

  auto out = CircleMeasure::from_grids(fill(g.publicGrid), fill(g.logGrid), g.logGrid.offset(), atoms, zeros,
                                       std::move(label), pointwise);
  if (std::abs(out.total_mass() - 1.0) > 1e-6) {
    std::ostringstream os;
    os << "measure_from_schur: realized mass " << out.total_mass() << " differs from 1 (density peak narrower than the grid? try a larger gridSize)";
    throw Error(ErrorKind::Consistency, os.str());
  }
  return out;
}

}  // namespace opuc

namespace opuc {

double entropy_definition(const CircleMeasure& mu, cplx z) {
  return std::log(poisson_extend(mu, z)) - poisson_log(mu, z);
}

}  // namespace opuc
