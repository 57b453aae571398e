#include "opuc/asymptotics.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "opuc/parallel.hpp"

namespace opuc {

namespace {
constexpr double kMeshCap = 0.999;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
}  // namespace

void szego_gate(const CircleMeasure& mu) {
  if (!(mu.ac_mass() > 1e-12))
    throw Error(ErrorKind::InvalidArgument, "Szego gate: the measure has no absolutely continuous part");
  double L;
  try {
    L = mean_log(mu);
  } catch (const Error& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("Szego gate: log w is not integrable (") + e.what() + ")");
  }
  if (!std::isfinite(L)) throw Error(ErrorKind::InvalidArgument, "Szego gate: int log w dm is not finite");
}

double dist_times_n(const OPUCSystem& sys, double theta, int n) {
  const cplx xi = unit(theta);
  double d = std::numeric_limits<double>::infinity();
  for (const auto& r : sys.zeros(n).roots) d = std::min(d, std::abs(xi - r));
  return n * d;
}

std::vector<double> zero_scaling(const OPUCSystem& sys, double theta, const std::vector<int>& nList) {
  std::vector<double> out(nList.size());
  parallel_for(nList.size(), [&](std::size_t i) { out[i] = dist_times_n(sys, theta, nList[i]); });
  return out;
}

std::vector<RadialValue> radial_schur(const SchurModel& model, double theta, double a, const std::vector<int>& nList) {
  if (!(a > 0.0)) throw Error(ErrorKind::InvalidArgument, "radial_schur: a must be positive");
  szego_gate(model.measure());
  const cplx xi = unit(theta);
  std::vector<RadialValue> out;
  for (int n : nList) {
    const double r = 1.0 - a / n;
    if (r < 0.5) {
      out.push_back({n, r, {kNaN, kNaN}, true});
      continue;
    }
    out.push_back({n, r, model.iterate(n, r * xi), false});
  }
  return out;
}

bool in_stolz(cplx z, double theta, double rho) {
  if (std::abs(z) <= rho) return true;
  const cplx w = 1.0 - z * unit(-theta);  // from xi toward the origin
  if (w.real() > 1.0 - rho * rho) return false;
  return std::abs(std::arg(w)) <= std::asin(rho) + 1e-15;
}

std::vector<cplx> stolz_mesh(double theta, double rho, int radial, int transverse) {
  if (!(rho > 0.0 && rho < 1.0)) throw Error(ErrorKind::InvalidArgument, "Stolz region: rho must lie in (0, 1)");
  const cplx xi = unit(theta);
  const double tanB = rho / std::sqrt(1.0 - rho * rho);
  std::vector<cplx> pts;
  double d = 1.0 + rho;
  for (int i = 0; i < radial; ++i, d /= 1.2) {
    const double half = d <= 1.0 - rho * rho ? d * tanB : std::sqrt(std::max(0.0, rho * rho - (1.0 - d) * (1.0 - d)));
    for (int j = 0; j < transverse; ++j) {
      const double u = transverse == 1 ? 0.0 : -1.0 + 2.0 * j / (transverse - 1);
      const cplx z = xi * cplx(1.0 - d, u * half);
      if (std::abs(z) <= kMeshCap) pts.push_back(z);
    }
  }
  return pts;
}

double stolz_sup(const SchurModel& model, double theta, double rho, int n) {
  const auto pts = stolz_mesh(theta, rho);
  std::vector<double> v(pts.size());
  parallel_for(pts.size(), [&](std::size_t i) { v[i] = std::abs(model.iterate(n, pts[i])); });
  double m = 0.0;
  for (double x : v) m = std::max(m, x);
  return m;
}

std::vector<double> phi_star_gap(const OPUCSystem& sys, const CircleMeasure& mu, double theta,
                                 const std::vector<int>& nList) {
  for (const auto& a : mu.atoms())
    if (circular_distance(a.theta, theta) < 1e-12) throw Error(ErrorKind::InvalidArgument, "phi_star_gap: xi is an atom");
  const double w = mu.density_at(theta);
  if (!(w > kDensityFloor))
    throw Error(ErrorKind::DensityFloor, "phi_star_gap: w(xi) is below the density floor, |D(xi)| is not usable");
  const cplx xi = unit(theta);
  std::vector<double> out;
  for (int n : nList) out.push_back(std::abs(std::norm(eval(sys.phiStar[n], xi)) - 1.0 / w));
  return out;
}

ScalingSeries scaling_series(const OPUCSystem& sys, const SchurModel& model, double theta, const std::vector<int>& nList,
                             double a, double rho) {
  ScalingSeries s;
  s.theta = theta;
  s.a = a;
  s.rho = rho;
  const auto dist = zero_scaling(sys, theta, nList);
  const auto rad = radial_schur(model, theta, a, nList);
  std::vector<double> gap(nList.size(), kNaN);
  try {
    gap = phi_star_gap(sys, model.measure(), theta, nList);
  } catch (const Error& e) {
    s.notes.push_back(std::string("phistar_gap: ") + e.what());
  }
  for (size_t i = 0; i < nList.size(); ++i) {
    if (rad[i].skipped) {
      std::ostringstream os;
      os << "radial: n = " << nList[i] << " skipped, 1 - a/n < 0.5";
      s.notes.push_back(os.str());
    }
    s.rows.push_back({nList[i], dist[i], rad[i].value, std::abs(rad[i].value), stolz_sup(model, theta, rho, nList[i]),
                      gap[i]});
  }
  return s;
}

double RescaledZeroProfile::h_prime(double t) const {
  const cplx e = unit(theta + t / n);
  double s = 0.0;
  for (const auto& z : zeros) s += (1.0 - std::norm(z)) / std::norm(e - z);
  return s / n;
}

double RescaledZeroProfile::h_prime_near(double t, double b) const {
  const cplx e = unit(theta + t / n);
  double s = 0.0;
  for (size_t k = 0; k < zeros.size(); ++k)
    if (std::abs(rescaledZeros[k]) < 1.9 * b) s += (1.0 - std::norm(zeros[k])) / std::norm(e - zeros[k]);
  return s / n;
}

double RescaledZeroProfile::h_prime_far(double t, double b) const { return h_prime(t) - h_prime_near(t, b); }

RescaledZeroProfile rescaled_zero_profile(const OPUCSystem& sys, int n, double theta) {
  RescaledZeroProfile p;
  p.n = n;
  p.theta = theta;
  p.zeros = sys.zeros(n).roots;
  const cplx xb = unit(-theta);
  for (const auto& z : p.zeros) p.rescaledZeros.push_back(cplx(0.0, n) * (1.0 - xb * z));
  return p;
}

std::vector<double> rescaled_density(const RescaledZeroProfile& p, const std::vector<double>& tGrid) {
  std::vector<double> out(tGrid.size());
  for (size_t i = 0; i < tGrid.size(); ++i) {
    if (std::abs(tGrid[i]) > kPi * p.n + 1e-12)
      throw Error(ErrorKind::InvalidArgument, "rescaled_density: |t| must be <= pi n");
    out[i] = p.h_prime(tGrid[i]);
  }
  return out;
}

double LimitKernel::operator()(double t) const {
  double s = 0.0;
  for (const auto& x : points) s += 2.0 * x.imag() / std::norm(t - x);
  return s;
}

LimitKernel limit_kernel(const RescaledZeroProfile& p, double b) {
  if (!(b > 0.0)) throw Error(ErrorKind::InvalidArgument, "limit_kernel: b must be positive");
  LimitKernel k;
  for (const auto& x : p.rescaledZeros)
    if (std::abs(x) < 1.9 * b) k.points.push_back(x);
  return k;
}

VnCheck vn_argument_check(const OPUCSystem& sys, const SchurModel& model, int n) {
  const auto fn = model.boundary_iterate(n).logGrid;
  const int M = fn.size();
  const auto prof = argument_profile(sys, n);
  VnCheck out;
  out.offset = fn.offset();
  out.formula.resize(M);
  std::vector<double> u(M);
  for (int j = 0; j < M; ++j) {
    const double t = std::remainder(fn.theta(j), kTwoPi);
    const cplx xi = unit(t);
    const cplx f = fn[j];
    const cplx ps = eval(sys.phiStar[n], xi);
    const cplx b = eval(sys.phi[n], xi) / ps;
    u[j] = std::log(std::norm(ps)) + std::log(std::norm(1.0 - xi * b * f));
    const double g = prof.gamma(t);
    double v = n * t - g;
    const double af = std::abs(f);
    if (af > 1e-10) {
      const double kappa = std::arg(-f);
      const double psi = g + t + kappa;
      v += 2.0 * std::atan2(af * std::sin(psi), 1.0 + af * std::cos(psi));
    }
    out.formula[j] = v;
  }
  out.conjugate = harmonic_conjugate(GridFunction::real(u, fn.offset())).real_part();
  cplx mean = 0.0;
  for (int j = 0; j < M; ++j) mean += unit(out.formula[j] - out.conjugate[j]);
  const double c = std::arg(mean);
  for (int j = 0; j < M; ++j) {
    const double e = circular_distance(out.formula[j] - out.conjugate[j], c);
    if (e > out.maxError) {
      out.maxError = e;
      out.worstTheta = fn.theta(j);
    }
  }
  return out;
}

std::vector<cplx> upsilon_mesh(double theta, double delta, double rho, double alpha, double beta) {
  if (!(alpha > 0.0 && alpha < beta)) throw Error(ErrorKind::InvalidArgument, "region: 0 < alpha < beta required");
  if (!(rho > 0.0 && rho < 1.0) || !(delta > 0.0 && delta < 1.0))
    throw Error(ErrorKind::InvalidArgument, "region: rho and delta must lie in (0, 1)");
  const cplx xi = unit(theta);
  const int R = 32, A = 33;
  const double q = std::pow(beta / alpha, 1.0 / (R + 1));
  std::vector<cplx> pts;
  double s = alpha * delta;
  for (int i = 0; i < R; ++i) {
    s *= q;
    for (int k = 0; k < A; ++k) {
      const double phi = -0.5 * kPi + kPi * k / (A - 1);
      const cplx z = xi * (1.0 - s * unit(phi));
      if (std::abs(z) <= kMeshCap && in_stolz(z, theta, rho)) pts.push_back(z);
    }
  }
  return pts;
}

std::vector<double> region_oscillation(const SchurModel& model, double theta, double delta, double rho, double alpha,
                                       double beta, const std::vector<int>& kList) {
  const auto pts = upsilon_mesh(theta, delta, rho, alpha, beta);
  if (pts.empty())
    throw Error(ErrorKind::InvalidArgument, "region_oscillation: the mesh is empty (delta too small for |z| <= 0.999)");
  std::vector<double> out(kList.size());
  parallel_for(kList.size(), [&](std::size_t i) {
    std::vector<cplx> v(pts.size());
    for (size_t p = 0; p < pts.size(); ++p) v[p] = model.iterate(kList[i], pts[p]);
    double osc = 0.0;
    for (size_t p = 0; p < v.size(); ++p)
      for (size_t q = p + 1; q < v.size(); ++q) osc = std::max(osc, std::abs(v[p] - v[q]));
    out[i] = osc;
  });
  return out;
}

}  // namespace opuc
