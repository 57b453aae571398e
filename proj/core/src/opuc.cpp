#include "opuc/opuc.hpp"

#include <cmath>
#include <mutex>
#include <optional>
#include <sstream>

namespace opuc {

struct OPUCSystem::ZeroCache {
  std::mutex m;
  std::vector<std::optional<RootSet>> sets;
};

const RootSet& OPUCSystem::zeros(int n) const {
  if (n < 1 || n > max_degree())
    throw Error(ErrorKind::InvalidArgument, "zeros: degree " + std::to_string(n) + " out of range");
  std::lock_guard<std::mutex> lock(cache_->m);
  auto& slot = cache_->sets[n];
  if (!slot) slot = roots(phi[n]);
  return *slot;
}

cplx OPUCSystem::blaschke(int n, cplx z) const { return eval(phi[n], z) / eval(phiStar[n], z); }

OPUCSystem szego_recursion(const VerblunskySeq& a, int N) {
  if (N < 0) throw Error(ErrorKind::InvalidArgument, "szego_recursion: negative degree");
  OPUCSystem s;
  s.a = a;
  s.phi.reserve(N + 1);
  s.phi.push_back(ComplexPoly::constant(1.0));
  s.phiStar.push_back(ComplexPoly::constant(1.0));
  s.psi.push_back(ComplexPoly::constant(1.0));
  s.psiStar.push_back(ComplexPoly::constant(1.0));
  s.leading.push_back(1.0);
  for (int n = 0; n < N; ++n) {
    const cplx an = a.at(n);
    if (std::abs(an) >= 1.0 - kUnitMargin)
      throw Error(ErrorKind::InvalidArgument, "szego_recursion: |a_" + std::to_string(n) + "| is not below 1");
    const double rho = std::sqrt(1.0 - std::norm(an));
    auto ps = (s.phiStar[n] - shift(s.phi[n], 1) * an) * cplx(1.0 / rho);
    auto qs = (s.psiStar[n] + shift(s.psi[n], 1) * an) * cplx(1.0 / rho);
    s.phi.push_back(reverse_star(ps, n + 1));
    s.psi.push_back(reverse_star(qs, n + 1));
    s.phiStar.push_back(std::move(ps));
    s.psiStar.push_back(std::move(qs));
    s.leading.push_back(s.leading[n] / rho);
  }
  s.cache_ = std::make_shared<OPUCSystem::ZeroCache>();
  s.cache_->sets.resize(N + 1);

  if (N >= 1) {
    const auto wall = wall_table(a, N - 1);
    double worst = 0.0;
    for (int n = 0; n < N; ++n) {
      const auto& W = wall[n];
      const double k = s.leading[n + 1];
      const ComplexPoly z1 = ComplexPoly::monomial(1);
      worst = std::max(worst, max_coeff_diff(s.phi[n + 1], (z1 * W.Bstar - W.Astar) * cplx(k)) / k);
      worst = std::max(worst, max_coeff_diff(s.phiStar[n + 1], (W.B - z1 * W.A) * cplx(k)) / k);
      worst = std::max(worst, max_coeff_diff(s.psi[n + 1], (z1 * W.Bstar + W.Astar) * cplx(k)) / k);
      worst = std::max(worst, max_coeff_diff(s.psiStar[n + 1], (W.B + z1 * W.A) * cplx(k)) / k);
    }
    s.wallResidual = worst;
    if (worst > 1e-10) {
      std::ostringstream os;
      os << "second-kind polynomials disagree with the Wall polynomials: residual " << worst;
      throw Error(ErrorKind::Consistency, os.str());
    }
  }
  return s;
}

double ArgumentProfile::gamma_prime(double t) const {
  const cplx xi = unit(t);
  double s = l;
  for (const auto& z : zeros) s += (1.0 - std::norm(z)) / std::norm(xi - z);
  return s;
}

double ArgumentProfile::gamma(double t) const {
  double g = gamma0 + l * t;
  const cplx e = unit(-t);
  for (const auto& z : zeros) g += t + 2.0 * (std::arg(1.0 - z * e) - std::arg(1.0 - z));
  return g;
}

ArgumentProfile argument_profile(const OPUCSystem& sys, int n) {
  ArgumentProfile p;
  p.n = n;
  if (n == 0) return p;
  const auto& rs = sys.zeros(n);
  for (const auto& r : rs.roots) {
    if (r == cplx{0.0}) ++p.l;
    else p.zeros.push_back(r);
  }
  p.gamma0 = std::arg(sys.blaschke(n, 1.0));
  return p;
}

CDNorm cd_kernel_norm(const OPUCSystem& sys, double t, int n) {
  const cplx xi = unit(t);
  CDNorm r{};
  for (int j = 0; j < n; ++j) r.lhs += std::norm(eval(sys.phi[j], xi));
  r.rhs = n == 0 ? 0.0 : std::norm(eval(sys.phiStar[n], xi)) * argument_profile(sys, n).gamma_prime(t);
  r.relError = r.lhs == 0.0 ? std::abs(r.rhs) : std::abs(r.lhs - r.rhs) / std::abs(r.lhs);
  return r;
}

KhrushchevResidual khrushchev_residual(const OPUCSystem& sys, const SchurModel& model, int n) {
  const auto& mu = model.measure();
  const int M = mu.grid_size();
  const auto fn = model.boundary_iterate(n).publicGrid;
  std::vector<cplx> res(M, 0.0);
  KhrushchevResidual out;
  for (int j = 0; j < M; ++j) {
    const cplx xi = fn.node(j);
    bool atom = false;
    for (const auto& a : mu.atoms()) atom = atom || std::abs(unit(a.theta) - xi) < 1e-14;
    if (atom) continue;
    const cplx ps = eval(sys.phiStar[n], xi);
    const cplx b = eval(sys.phi[n], xi) / ps;
    const double lhs = std::norm(ps) * mu.density()[j];
    const double rhs = std::max(0.0, 1.0 - std::norm(fn[j])) / std::norm(1.0 - xi * b * fn[j]);
    res[j] = std::abs(lhs - rhs);
    out.max = std::max(out.max, res[j].real());
  }
  out.residual = GridFunction(std::move(res));
  return out;
}

CircleMeasure reweight(const CircleMeasure& mu, const ComplexPoly& p, std::string label) {
  const int M = mu.grid_size();
  std::vector<double> pub(mu.density()), lg(mu.log_grid_density());
  for (int j = 0; j < M; ++j) {
    pub[j] *= std::norm(eval(p, unit(kTwoPi * j / M)));
    lg[j] *= std::norm(eval(p, unit(kTwoPi * (j + mu.log_offset()) / M)));
  }
  std::vector<Atom> atoms = mu.atoms();
  for (auto& a : atoms) a.mass *= std::norm(eval(p, unit(a.theta)));
  CircleMeasure::Density pw;
  if (mu.has_pointwise_density()) pw = [mu, p](double t) { return mu.density_at(t) * std::norm(eval(p, unit(t))); };
  return CircleMeasure::from_grids(std::move(pub), std::move(lg), mu.log_offset(), std::move(atoms), mu.zeros(),
                                   std::move(label), pw);
}

EntropyPair khrushchev_measure_transform(const OPUCSystem& sys, const SchurModel& model, int n, cplx z) {
  if (std::abs(z) > 0.9 + 1e-12)
    throw Error(ErrorKind::InvalidArgument, "khrushchev_measure_transform: |z| must be <= 0.9");
  EntropyPair r{};
  const auto transformed = reweight(model.measure(), sys.phiStar[n], "|phi_n^*|^2 dmu");
  r.lhs = entropy_definition(transformed, z);
  const auto mun = model.iterate_measure(n);
  const cplx fn = model.iterate(n, z);
  const cplx b = sys.blaschke(n, z);
  r.rhs = entropy_definition(mun, z) + std::log((1.0 - std::norm(z * b * fn)) / (1.0 - std::norm(z * fn)));
  return r;
}

cplx hat_caratheodory(const OPUCSystem& sys, int n, cplx z) {
  return eval(sys.psiStar[n], z) / eval(sys.phiStar[n], z);
}

}  // namespace opuc
