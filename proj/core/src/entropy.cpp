#include "opuc/entropy.hpp"

#include <cmath>
#include <limits>

#include "opuc/parallel.hpp"

namespace opuc {

namespace {

void check_interior(cplx z, double rmax, const char* what) {
  if (std::abs(z) > rmax + 1e-12)
    throw Error(ErrorKind::InvalidArgument, std::string(what) + ": |z| must be <= " + std::to_string(rmax));
}

double log_factor(cplx z, cplx f) { return std::log1p(-std::norm(z * f)) - std::log1p(-std::norm(f)); }

}  // namespace

double entropy(const CircleMeasure& mu, cplx z) {
  check_interior(z, 0.99, "entropy");
  return entropy_definition(mu, z);
}

EntropyForms entropy_forms(const SchurModel& model, cplx z) {
  check_interior(z, 0.99, "entropy");
  const auto& mu = model.measure();
  EntropyForms e;
  e.definition = entropy_definition(mu, z);

  const auto& f = model.boundary_f(true);
  const auto pts = unimodular_points(mu);
  const int M = f.size();
  std::vector<double> lr(M);
  for (int j = 0; j < M; ++j) {
    const cplx xi = f.node(j);
    double r = std::max(1.0 - std::norm(f[j]), std::numeric_limits<double>::min());
    for (const auto& p : pts) r /= std::pow(std::norm(xi - unit(p.theta)), p.order);
    lr[j] = std::log(r);
  }
  double P = poisson_extend(GridFunction::real(lr, f.offset()), z);
  for (const auto& p : pts) P += p.order * std::log(std::norm(z - unit(p.theta)));
  e.schur = std::log1p(-std::norm(z * model.f(z))) - P;
  return e;
}

EntropyRow theorem1_product(const SchurModel& model, cplx z, int nMax) {
  check_interior(z, 0.9, "theorem1_product");
  EntropyRow row;
  row.z = z;
  row.K = entropy_definition(model.measure(), z);
  int N = nMax;
  if (model.verblunsky().finite) N = std::min(nMax, model.verblunsky().size());
  N = std::min(N, model.max_reliable_index(z));
  const auto f = model.iterates_at(z, N);
  double acc = 0.0;
  std::vector<double> mags(f.size());
  for (size_t n = 0; n < f.size(); ++n) {
    const double t = log_factor(z, f[n]);
    if (t < -1e-12) row.monotone = false;
    acc += t;
    row.partial.push_back(acc);
    mags[n] = std::norm(f[n]);
  }
  row.terms = static_cast<int>(f.size());
  row.product = acc;
  row.residual = std::abs(row.K - row.product);
  if (!model.verblunsky().finite || model.verblunsky().size() > N)
    row.tailBound = 4.0 * tail_estimate(mags) / (1.0 - std::norm(z));
  return row;
}

EntropyReport entropy_report(const SchurModel& model, const std::vector<cplx>& zGrid, int nMax) {
  EntropyReport rep;
  rep.rows.resize(zGrid.size());
  parallel_for(zGrid.size(), [&](std::size_t i) { rep.rows[i] = theorem1_product(model, zGrid[i], nMax); });
  for (const auto& r : rep.rows) {
    rep.maxResidual = std::max(rep.maxResidual, r.residual);
    rep.maxExcess = std::max(rep.maxExcess, r.residual - r.tailBound);
  }
  return rep;
}

ChainStep entropy_chain_step(const SchurModel& model, cplx z) {
  check_interior(z, 0.9, "entropy_chain_step");
  ChainStep s;
  s.K = entropy_definition(model.measure(), z);
  s.K1 = entropy_definition(model.iterate_measure(1), z);
  s.factor = log_factor(z, model.f(z));
  return s;
}

MonotonicityReport entropy_monotonicity(const SchurModel& model, const std::vector<cplx>& zGrid, int nMax) {
  MonotonicityReport rep;
  rep.K.assign(nMax + 1, std::vector<double>(zGrid.size()));
  for (size_t i = 0; i < zGrid.size(); ++i) rep.K[0][i] = entropy(model.measure(), zGrid[i]);
  for (int n = 1; n <= nMax; ++n) {
    const auto mun = model.iterate_measure(n);
    for (size_t i = 0; i < zGrid.size(); ++i) rep.K[n][i] = entropy(mun, zGrid[i]);
  }
  rep.worstViolation = -std::numeric_limits<double>::infinity();
  for (int n = 0; n <= nMax; ++n) {
    for (size_t i = 0; i < zGrid.size(); ++i) {
      const double v = rep.K[n][i] - rep.K[0][i];
      if (v > rep.worstViolation) {
        rep.worstViolation = v;
        rep.worstN = n;
        rep.worstZ = zGrid[i];
      }
    }
  }
  return rep;
}

BoundPair weight_entropy_bound(const SchurModel& model, cplx z, int n) {
  const auto& mu = model.measure();
  const auto b = model.boundary_iterate(n);
  auto weight = [](const GridFunction& g) {
    std::vector<double> v(g.size());
    for (int j = 0; j < g.size(); ++j) v[j] = std::max(0.0, 1.0 - std::norm(g[j]));
    return v;
  };
  const auto pw = b.pointwise;
  auto v = CircleMeasure::from_grids(weight(b.publicGrid), weight(b.logGrid), b.logGrid.offset(), {},
                                     unimodular_points(mu), "1 - |f_n|^2",
                                     [pw](double t) { return std::max(0.0, 1.0 - std::norm(pw(t))); });
  BoundPair r;
  r.weightK = entropy(v, z);
  r.measureK = entropy(mu, z);
  return r;
}

CircleMeasure clark_measure(const SchurModel& model, cplx alpha) {
  if (std::abs(std::abs(alpha) - 1.0) > 1e-12) throw Error(ErrorKind::InvalidArgument, "clark_measure: |alpha| must be 1");
  const auto& fp = model.boundary_f(false);
  const auto& fl = model.boundary_f(true);
  auto scale = [alpha](const GridFunction& g) {
    std::vector<cplx> v(g.values());
    for (auto& x : v) x *= alpha;
    return GridFunction(std::move(v), g.offset());
  };
  BoundarySchur g;
  g.publicGrid = scale(fp);
  g.logGrid = scale(fl);
  g.pointwise = model.boundary_iterate(0).pointwise;
  auto base = g.pointwise;
  g.pointwise = [base, alpha](double t) { return alpha * base(t); };
  return measure_from_schur(g, model.measure(), "clark rotation");
}

ClarkReport clark_dual_invariance(const SchurModel& model, const std::vector<cplx>& zGrid, cplx alpha) {
  const auto mua = clark_measure(model, alpha);
  ClarkReport r;
  for (const auto& z : zGrid) {
    const double d = std::abs(entropy(mua, z) - entropy(model.measure(), z));
    if (d > r.maxDiff) {
      r.maxDiff = d;
      r.worstZ = z;
    }
  }
  return r;
}

BernsteinSzego bernstein_szego_approx(const SchurModel& model, int n, cplx zStar) {
  check_interior(zStar, 0.9, "bernstein_szego_approx");
  const cplx c = model.iterate(n, zStar);
  if (std::abs(c) >= 1.0 - kUnitMargin)
    throw Error(ErrorKind::InvalidArgument, "bernstein_szego_approx: |f_n(z*)| is too close to 1");
  const auto sys = szego_recursion(model.verblunsky(), n);
  const ComplexPoly ps = sys.phiStar[n], p = sys.phi[n];
  auto w = [ps, p, c](double t) {
    const cplx xi = unit(t);
    return (1.0 - std::norm(c)) / std::norm(eval(ps, xi) - xi * c * eval(p, xi));
  };
  BernsteinSzego out{CircleMeasure::from_density(w, model.measure().grid_size(), {}, {}, "bernstein-szego approximant")};
  out.c = c;
  out.massError = std::abs(out.measure.total_mass() - 1.0);

  // Iterates of the approximant come from its own moments, not from the
  // coefficients used to build it.
  const SchurModel hat(out.measure);
  for (int k = 0; k <= n + 1; ++k) {
    const cplx target = k <= n ? model.iterate(k, zStar) : cplx{0.0};
    out.iterateError = std::max(out.iterateError, std::abs(hat.iterate(k, zStar) - target));
  }
  out.K = entropy(model.measure(), zStar);
  out.Khat = entropy(out.measure, zStar);
  out.Knext = entropy(model.iterate_measure(n + 1), zStar);
  return out;
}

RatioReport oscillation_bound(const SchurModel& model, const std::vector<cplx>& zGrid, int nMax) {
  RatioReport rep;
  const auto& mu = model.measure();
  std::vector<double> K(zGrid.size());
  parallel_for(zGrid.size(), [&](std::size_t i) { K[i] = entropy(mu, zGrid[i]); });
  for (int n = 0; n <= nMax; ++n) {
    const auto fn = model.boundary_iterate(n).publicGrid;
    std::vector<double> ratio(zGrid.size(), -1.0);
    parallel_for(zGrid.size(), [&](std::size_t i) {
      if (K[i] < 1e-10) return;
      const cplx z = zGrid[i];
      const cplx fz = model.iterate(n, z);
      std::vector<double> d(fn.size());
      for (int j = 0; j < fn.size(); ++j) d[j] = std::abs(fn[j] - fz);
      ratio[i] = poisson_extend(GridFunction::real(d), z) / std::sqrt(K[i]);
    });
    for (size_t i = 0; i < zGrid.size(); ++i) {
      if (ratio[i] < 0.0) continue;
      ++rep.evaluated;
      if (!std::isfinite(ratio[i])) rep.finite = false;
      if (ratio[i] > rep.maxRatio) {
        rep.maxRatio = ratio[i];
        rep.worstN = n;
        rep.worstZ = zGrid[i];
      }
    }
  }
  return rep;
}

double EtaFunction::operator()(cplx z) const {
  const double K = std::max(0.0, entropy(mu_, z));
  return std::max(std::sqrt(K), K * std::exp(0.5 * K));
}

RatioReport bmo_eta_norm(const GridFunction& v, const CircleMeasure& mu, const std::vector<cplx>& zGrid) {
  const EtaFunction eta(mu);
  std::vector<double> ratio(zGrid.size(), -1.0);
  const auto vr = v.real_part();
  parallel_for(zGrid.size(), [&](std::size_t i) {
    const double e = eta(zGrid[i]);
    if (e < kEtaFloor) return;
    const double pv = poisson_extend(v, zGrid[i]);
    std::vector<double> d(vr.size());
    for (size_t j = 0; j < vr.size(); ++j) d[j] = std::abs(vr[j] - pv);
    ratio[i] = poisson_extend(GridFunction::real(d, v.offset()), zGrid[i]) / e;
  });
  RatioReport rep;
  for (size_t i = 0; i < zGrid.size(); ++i) {
    if (ratio[i] < 0.0) continue;
    ++rep.evaluated;
    if (!std::isfinite(ratio[i])) rep.finite = false;
    if (ratio[i] > rep.maxRatio) {
      rep.maxRatio = ratio[i];
      rep.worstZ = zGrid[i];
    }
  }
  if (rep.evaluated == 0)
    throw Error(ErrorKind::InvalidArgument, "bmo_eta_norm: eta is below 1e-8 on the whole grid, the norm is undefined");
  return rep;
}

GridFunction log_density(const CircleMeasure& mu) {
  const auto& lr = mu.log_reduced();
  const int M = mu.grid_size();
  std::vector<double> v(M);
  for (int j = 0; j < M; ++j) {
    const cplx xi = unit(kTwoPi * (j + mu.log_offset()) / M);
    v[j] = lr[j];
    for (const auto& z : mu.zeros()) v[j] += z.order * std::log(std::norm(xi - unit(z.theta)));
  }
  return GridFunction::real(v, mu.log_offset());
}

}  // namespace opuc
