#include "opuc/iterates.hpp"

#include <climits>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>

namespace opuc {

namespace {

int damping_steps(double r, double target) {
  if (r <= 0.0) return 1;
  return std::max(1, static_cast<int>(std::ceil(std::log(target) / std::log(r))));
}

}  // namespace

SchurModel::SchurModel(CircleMeasure mu, SchurModelOptions opt) : mu_(std::move(mu)), opt_(opt) {
  if (std::abs(mu_.total_mass() - 1.0) > 1e-8) {
    std::ostringstream os;
    os << "SchurModel needs a probability measure; total mass is " << mu_.total_mass();
    throw Error(ErrorKind::InvalidArgument, os.str());
  }
  const int M = mu_.grid_size();
  const int K = M / 2 - 1;
  auto c = moments(mu_, K);
  c[0] = 1.0;
  if (mu_.exact_verblunsky()) {
    a_ = prescribed(*mu_.exact_verblunsky(), true);
  } else {
    a_ = verblunsky_levinson(c, K - 1);
  }
  auto d = std::make_shared<Data>();
  d->taylor = caratheodory_to_schur(c);
  d->cara.resize(mu_.ac_fourier().size());
  d->cara[0] = mu_.ac_fourier()[0];
  for (size_t k = 1; k < d->cara.size(); ++k) d->cara[k] = 2.0 * mu_.ac_fourier()[k];
  d->atoms = mu_.atoms();
  data_ = std::move(d);

  int wallMax = opt_.wallDegree;
  if (!a_.finite) wallMax = std::min(wallMax, a_.size() - 1);
  if (wallMax >= 0) wall_ = wall_table(a_, wallMax);

  fPub_ = boundary_schur(mu_, false);
  fLog_ = boundary_schur(mu_, true);
}

const WallPolys& SchurModel::wall(int n) const {
  if (n < 0 || n > wall_degree())
    throw Error(ErrorKind::InvalidArgument,
                "Wall polynomials available up to degree " + std::to_string(wall_degree()) + ", asked for " +
                    std::to_string(n));
  return wall_[n];
}

cplx SchurModel::caratheodory(cplx z) const { return data_->caratheodory(z); }

cplx SchurModel::f(cplx z) const { return data_->f(z); }

cplx SchurModel::Data::caratheodory(cplx z) const {
  cplx F = series_eval(cara, z);
  for (const auto& a : atoms) {
    const cplx xa = unit(a.theta);
    if (std::abs(xa - z) < 1e-14) return {std::numeric_limits<double>::infinity(), 0.0};
    F += a.mass * (xa + z) / (xa - z);
  }
  return F;
}

cplx SchurModel::Data::f(cplx z) const {
  if (std::abs(z) <= 0.5) return series_eval(taylor.taylor, z);
  const cplx F = caratheodory(z);
  if (std::isinf(F.real())) return 1.0 / z;
  return (F - 1.0) / (z * (F + 1.0));
}

bool SchurModel::use_pointwise(int n, cplx z) const {
  if (n == 0) return true;
  return std::pow(std::abs(z), n) >= opt_.pointwiseFloor;
}

cplx SchurModel::wall_pointwise(int n, cplx z, cplx fz) const {
  if (n == 0) return fz;
  const auto& W = wall(n - 1);
  const cplx num = fz * eval(W.B, z) - eval(W.A, z);
  const cplx den = z * (eval(W.Bstar, z) - fz * eval(W.Astar, z));
  if (std::abs(den) < 1e-300) throw Error(ErrorKind::Singular, "Wall inversion: vanishing denominator");
  return num / den;
}

cplx SchurModel::wall_series(int n, cplx z) const {
  const auto& W = wall(n - 1);
  const auto& f = data_->taylor.taylor;
  const int N = static_cast<int>(f.size());
  if (N <= n) throw Error(ErrorKind::InvalidArgument, "Wall series route: Taylor series too short");
  auto mul = [&](const ComplexPoly& p) {
    std::vector<cplx> out(N, 0.0);
    for (int i = 0; i <= p.degree(); ++i)
      for (int j = 0; i + j < N; ++j) out[i + j] += p[i] * f[j];
    return out;
  };
  auto fb = mul(W.B);
  auto fas = mul(W.Astar);
  std::vector<cplx> g(N - n), h(N - n);
  for (int k = 0; k < N - n; ++k) {
    g[k] = fb[k + n] - W.A[k + n];
    h[k] = W.Bstar[k + n - 1] - fas[k + n - 1];
  }
  const cplx den = series_eval(h, z);
  if (std::abs(den) < 1e-300) throw Error(ErrorKind::Singular, "Wall series route: vanishing denominator");
  return series_eval(g, z) / den;
}

cplx SchurModel::backward(int n, cplx z) const {
  const double r = std::abs(z);
  if (r == 0.0) return a_.at(n);
  const int steps = damping_steps(r, 1e-17);
  int L = n + steps;
  cplx g;
  if (a_.finite && a_.size() <= L) {
    L = std::max(n, a_.size());
    g = 0.0;
  } else {
    if (L >= a_.size()) L = a_.size() - 1;
    if (L < n || std::pow(r, L - n) > 1e-12) {
      std::ostringstream os;
      os << "backward route for f_" << n << " at |z| = " << r << " needs Verblunsky coefficients up to index "
         << n + steps << ", only " << a_.size() << " available";
      throw Error(ErrorKind::NotConverged, os.str());
    }
    g = a_.at(L);
  }
  for (int k = L - 1; k >= n; --k) {
    const cplx a = a_.at(k);
    g = (a + z * g) / (1.0 + std::conj(a) * z * g);
  }
  return g;
}

cplx SchurModel::mobius_route(int n, cplx z) const {
  if (std::abs(z) >= 1.0 - 1e-15)
    throw Error(ErrorKind::InvalidArgument, "the Schur-step route is interior-only; use the Wall route on the circle");
  if (n == 0) return f(z);
  if (z == cplx{0.0}) return a_.at(n);
  if (!use_pointwise(n, z)) return backward(n, z);
  cplx g = f(z);
  for (int k = 0; k < n; ++k) {
    const cplx a = a_.at(k);
    g = (g - a) / (z * (1.0 - std::conj(a) * g));
  }
  return g;
}

cplx SchurModel::wall_route(int n, cplx z) const {
  if (n == 0) return f(z);
  if (z == cplx{0.0}) return a_.at(n);
  if (use_pointwise(n, z)) return wall_pointwise(n, z, f(z));
  return wall_series(n, z);
}

IterateEval SchurModel::schur_iterate_eval(int n, cplx z) const {
  IterateEval e;
  e.pointwise = use_pointwise(n, z);
  e.wall = wall_route(n, z);
  e.mobius = mobius_route(n, z);
  e.discrepancy = std::abs(e.wall - e.mobius);
  return e;
}

cplx SchurModel::iterate(int n, cplx z) const {
  if (n == 0) return f(z);
  if (z == cplx{0.0}) return a_.at(n);
  if (std::abs(z) >= 1.0 - 1e-15 || use_pointwise(n, z)) {
    if (n - 1 <= wall_degree()) return wall_pointwise(n, z, f(z));
  }
  return backward(n, z);
}

int SchurModel::max_reliable_index(cplx z) const {
  if (a_.finite) return INT_MAX;
  const double r = std::abs(z);
  if (r == 0.0) return a_.size() - 1;
  return a_.size() - 1 - damping_steps(r, 1e-16);
}

std::vector<cplx> SchurModel::iterates_at(cplx z, int nMax) const {
  std::vector<cplx> v(nMax + 1);
  const double r = std::abs(z);
  if (r >= 1.0 - 1e-15) throw Error(ErrorKind::InvalidArgument, "iterates_at: interior points only");
  if (r == 0.0) {
    for (int k = 0; k <= nMax; ++k) v[k] = a_.at(k);
    return v;
  }
  const int steps = damping_steps(r, 1e-17);
  int L = nMax + steps;
  cplx g;
  if (a_.finite && a_.size() <= L) {
    L = std::max(nMax, a_.size());
    g = 0.0;
    for (int k = L; k <= nMax; ++k) v[k] = 0.0;
  } else {
    if (L >= a_.size()) L = a_.size() - 1;
    g = a_.at(L);
  }
  const bool exactStart = a_.finite && a_.size() <= nMax + steps;
  for (int k = L - 1; k >= 0; --k) {
    const cplx a = a_.at(k);
    g = (a + z * g) / (1.0 + std::conj(a) * z * g);
    if (k <= nMax) v[k] = g;
  }
  if (L <= nMax && !exactStart) throw Error(ErrorKind::NotConverged, "iterates_at: not enough Verblunsky coefficients");
  if (!exactStart) {
    for (int k = 0; k <= std::min(nMax, L); ++k) {
      if (std::pow(r, L - k) <= 1e-13) continue;
      if (use_pointwise(k, z) && k - 1 <= wall_degree()) {
        v[k] = wall_pointwise(k, z, f(z));
        continue;
      }
      std::ostringstream os;
      os << "iterates_at: f_" << k << " at |z| = " << r << " cannot be resolved with " << a_.size()
         << " Verblunsky coefficients";
      throw Error(ErrorKind::NotConverged, os.str());
    }
  }
  return v;
}

BoundarySchur SchurModel::boundary_iterate(int n) const {
  BoundarySchur b;
  auto make = [&](const GridFunction& fb) {
    std::vector<cplx> v(fb.size());
    for (int j = 0; j < fb.size(); ++j) v[j] = wall_pointwise(n, fb.node(j), fb[j]);
    return GridFunction(std::move(v), fb.offset());
  };
  b.publicGrid = make(fPub_);
  b.logGrid = make(fLog_);
  std::shared_ptr<const Data> data = data_;
  std::optional<WallPolys> W;
  if (n > 0) W = wall(n - 1);
  b.pointwise = [data, W](double t) {
    const cplx xi = unit(t);
    const cplx fz = data->f(xi);
    if (!W) return fz;
    return (fz * eval(W->B, xi) - eval(W->A, xi)) / (xi * (eval(W->Bstar, xi) - fz * eval(W->Astar, xi)));
  };
  return b;
}

CircleMeasure SchurModel::iterate_measure(int n) const {
  if (n == 0) return mu_;
  auto b = boundary_iterate(n);
  auto out = measure_from_schur(b, mu_, mu_.label() + " / iterate " + std::to_string(n));
  if (a_.finite) {
    std::vector<cplx> shifted;
    for (int k = n; k < a_.size(); ++k) shifted.push_back(a_.values[k]);
    out.set_exact_verblunsky(std::move(shifted));
  }
  return out;
}

}  // namespace opuc
