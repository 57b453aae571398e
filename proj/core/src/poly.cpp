#include "opuc/poly.hpp"

#include <algorithm>
#include <cmath>

namespace opuc {

namespace {

void trim(std::vector<cplx>& c) {
  while (c.size() > 1 && c.back() == cplx{0.0}) c.pop_back();
  if (c.empty()) c.push_back(0.0);
}

}  // namespace

ComplexPoly::ComplexPoly(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) { trim(coeffs_); }

ComplexPoly ComplexPoly::monomial(int n, cplx c) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "monomial: negative degree");
  std::vector<cplx> v(static_cast<size_t>(n) + 1, 0.0);
  v[n] = c;
  return ComplexPoly(std::move(v));
}

cplx ComplexPoly::operator[](int k) const {
  if (k < 0 || k > degree()) return 0.0;
  return coeffs_[k];
}

ComplexPoly& ComplexPoly::operator+=(const ComplexPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0.0);
  for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim(coeffs_);
  return *this;
}

ComplexPoly& ComplexPoly::operator-=(const ComplexPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0.0);
  for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim(coeffs_);
  return *this;
}

ComplexPoly& ComplexPoly::operator*=(cplx s) {
  for (auto& c : coeffs_) c *= s;
  trim(coeffs_);
  return *this;
}

ComplexPoly operator+(ComplexPoly a, const ComplexPoly& b) { return a += b; }
ComplexPoly operator-(ComplexPoly a, const ComplexPoly& b) { return a -= b; }
ComplexPoly operator*(ComplexPoly a, cplx s) { return a *= s; }
ComplexPoly operator*(cplx s, ComplexPoly a) { return a *= s; }

ComplexPoly operator*(const ComplexPoly& a, const ComplexPoly& b) {
  std::vector<cplx> out(a.coeffs().size() + b.coeffs().size() - 1, 0.0);
  for (size_t i = 0; i < a.coeffs().size(); ++i)
    for (size_t j = 0; j < b.coeffs().size(); ++j) out[i + j] += a.coeffs()[i] * b.coeffs()[j];
  return ComplexPoly(std::move(out));
}

ComplexPoly shift(const ComplexPoly& p, int k) {
  if (p.is_zero() || k == 0) return p;
  std::vector<cplx> out(static_cast<size_t>(k), 0.0);
  out.insert(out.end(), p.coeffs().begin(), p.coeffs().end());
  return ComplexPoly(std::move(out));
}

cplx eval(const ComplexPoly& p, cplx z) {
  const auto& c = p.coeffs();
  cplx acc = c.back();
  for (int k = static_cast<int>(c.size()) - 2; k >= 0; --k) acc = acc * z + c[k];
  return acc;
}

void eval_with_derivative(const ComplexPoly& p, cplx z, cplx& value, cplx& deriv) {
  const auto& c = p.coeffs();
  value = c.back();
  deriv = 0.0;
  for (int k = static_cast<int>(c.size()) - 2; k >= 0; --k) {
    deriv = deriv * z + value;
    value = value * z + c[k];
  }
}

ComplexPoly reverse_star(const ComplexPoly& p, int n) {
  if (p.degree() > n && !p.is_zero())
    throw Error(ErrorKind::InvalidArgument,
                "reverse_star: degree " + std::to_string(p.degree()) + " exceeds n = " + std::to_string(n));
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "reverse_star: negative n");
  std::vector<cplx> out(static_cast<size_t>(n) + 1, 0.0);
  for (int k = 0; k <= n; ++k) out[k] = std::conj(p[n - k]);
  return ComplexPoly(std::move(out));
}

double coeff_scale(const ComplexPoly& p) {
  double s = 0.0;
  for (const auto& c : p.coeffs()) s = std::max(s, std::abs(c));
  return s;
}

double max_coeff_diff(const ComplexPoly& a, const ComplexPoly& b) {
  int d = std::max(a.degree(), b.degree());
  double m = 0.0;
  for (int k = 0; k <= d; ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

namespace {

double backward_error(const ComplexPoly& p, cplx z) {
  const auto& c = p.coeffs();
  double r = std::abs(z);
  double scale = 0.0;
  double rk = 1.0;
  for (const auto& ck : c) {
    scale += std::abs(ck) * rk;
    rk *= r;
  }
  if (scale == 0.0) return 0.0;
  return std::abs(eval(p, z)) / scale;
}

}  // namespace

RootSet roots(const ComplexPoly& p, const RootOptions& opt) {
  if (p.degree() < 1)
    throw Error(ErrorKind::InvalidArgument, "roots: polynomial of degree 0 has no roots to extract");

  const auto& c = p.coeffs();
  int zeroMult = 0;
  while (c[zeroMult] == cplx{0.0}) ++zeroMult;
  ComplexPoly q(std::vector<cplx>(c.begin() + zeroMult, c.end()));
  const int d = q.degree();

  RootSet out;
  std::vector<cplx> z;
  if (d > 0) {
    const auto& qc = q.coeffs();
    double radius = std::pow(std::abs(qc[0] / qc[d]), 1.0 / d);
    z.resize(d);
    for (int i = 0; i < d; ++i) z[i] = radius * unit(kTwoPi * i / d + 0.4);

    std::vector<bool> done(d, false);
    int it = 0;
    for (; it < opt.max_iterations; ++it) {
      bool allDone = true;
      for (int i = 0; i < d; ++i) {
        if (done[i]) continue;
        cplx v, dv;
        eval_with_derivative(q, z[i], v, dv);
        if (v == cplx{0.0}) {
          done[i] = true;
          continue;
        }
        cplx ratio = v / dv;
        cplx sum = 0.0;
        for (int j = 0; j < d; ++j)
          if (j != i) sum += 1.0 / (z[i] - z[j]);
        cplx step = ratio / (1.0 - ratio * sum);
        if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) step = ratio;
        z[i] -= step;
        if (std::abs(step) <= 4e-16 * std::max(1.0, std::abs(z[i]))) done[i] = true;
        else allDone = false;
      }
      if (allDone) break;
    }
    out.iterations = it;

    double worst = 0.0;
    for (const auto& r : z) worst = std::max(worst, backward_error(q, r));
    if (worst > opt.residual_tol)
      throw RootError("roots: no convergence after " + std::to_string(opt.max_iterations) +
                          " iterations, worst residual " + std::to_string(worst),
                      z, worst);
  }

  // Cluster near-coincident roots and replace each cluster by its mean.
  std::vector<int> label(z.size(), -1);
  for (size_t i = 0; i < z.size(); ++i) {
    if (label[i] >= 0) continue;
    label[i] = static_cast<int>(out.clusters.size());
    cplx sum = z[i];
    int m = 1;
    for (size_t j = i + 1; j < z.size(); ++j) {
      if (label[j] < 0 && std::abs(z[j] - z[i]) < opt.cluster_tol) {
        label[j] = label[i];
        sum += z[j];
        ++m;
      }
    }
    out.clusters.push_back({sum / static_cast<double>(m), m});
  }
  if (zeroMult > 0) out.clusters.push_back({0.0, zeroMult});
  for (const auto& cl : out.clusters)
    for (int m = 0; m < cl.multiplicity; ++m) out.roots.push_back(cl.center);
  for (const auto& r : out.roots) out.residuals.push_back(backward_error(p, r));
  return out;
}

}  // namespace opuc
