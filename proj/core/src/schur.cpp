#include "opuc/schur.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace opuc {

const char* to_string(VerblunskySource s) {
  switch (s) {
    case VerblunskySource::SchurAlgorithm: return "schur-algorithm";
    case VerblunskySource::Levinson: return "levinson";
    case VerblunskySource::Prescribed: return "prescribed";
  }
  return "unknown";
}

cplx VerblunskySeq::at(int k) const {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "Verblunsky index must be >= 0");
  if (k < size()) return values[k];
  if (finite) return 0.0;
  throw Error(ErrorKind::InvalidArgument,
              "Verblunsky coefficient " + std::to_string(k) + " requested but only " + std::to_string(size()) +
                  " are known");
}

double VerblunskySeq::sum_squares() const {
  double s = 0.0;
  for (const auto& a : values) s += std::norm(a);
  return s;
}

VerblunskySeq prescribed(std::vector<cplx> a, bool finite) {
  for (size_t k = 0; k < a.size(); ++k)
    if (std::abs(a[k]) > 1.0 - kUnitMargin)
      throw Error(ErrorKind::InvalidArgument, "prescribed |a_" + std::to_string(k) + "| must be < 1 - 1e-12");
  VerblunskySeq s;
  s.values = std::move(a);
  s.source = VerblunskySource::Prescribed;
  s.finite = finite;
  return s;
}

std::vector<cplx> series_divide(const std::vector<cplx>& num, const std::vector<cplx>& den, int order) {
  if (den.empty() || den[0] == cplx{0.0})
    throw Error(ErrorKind::Consistency, "series division: denominator has vanishing constant term");
  std::vector<cplx> q(order, 0.0);
  const cplx inv = 1.0 / den[0];
  for (int j = 0; j < order; ++j) {
    cplx s = j < static_cast<int>(num.size()) ? num[j] : cplx{0.0};
    const int lim = std::min<int>(j, static_cast<int>(den.size()) - 1);
    for (int i = 1; i <= lim; ++i) s -= den[i] * q[j - i];
    q[j] = s * inv;
  }
  return q;
}

cplx series_eval(const std::vector<cplx>& c, cplx z) {
  cplx acc = 0.0;
  for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k) acc = acc * z + c[k];
  return acc;
}

SchurSeries caratheodory_to_schur(const std::vector<cplx>& c) {
  if (c.empty()) throw Error(ErrorKind::InvalidArgument, "caratheodory_to_schur: no moments");
  if (std::abs(c[0] - 1.0) > 1e-10)
    throw Error(ErrorKind::InvalidArgument, "caratheodory_to_schur: c_0 must be 1 (normalize the measure)");
  const int N = static_cast<int>(c.size()) - 1;
  // (F - 1) / z = 2 sum_{k>=1} c_k z^{k-1};  F + 1 = 2 + 2 sum_{k>=1} c_k z^k
  std::vector<cplx> num(N), den(N + 1);
  for (int j = 0; j < N; ++j) num[j] = 2.0 * c[j + 1];
  den[0] = 2.0;
  for (int k = 1; k <= N; ++k) den[k] = 2.0 * c[k];
  SchurSeries s;
  s.taylor = series_divide(num, den, N);
  return s;
}

SchurAlgorithmResult schur_algorithm(const SchurSeries& f, int count) {
  if (count < 0) throw Error(ErrorKind::InvalidArgument, "schur_algorithm: negative count");
  if (count >= f.order())
    throw Error(ErrorKind::InvalidArgument, "schur_algorithm: " + std::to_string(count) +
                                                " steps need more than " + std::to_string(f.order()) +
                                                " Taylor coefficients");
  SchurAlgorithmResult out;
  out.a.source = VerblunskySource::SchurAlgorithm;
  out.iterates.push_back(f);
  for (int k = 0; k < count; ++k) {
    const auto& cur = out.iterates.back().taylor;
    const cplx a = cur[0];
    if (std::abs(a) >= 1.0 - kUnitMargin) {
      std::ostringstream os;
      os << "|a_" << k << "| = " << std::abs(a) << " reached the unit circle: the measure is numerically supported on "
         << k + 1 << " points";
      out.a.warning = FiniteSupportWarning{k, os.str()};
      break;
    }
    out.a.values.push_back(a);
    const int n = static_cast<int>(cur.size());
    std::vector<cplx> num(cur), den(n);
    num[0] = 0.0;
    for (int j = 1; j < n; ++j) num[j] = cur[j];
    den[0] = 1.0 - std::conj(a) * cur[0];
    for (int j = 1; j < n; ++j) den[j] = -std::conj(a) * cur[j];
    auto g = series_divide(num, den, n);
    SchurSeries next;
    next.taylor.assign(g.begin() + 1, g.end());
    out.iterates.push_back(std::move(next));
  }
  return out;
}

VerblunskySeq verblunsky_levinson(const std::vector<cplx>& c, int count) {
  if (count < 0) throw Error(ErrorKind::InvalidArgument, "verblunsky_levinson: negative count");
  if (static_cast<int>(c.size()) < count + 1)
    throw Error(ErrorKind::InvalidArgument, "verblunsky_levinson: need moments c_0..c_" + std::to_string(count));
  if (!(c[0].real() > 0.0)) throw Error(ErrorKind::InvalidArgument, "verblunsky_levinson: c_0 must be positive");
  VerblunskySeq out;
  out.source = VerblunskySource::Levinson;
  out.values.reserve(count);
  // Monic Phi_k, ascending coefficients; norm2 = ||Phi_k||^2.
  std::vector<cplx> phi{1.0};
  std::vector<cplx> next;
  double norm2 = c[0].real();
  for (int k = 0; k < count; ++k) {
    cplx s = 0.0;
    for (int j = 0; j <= k; ++j) s += std::conj(phi[j]) * c[j + 1];
    const cplx a = s / norm2;
    const double rho2 = 1.0 - std::norm(a);
    if (rho2 <= kUnitMargin) {
      std::ostringstream os;
      os << "Toeplitz positivity lost at k = " << k << " (1 - |a_k|^2 = " << rho2 << ")";
      out.warning = FiniteSupportWarning{k, os.str()};
      break;
    }
    out.values.push_back(a);
    // Phi_{k+1} = z Phi_k - conj(a) Phi_k^*, Phi_k^*[j] = conj(Phi_k[k - j])
    next.assign(k + 2, 0.0);
    for (int j = 0; j <= k; ++j) next[j + 1] += phi[j];
    for (int j = 0; j <= k; ++j) next[j] -= std::conj(a) * std::conj(phi[k - j]);
    phi.swap(next);
    norm2 *= rho2;
  }
  return out;
}

std::vector<WallPolys> wall_table(const VerblunskySeq& a, int nMax) {
  std::vector<WallPolys> t;
  if (nMax < 0) return t;
  t.reserve(nMax + 1);
  WallPolys w0;
  w0.n = 0;
  w0.A = ComplexPoly::constant(a.at(0));
  w0.B = ComplexPoly::constant(1.0);
  w0.Astar = reverse_star(w0.A, 0);
  w0.Bstar = reverse_star(w0.B, 0);
  t.push_back(std::move(w0));
  for (int n = 0; n < nMax; ++n) {
    const auto& p = t.back();
    const cplx an = a.at(n + 1);
    WallPolys w;
    w.n = n + 1;
    w.A = p.A + shift(p.Bstar, 1) * an;
    w.B = p.B + shift(p.Astar, 1) * an;
    w.Astar = reverse_star(w.A, n + 1);
    w.Bstar = reverse_star(w.B, n + 1);
    t.push_back(std::move(w));
  }
  return t;
}

WallPolys wall_polynomials(const VerblunskySeq& a, int n) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "wall_polynomials: negative order");
  if (!a.finite && n >= a.size())
    throw Error(ErrorKind::InvalidArgument, "wall_polynomials: order must be below the sequence length");
  return wall_table(a, n).back();
}

namespace {

struct TailFit {
  double geom = std::numeric_limits<double>::infinity();
  double pow = std::numeric_limits<double>::infinity();
  double p = 0.0;
};

// Fits the first K terms. Two equal windows over the last half; window sums
// rather than point values, so noisy sequences (random phases) still give a
// trend.
TailFit fit_tail(const std::vector<double>& t, int K) {
  TailFit f;
  auto window_sum = [&](int lo, int hi) {
    double m = 0.0;
    for (int k = lo; k < hi; ++k) m += t[k];
    return m;
  };
  const int q1 = K - 2 * (K / 4), q2 = K - K / 4;
  const double S1 = window_sum(q1, q2), S2 = window_sum(q2, K);
  if (S2 <= 0.0) {
    f.geom = f.pow = 0.0;
    return f;
  }
  if (S1 <= 0.0) return f;

  // geometric C rho^k: S2 / S1 = rho^width exactly
  const double rho = std::pow(S2 / S1, 1.0 / (K - q2));
  const double rw = std::pow(rho, K - q2);
  if (rho < 1.0) f.geom = S2 * rw / (1.0 - rw);

  // power law C (k + 1)^{-p}, each window sum taken as the integral over
  // [lo - 1/2, hi - 1/2] shifted by one
  const double a1 = q1 + 0.5, a2 = q2 + 0.5, b = K + 0.5;
  auto integral = [](double lo, double hi, double p) {
    return std::abs(p - 1.0) < 1e-12 ? std::log(hi / lo) : (std::pow(lo, 1.0 - p) - std::pow(hi, 1.0 - p)) / (p - 1.0);
  };
  if (S2 < S1) {
    // the ratio of window integrals decreases in p
    double lo = 0.0, hi = 64.0;
    for (int it = 0; it < 200; ++it) {
      const double p = 0.5 * (lo + hi);
      (integral(a2, b, p) / integral(a1, a2, p) > S2 / S1 ? lo : hi) = p;
    }
    f.p = 0.5 * (lo + hi);
    if (f.p > 1.0) f.pow = S2 * std::pow(b, 1.0 - f.p) / (f.p - 1.0) / integral(a2, b, f.p);
  }
  return f;
}

}  // namespace

double tail_estimate(const std::vector<double>& t) {
  const int K = static_cast<int>(t.size());
  if (K < 8) return 0.0;
  const auto f = fit_tail(t, K);
  double pw = f.pow;
  if (std::isfinite(pw) && K >= 64) {
    // The fitted law misses the index offset of the true terms, an error of
    // relative size 1/K in the total. Richardson against the fit on K/2
    // terms removes it.
    const auto h = fit_tail(t, K / 2);
    if (std::isfinite(h.pow)) {
      double mid = 0.0;
      for (int k = K / 2; k < K; ++k) mid += t[k];
      const double r = std::pow(2.0, f.p);
      const double corrected = (r * pw - (h.pow - mid)) / (r - 1.0);
      if (corrected > 0.0) pw = corrected;
    }
  }
  if (std::isfinite(f.geom) && std::isfinite(pw)) return std::max(f.geom, pw);
  return std::min(f.geom, pw);
}

SzegoSum szego_sum(const VerblunskySeq& a) {
  SzegoSum s;
  const int K = a.size();
  std::vector<double> t(K);
  for (int k = 0; k < K; ++k) {
    t[k] = -std::log1p(-std::norm(a.values[k]));
    s.partial += t[k];
  }
  s.terms = K;
  if (!a.finite) s.tail = tail_estimate(t);
  return s;
}

}  // namespace opuc
