#include "opuc/families.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "opuc/opuc.hpp"
#include "opuc/poly.hpp"

namespace opuc {

std::vector<FamilyInfo> family_catalog() {
  return {
      {"lebesgue", "", "normalized arc length, w = 1; every Verblunsky coefficient is 0"},
      {"bernstein-szego", "a: list of complex",
       "w = |phi_N^*(xi)|^{-2} where phi_N has Verblunsky coefficients a_0..a_{N-1}; "
       "finitely many nonzero coefficients, known exactly"},
      {"geronimus", "a: complex",
       "constant coefficients a_n = a; sum |a_n|^2 diverges unless a = 0, so the family is outside the "
       "Szego class and is rejected (kept as a negative test)"},
      {"trigpoly", "coeffs: list of complex c_0..c_d",
       "w = sum_{|k|<=d} c_k e^{ik theta}, c_{-k} = conj(c_k), divided by c_0; boundary zeros found from "
       "the roots of z^d w(z)"},
      {"atom-mixtures", "atoms: list of [theta, mass]", "uniform density 1 - sum(mass) plus point masses"},
      {"random-decaying", "seed, rate, sigma, length",
       "a_n = sigma u_n (n+1)^{-rate}, u_n uniform in the unit disk, truncated to `length` terms; "
       "rate r > 1/2 keeps sum |a_n|^2 finite (Szego gate)"},
  };
}

CircleMeasure lebesgue(int M) {
  auto mu = CircleMeasure::from_density([](double) { return 1.0; }, M, {}, {}, "lebesgue");
  mu.set_exact_verblunsky({});
  return mu;
}

CircleMeasure bernstein_szego(const std::vector<cplx>& a, int M) {
  for (const auto& x : a)
    if (!(std::abs(x) < 1.0)) throw Error(ErrorKind::InvalidArgument, "bernstein-szego: every |a_n| must be < 1");
  const int N = static_cast<int>(a.size());
  ComplexPoly ps = ComplexPoly::constant(1.0);
  if (N > 0) {
    const auto sys = szego_recursion(prescribed(a), N);
    ps = sys.phiStar[N];
    // w has peaks of width 1 - |z| at the zeros z of phi_N; the trapezoid
    // rule on M nodes only resolves them inside max_quadrature_radius(M).
    double r = 0.0;
    for (const auto& z : sys.zeros(N).roots) r = std::max(r, std::abs(z));
    if (r > max_quadrature_radius(M)) {
      int need = M;
      while (need < (1 << 26) && r > max_quadrature_radius(need)) need *= 2;
      std::ostringstream os;
      os << "bernstein-szego: phi_N has a zero of modulus " << r << ", which M = " << M
         << " nodes cannot resolve; use gridSize >= " << need;
      throw Error(ErrorKind::RadiusTooLarge, os.str());
    }
  }
  auto w = [ps](double t) { return 1.0 / std::norm(eval(ps, unit(t))); };
  std::ostringstream os;
  os << "bernstein-szego(" << N << ")";
  auto mu = CircleMeasure::from_density(w, M, {}, {}, os.str());
  mu.set_exact_verblunsky(a);
  return mu;
}

CircleMeasure geronimus(cplx a, int M) {
  if (a == cplx{0.0}) return lebesgue(M);
  std::ostringstream os;
  os << "geronimus(" << a.real() << "," << a.imag() << "): sum |a_n|^2 diverges, the measure is not Szego class";
  throw Error(ErrorKind::InvalidArgument, os.str());
}

CircleMeasure trigpoly(const std::vector<cplx>& c, int M) {
  if (c.empty() || std::abs(c[0].imag()) > 1e-14 || !(c[0].real() > 0.0))
    throw Error(ErrorKind::InvalidArgument, "trigpoly: c_0 must be real and positive");
  const int d = static_cast<int>(c.size()) - 1;
  std::vector<cplx> cn(c.size());
  for (int k = 0; k <= d; ++k) cn[k] = c[k] / c[0].real();
  auto w = [cn, d](double t) {
    double s = cn[0].real();
    for (int k = 1; k <= d; ++k) s += 2.0 * (cn[k] * unit(k * t)).real();
    return s;
  };

  std::vector<BoundaryZero> zeros;
  if (d > 0) {
    // z^d w(z) = sum_k c_{k-d} z^k, k = 0..2d.
    std::vector<cplx> q(2 * d + 1);
    for (int k = -d; k <= d; ++k) q[k + d] = k >= 0 ? cn[k] : std::conj(cn[-k]);
    const auto rs = roots(ComplexPoly(q));
    std::vector<double> angles;
    for (const auto& r : rs.roots)
      if (std::abs(std::abs(r) - 1.0) < 1e-5) angles.push_back(std::arg(r));
    std::sort(angles.begin(), angles.end());
    // Roots on the circle come in pairs, one pair per order of the zero.
    for (size_t i = 0; i < angles.size();) {
      size_t j = i + 1;
      while (j < angles.size() && circular_distance(angles[j], angles[i]) < 1e-5) ++j;
      double mean = 0.0;
      for (size_t k = i; k < j; ++k) mean += std::remainder(angles[k] - angles[i], kTwoPi);
      double th = std::remainder(angles[i] + mean / (j - i), kTwoPi);
      if (th >= kPi) th -= kTwoPi;
      // The root finder leaves a multiple root about sqrt(eps) off; polish the
      // angle as a critical point of w.
      for (int it = 0; it < 60; ++it) {
        double d1 = 0.0, d2 = 0.0;
        for (int k = 1; k <= d; ++k) {
          const cplx e = cn[k] * unit(k * th);
          d1 -= 2.0 * k * e.imag();
          d2 -= 2.0 * k * k * e.real();
        }
        if (d2 == 0.0) break;
        const double step = d1 / d2;
        th -= step;
        if (std::abs(step) < 1e-16) break;
      }
      th = std::remainder(th, kTwoPi);
      if (th >= kPi) th -= kTwoPi;
      const int order = static_cast<int>((j - i + 1) / 2);
      if (std::abs(w(th)) < 1e-8) zeros.push_back({th, order});
      i = j;
    }
    // Merge a cluster split across the branch cut at +-pi.
    if (zeros.size() > 1 && circular_distance(zeros.front().theta, zeros.back().theta) < 1e-5) {
      zeros.front().order = std::max(zeros.front().order, zeros.back().order);
      zeros.pop_back();
    }
  }
  for (int j = 0; j < M; ++j) {
    if (w(kTwoPi * j / M) < -1e-12) throw Error(ErrorKind::InvalidArgument, "trigpoly: w is negative somewhere");
  }
  auto wc = [w](double t) { return std::max(0.0, w(t)); };
  return CircleMeasure::from_density(wc, M, {}, std::move(zeros), "trigpoly(" + std::to_string(d) + ")");
}

CircleMeasure atom_mixture(const std::vector<Atom>& atoms, int M) {
  double s = 0.0;
  for (const auto& a : atoms) s += a.mass;
  if (!(s < 1.0)) throw Error(ErrorKind::InvalidArgument, "atom-mixtures: atom masses must sum to less than 1");
  const double rest = 1.0 - s;
  return CircleMeasure::from_density([rest](double) { return rest; }, M, atoms, {}, "atom-mixtures");
}

namespace {

std::vector<cplx> disk_samples(std::uint64_t seed, int length) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  std::vector<cplx> u(length);
  for (auto& x : u) {
    const double r = std::sqrt(U(gen));
    x = r * unit(kTwoPi * U(gen));
  }
  return u;
}

}  // namespace

std::vector<cplx> random_decaying_coefficients(std::uint64_t seed, double rate, double sigma, int length) {
  if (!(rate > 0.5)) throw Error(ErrorKind::InvalidArgument, "random-decaying: rate must exceed 1/2");
  if (!(sigma > 0.0 && sigma < 1.0)) throw Error(ErrorKind::InvalidArgument, "random-decaying: sigma must lie in (0, 1)");
  if (length < 1) throw Error(ErrorKind::InvalidArgument, "random-decaying: length must be positive");
  auto a = disk_samples(seed, length);
  for (int n = 0; n < length; ++n) a[n] *= sigma * std::pow(n + 1.0, -rate);
  return a;
}

CircleMeasure random_decaying(std::uint64_t seed, double rate, double sigma, int length, int M) {
  auto mu = bernstein_szego(random_decaying_coefficients(seed, rate, sigma, length), M);
  mu.set_label("random-decaying(seed=" + std::to_string(seed) + ")");
  return mu;
}

std::vector<cplx> random_verblunsky(std::uint64_t seed, int length, double maxAbs) {
  if (!(maxAbs > 0.0 && maxAbs < 1.0)) throw Error(ErrorKind::InvalidArgument, "random_verblunsky: maxAbs must lie in (0, 1)");
  auto a = disk_samples(seed, length);
  for (auto& x : a) x *= maxAbs;
  return a;
}

CircleMeasure one_plus_cos(int M) {
  auto mu = trigpoly({1.0, 0.5}, M);
  mu.set_label("1 + cos");
  return mu;
}

CircleMeasure three_over_two_minus_xi(int M) {
  auto mu = bernstein_szego({0.5}, M);
  mu.set_label("3/|2 - xi|^2");
  return mu;
}

}  // namespace opuc
