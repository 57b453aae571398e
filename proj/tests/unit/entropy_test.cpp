#include "doctest.h"
#include "helpers.hpp"
#include "opuc/entropy.hpp"
#include "opuc/families.hpp"

using namespace opuc;

namespace {
double bs_closed(cplx z) { return std::log((1.0 - std::norm(z) / 4.0) / 0.75); }
}  // namespace

TEST_CASE("entropy examples") {
  const auto zs = test::ring_points({0.0, 0.5, 0.9, 0.99}, 6);
  for (cplx z : zs) CHECK(std::abs(entropy(lebesgue(), z)) < 1e-13);
  const auto bs = three_over_two_minus_xi();
  CHECK(std::abs(entropy(bs, 0.0) - 0.2876820724517809) < 1e-12);
  for (cplx z : zs) CHECK(std::abs(entropy(bs, z) - bs_closed(z)) < 1e-10);
  CHECK_THROWS_AS(entropy(bs, 0.995), Error);
}

TEST_CASE("definition and Schur forms agree") {
  for (const auto& mu : {three_over_two_minus_xi(), one_plus_cos(), random_decaying(13, 1.0, 0.9, 64)}) {
    SchurModel m(mu);
    for (cplx z : test::ring_points({0.0, 0.5, 0.9}, 5)) CHECK(entropy_forms(m, z).diff() < 1e-7);
  }
}

TEST_CASE("product formula") {
  SchurModel leb(lebesgue());
  auto r = theorem1_product(leb, {0.2, 0.5}, 10);
  CHECK(std::abs(r.K) < 1e-13);
  CHECK(std::abs(r.product) < 1e-15);

  SchurModel bs(three_over_two_minus_xi());
  r = theorem1_product(bs, 0.5, 10);
  CHECK(std::abs(r.product - std::log(1.25)) < 1e-12);
  CHECK(r.residual < 1e-8);

  // 1 + cos at z = 0: partial sums log(2 (N + 2) / (N + 3))
  SchurModel pc(one_plus_cos());
  r = theorem1_product(pc, 0.0, 200);
  for (int N = 0; N < static_cast<int>(r.partial.size()); N += 17)
    CHECK(std::abs(r.partial[N] - std::log(2.0 * (N + 2) / (N + 3))) < 1e-12);
  CHECK(r.monotone);
  CHECK(r.residual <= 1e-6 + r.tailBound);
}

TEST_CASE("product factors are at least one") {
  SchurModel m(random_decaying(17, 1.0, 0.9, 64));
  for (cplx z : test::ring_points({0.3, 0.9, 0.99}, 6)) {
    const auto f = m.iterates_at(z, 40);
    for (auto fn : f) CHECK((1.0 - std::norm(z * fn)) / (1.0 - std::norm(fn)) >= 1.0 - 1e-12);
  }
}

TEST_CASE("chain step") {
  SchurModel leb(lebesgue());
  auto c = entropy_chain_step(leb, 0.3);
  CHECK(std::abs(c.K) + std::abs(c.K1) + std::abs(c.factor) < 1e-12);

  SchurModel bs(three_over_two_minus_xi());
  c = entropy_chain_step(bs, 0.0);
  CHECK(std::abs(c.K1) < 1e-12);
  CHECK(std::abs(c.factor - std::log(4.0 / 3.0)) < 1e-14);

  SchurModel pc(one_plus_cos());
  c = entropy_chain_step(pc, 0.0);
  CHECK(std::abs(c.K - std::log(2.0)) < 1e-10);
  CHECK(std::abs(c.K1 - std::log(1.5)) < 1e-9);
  CHECK(c.residual() < 1e-7);
}

TEST_CASE("monotonicity along the Schur family") {
  SchurModel pc(one_plus_cos());
  const std::vector<cplx> zs{0.0, {0.5, 0.2}};
  const auto rep = entropy_monotonicity(pc, zs, 4);
  CHECK(rep.worstViolation <= 1e-9);
  // K(mu_n, 0) = log((n + 2) / (n + 1))
  for (int n = 0; n <= 4; ++n) CHECK(std::abs(rep.K[n][0] - std::log((n + 2.0) / (n + 1.0))) < 1e-9);

  SchurModel bs(three_over_two_minus_xi());
  const auto r2 = entropy_monotonicity(bs, zs, 2);
  CHECK(std::abs(r2.K[1][1]) < 1e-12);
}

TEST_CASE("weight entropy bound") {
  SchurModel bs(three_over_two_minus_xi());
  auto b = weight_entropy_bound(bs, 0.0, 0);
  CHECK(std::abs(b.weightK) < 1e-13);
  CHECK(std::abs(b.measureK - std::log(4.0 / 3.0)) < 1e-12);

  SchurModel pc(one_plus_cos());
  for (cplx z : {cplx(0.0), cplx(0.6, 0.3)})
    for (int n : {0, 2}) CHECK(weight_entropy_bound(pc, z, n).margin() >= -1e-9);
}

TEST_CASE("Clark measures have the same entropy") {
  SchurModel bs(three_over_two_minus_xi());
  const auto dual = clark_measure(bs, -1.0);
  for (int j = 0; j < dual.grid_size(); j += 61) {
    const cplx xi = unit(kTwoPi * j / dual.grid_size());
    CHECK(std::abs(dual.density()[j] - 0.75 / std::norm(1.0 + xi / 2.0)) < 1e-12);
  }
  const auto zs = test::ring_points({0.0, 0.5, 0.9}, 4);
  CHECK(clark_dual_invariance(bs, zs, -1.0).maxDiff < 1e-9);
  SchurModel pc(one_plus_cos());
  for (cplx al : {cplx(1), cplx(-1), cplx(0, 1), cplx(0, -1)}) CHECK(clark_dual_invariance(pc, zs, al).maxDiff < 1e-7);
}

TEST_CASE("Bernstein-Szego approximant examples") {
  SchurModel leb(lebesgue());
  auto b = bernstein_szego_approx(leb, 2, {0.3, 0.1});
  for (int j = 0; j < b.measure.grid_size(); j += 97) CHECK(std::abs(b.measure.density()[j] - 1.0) < 1e-13);

  SchurModel bs(three_over_two_minus_xi());
  b = bernstein_szego_approx(bs, 0, 0.0);
  const auto& w = bs.measure().density();
  for (int j = 0; j < b.measure.grid_size(); j += 97) CHECK(std::abs(b.measure.density()[j] - w[j]) < 1e-13);

  SchurModel pc(one_plus_cos());
  b = bernstein_szego_approx(pc, 0, 0.0);
  for (int j = 0; j < b.measure.grid_size(); j += 97) CHECK(std::abs(b.measure.density()[j] - w[j]) < 1e-13);
  CHECK(std::abs(b.K - std::log(2.0)) < 1e-10);
  CHECK(std::abs(b.Khat - std::log(4.0 / 3.0)) < 1e-10);
  CHECK(std::abs(b.Knext - std::log(1.5)) < 1e-9);
  CHECK(b.massError < 1e-8);
  CHECK(b.iterateError < 1e-6);
}

TEST_CASE("Bernstein-Szego approximant needs c unconjugated") {
  // With complex coefficients the conjugated weight
  // (1 - |c|^2) / |phi_n^* - xi conj(c) phi_n|^2 does not reproduce f_n(z*).
  SchurModel m(bernstein_szego({cplx(0.3, 0.4), cplx(-0.2, 0.5), cplx(0.1, -0.3)}));
  const cplx zs(0.2, 0.3);
  const int n = 1;
  const auto good = bernstein_szego_approx(m, n, zs);
  CHECK(good.iterateError < 1e-6);
  CHECK(good.additivityError() < 1e-6);

  const auto sys = szego_recursion(m.verblunsky(), n);
  const cplx c = good.c;
  const int M = m.measure().grid_size();
  std::vector<double> wc(M);
  for (int j = 0; j < M; ++j) {
    const cplx xi = unit(kTwoPi * j / M);
    wc[j] = (1.0 - std::norm(c)) / std::norm(eval(sys.phiStar[n], xi) - xi * std::conj(c) * eval(sys.phi[n], xi));
  }
  SchurModel conj(CircleMeasure::from_samples(wc));
  CHECK(std::abs(conj.iterate(n, zs) - m.iterate(n, zs)) > 1e-2);
  CHECK(std::abs(good.measure.total_mass() - 1.0) < 1e-8);
}

TEST_CASE("K vanishes only for Lebesgue measure") {
  const auto zs = test::ring_points({0.0, 0.5, 0.9}, 4);
  for (cplx z : zs) CHECK(std::abs(entropy(lebesgue(), z)) < 1e-13);
  for (const auto& mu : {three_over_two_minus_xi(), one_plus_cos(), random_decaying(2, 1.0, 0.9, 64)}) {
    double mx = 0.0;
    for (cplx z : zs) mx = std::max(mx, entropy(mu, z));
    CHECK(mx > 1e-6);
  }
}

TEST_CASE("K is superharmonic around the origin") {
  for (const auto& mu : {one_plus_cos(), random_decaying(4, 1.0, 0.9, 64)}) {
    const double k0 = entropy(mu, 0.0);
    for (double r : {0.2, 0.5, 0.8}) {
      double mean = 0.0;
      for (int k = 0; k < 64; ++k) mean += entropy(mu, r * unit(kTwoPi * k / 64)) / 64;
      CHECK(mean <= k0 + 1e-6);
    }
  }
}

TEST_CASE("oscillation and BMO ratios") {
  SchurModel leb(lebesgue());
  const auto zs = test::ring_points({0.3, 0.9}, 6);
  CHECK(oscillation_bound(leb, zs, 3).evaluated == 0);
  SchurModel bs(three_over_two_minus_xi());
  CHECK(oscillation_bound(bs, {0.0}, 0).maxRatio < 1e-12);
  SchurModel pc(one_plus_cos());
  const auto r = oscillation_bound(pc, zs, 10);
  CHECK(r.finite);
  CHECK(r.maxRatio <= 100.0);

  const auto& mu = pc.measure();
  const auto lw = log_density(mu);
  std::vector<double> flat(lw.size(), 3.0);
  CHECK(bmo_eta_norm(GridFunction::real(flat, lw.offset()), mu, zs).maxRatio < 1e-12);
  const double logw = bmo_eta_norm(lw, mu, zs).maxRatio;
  CHECK(std::isfinite(logw));
  CHECK(logw <= 100.0);
}

TEST_CASE("eta") {
  const auto mu = one_plus_cos();
  EtaFunction eta(mu);
  const double K = entropy(mu, 0.3);
  CHECK(std::abs(eta(0.3) - std::max(std::sqrt(K), K * std::exp(K / 2))) < 1e-14);
  const auto leb = lebesgue();
  EtaFunction e0(leb);
  CHECK(e0(0.5) < 1e-6);
}
