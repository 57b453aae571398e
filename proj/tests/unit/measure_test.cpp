#include "doctest.h"
#include "helpers.hpp"
#include "opuc/families.hpp"
#include "opuc/measure.hpp"

using namespace opuc;

namespace {
constexpr int M = 1024;
double bs_half(double t) { return 3.0 / std::norm(2.0 - unit(t)); }
}  // namespace

TEST_CASE("normalize") {
  auto two = normalize(CircleMeasure::from_density([](double) { return 2.0; }, M));
  CHECK(two.total_mass() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(two.density()[17] == doctest::Approx(1.0).epsilon(1e-15));

  auto withAtom = normalize(CircleMeasure::from_density([](double) { return 1.0; }, M, {{0.0, 1.0}}));
  CHECK(withAtom.density()[3] == doctest::Approx(0.5).epsilon(1e-15));
  REQUIRE(withAtom.atoms().size() == 1);
  CHECK(withAtom.atoms()[0].mass == doctest::Approx(0.5).epsilon(1e-15));

  auto bs = CircleMeasure::from_density(bs_half, M);
  CHECK(std::abs(bs.total_mass() - 1.0) < 1e-13);
  auto nb = normalize(bs);
  CHECK(std::abs(nb.density()[100] - bs.density()[100]) < 1e-13);

  CHECK_THROWS_AS(normalize(CircleMeasure::from_density([](double) { return 0.0; }, M)), Error);
}

TEST_CASE("moments") {
  auto c = moments(lebesgue(M), 8);
  CHECK(std::abs(c[0] - 1.0) < 1e-15);
  for (int k = 1; k <= 8; ++k) CHECK(std::abs(c[k]) < 1e-15);

  c = moments(one_plus_cos(M), 8);
  CHECK(std::abs(c[0] - 1.0) < 1e-14);
  CHECK(std::abs(c[1] - 0.5) < 1e-14);
  for (int k = 2; k <= 8; ++k) CHECK(std::abs(c[k]) < 1e-14);

  auto atom = CircleMeasure::from_density([](double) { return 0.0; }, M, {{0.0, 1.0}});
  c = moments(atom, 8);
  for (auto ck : c) CHECK(std::abs(ck - 1.0) < 1e-15);

  CHECK_THROWS_AS(moments(lebesgue(M), M / 2), Error);
}

TEST_CASE("moments of a real density are conjugate-symmetric") {
  // c_{-k} from the conjugate kernel equals conj(c_k)
  auto mu = three_over_two_minus_xi(M);
  const auto c = moments(mu, 10);
  for (int k = 1; k <= 10; ++k) {
    cplx cm = 0.0;
    for (int j = 0; j < M; ++j) cm += mu.density()[j] * std::pow(unit(kTwoPi * j / M), k);
    cm /= M;
    CHECK(std::abs(cm - std::conj(c[k])) < 1e-12);
  }
}

TEST_CASE("poisson_extend") {
  auto one = GridFunction::real(std::vector<double>(M, 1.0));
  for (cplx z : test::ring_points({0.2, 0.9}, 5)) CHECK(std::abs(poisson_extend(one, z) - 1.0) < 1e-13);
  CHECK(std::abs(poisson_extend(lebesgue(M), 0.5) - 1.0) < 1e-14);
  CHECK(std::abs(poisson_extend(three_over_two_minus_xi(M), 0.0) - 1.0) < 1e-13);
  CHECK_THROWS_AS(poisson_extend(lebesgue(M), 1.0 - 1e-7), Error);
}

TEST_CASE("an atom enters the Poisson integral exactly") {
  const double th = 0.7;
  auto atom = CircleMeasure::from_density([](double) { return 0.0; }, M, {{th, 1.0}});
  for (cplx z : {cplx(0.3, 0.1), cplx(-0.5, 0.4), cplx(0.6, 0.6)})
    CHECK(std::abs(poisson_extend(atom, z) - poisson_kernel(unit(th), z)) < 1e-14);
}

TEST_CASE("szego_function") {
  CHECK(std::abs(szego_function(lebesgue(M), {0.3, 0.2}) - 1.0) < 1e-13);
  auto bs = three_over_two_minus_xi(M);
  CHECK(std::abs(szego_function(bs, 0.0) - std::sqrt(3.0) / 2) < 1e-12);
  for (cplx z : test::ring_points({0.5, 0.8}, 4))
    CHECK(std::abs(szego_function(bs, z) - std::sqrt(3.0) / (2.0 - z)) < 1e-11);
  auto pc = one_plus_cos(M);
  CHECK(std::abs(szego_function(pc, 0.0) - 1.0 / std::sqrt(2.0)) < 1e-12);
  for (cplx z : test::ring_points({0.5, 0.8}, 4)) {
    CHECK(std::abs(szego_function(pc, z) - (1.0 + z) / std::sqrt(2.0)) < 1e-11);
    CHECK(std::norm(szego_function(pc, z)) <= poisson_extend(pc, z) + 1e-12);
  }
}

TEST_CASE("harmonic_conjugate") {
  std::vector<double> c(M, 2.5), cs(M), lg(M);
  for (int j = 0; j < M; ++j) {
    const double t = kTwoPi * j / M;
    cs[j] = std::cos(t);
    lg[j] = std::log(std::norm(2.0 - unit(t)) / 3.0);
  }
  auto q = harmonic_conjugate(GridFunction::real(c));
  for (int j = 0; j < M; j += 37) CHECK(std::abs(q[j]) < 1e-15);
  q = harmonic_conjugate(GridFunction::real(cs));
  for (int j = 0; j < M; ++j) CHECK(std::abs(q[j].real() - std::sin(kTwoPi * j / M)) < 1e-14);

  // log|phi_1^*|^2 for a_0 = 1/2; phi_1^* = (2 - xi)/sqrt 3 is outer, so the
  // conjugate is 2 arg(2 - xi) up to a constant
  q = harmonic_conjugate(GridFunction::real(lg));
  double worst = 0.0;
  for (int j = 0; j < M; ++j) worst = std::max(worst, std::abs(q[j].real() - 2.0 * std::arg(2.0 - unit(kTwoPi * j / M))));
  CHECK(worst < 1e-8);
}

TEST_CASE("conjugate of the conjugate is minus the centered function") {
  std::vector<double> u(M);
  for (int j = 0; j < M; ++j) {
    const double t = kTwoPi * (j + 0.25) / M;
    u[j] = 1.0 + 0.3 * std::cos(3 * t) - 0.7 * std::sin(5 * t) + 0.1 * std::cos(40 * t);
  }
  auto g = GridFunction::real(u, 0.25);
  auto qq = harmonic_conjugate(harmonic_conjugate(g));
  for (int j = 0; j < M; ++j) CHECK(std::abs(qq[j].real() + (u[j] - 1.0)) < 1e-8);
}

TEST_CASE("A-infinity characteristic") {
  const auto zs = test::ring_points({0.0, 0.3, 0.6, 0.9}, 12);
  CHECK(std::abs(ainfP_characteristic(lebesgue(M), zs) - 1.0) < 1e-13);
  CHECK(std::abs(ainfP_characteristic(three_over_two_minus_xi(M), zs) - 4.0 / 3.0) < 1e-12);
  const double pc = ainfP_characteristic(one_plus_cos(), polar_grid(64));
  CHECK(pc >= 2.0);
  CHECK(std::isfinite(pc));
}

TEST_CASE("Jensen positivity on the test families") {
  const auto zs = test::ring_points({0.0, 0.5, 0.9}, 8);
  for (const auto& mu : {lebesgue(M), one_plus_cos(M), three_over_two_minus_xi(M), random_decaying(3, 1.0, 0.9, 64, M)})
    for (cplx z : zs) CHECK(entropy_definition(mu, z) >= -1e-10);
}

TEST_CASE("weight_from_schur_boundary") {
  std::vector<cplx> zero(M, 0.0), half(M, 0.5), rat(M);
  for (int j = 0; j < M; ++j) rat[j] = 1.0 / (2.0 + unit(kTwoPi * j / M));
  auto w = weight_from_schur_boundary(GridFunction(zero));
  for (int j = 0; j < M; j += 13) CHECK(std::abs(w[j] - 1.0) < 1e-15);
  w = weight_from_schur_boundary(GridFunction(half));
  double mass = 0.0;
  for (int j = 0; j < M; ++j) {
    CHECK(std::abs(w[j].real() - bs_half(kTwoPi * j / M)) < 1e-13);
    mass += w[j].real() / M;
  }
  CHECK(std::abs(mass - 1.0) < 1e-13);
  w = weight_from_schur_boundary(GridFunction(rat));
  for (int j = 0; j < M; ++j) CHECK(std::abs(w[j].real() - 0.5 * std::norm(1.0 + unit(kTwoPi * j / M))) < 1e-10);

  std::vector<cplx> big(M, 1.1);
  CHECK_THROWS_AS(weight_from_schur_boundary(GridFunction(big)), Error);
}

TEST_CASE("declared zeros are located and used") {
  auto pc = one_plus_cos(M);
  REQUIRE(pc.zeros().size() == 1);
  CHECK(circular_distance(pc.zeros()[0].theta, kPi) < 1e-12);
  CHECK(pc.zeros()[0].order == 1);
  // int log(1 + cos) dm = -log 2
  CHECK(std::abs(mean_log(pc) + std::log(2.0)) < 1e-12);
}
