#include "doctest.h"
#include "helpers.hpp"
#include "opuc/asymptotics.hpp"
#include "opuc/families.hpp"

using namespace opuc;

TEST_CASE("zero scaling") {
  auto leb = szego_recursion(prescribed(std::vector<cplx>(20, 0.0)), 20);
  auto half = szego_recursion(prescribed({0.5}), 20);
  for (int n : {1, 5, 20}) {
    CHECK(std::abs(dist_times_n(leb, 0.0, n) - n) < 1e-12);
    CHECK(std::abs(dist_times_n(half, 0.0, n) - n / 2.0) < 1e-12);
  }
  const auto z = zero_scaling(half, 0.7, {3, 10});
  CHECK(std::abs(z[1] - 10.0 * std::abs(unit(0.7) - 0.5)) < 1e-12);
}

TEST_CASE("radial Schur values") {
  SchurModel leb(lebesgue());
  for (const auto& v : radial_schur(leb, 0.4, 1.0, {2, 5, 10})) CHECK(std::abs(v.value) == 0.0);

  SchurModel pc(one_plus_cos());
  const auto rows = radial_schur(pc, 0.0, 1.0, {1, 2, 4, 8, 16, 32});
  CHECK(rows[0].skipped);
  double prev = 1.0;
  for (size_t i = 1; i < rows.size(); ++i) {
    const int n = rows[i].n;
    CHECK(std::abs(rows[i].value - test::cos_iterate(n, 1.0 - 1.0 / n)) < 1e-10);
    if (n >= 4) {
      CHECK(std::abs(rows[i].value) < prev);
      prev = std::abs(rows[i].value);
    }
  }

  auto atom = CircleMeasure::from_density([](double) { return 0.0; }, 1024, {{0.0, 1.0}});
  CHECK_THROWS_AS(szego_gate(atom), Error);
}

TEST_CASE("Stolz region sup") {
  SchurModel leb(lebesgue());
  CHECK(stolz_sup(leb, 0.0, 0.5, 7) == 0.0);
  SchurModel bs(three_over_two_minus_xi());
  for (int n : {1, 4}) CHECK(stolz_sup(bs, 0.0, 0.5, n) < 1e-10);
  SchurModel pc(one_plus_cos());
  const double s = stolz_sup(pc, 0.0, 0.5, 20);
  CHECK(s <= 0.25);
  double direct = 0.0;
  for (cplx z : stolz_mesh(0.0, 0.5)) direct = std::max(direct, std::abs(test::cos_iterate(20, z)));
  CHECK(std::abs(s - direct) < 1e-10);
}

TEST_CASE("Stolz mesh stays inside the region") {
  for (double th : {0.0, 1.3}) {
    const auto mesh = stolz_mesh(th, 0.5);
    CHECK(!mesh.empty());
    for (cplx z : mesh) {
      CHECK(std::abs(z) <= 0.999);
      CHECK(in_stolz(z, th, 0.5 + 1e-12));
    }
  }
}

TEST_CASE("phi star gap") {
  auto leb = szego_recursion(prescribed(std::vector<cplx>(30, 0.0)), 30);
  for (double g : phi_star_gap(leb, lebesgue(), 0.5, {1, 10, 30})) CHECK(g < 1e-13);
  auto half = szego_recursion(prescribed({0.5}), 30);
  for (double g : phi_star_gap(half, three_over_two_minus_xi(), 0.0, {1, 10, 30})) CHECK(g < 1e-12);
  SchurModel pc(one_plus_cos());
  auto sys = szego_recursion(pc.verblunsky(), 100);
  const auto g = phi_star_gap(sys, pc.measure(), 0.0, {10, 100});
  CHECK(g[1] < 1e-2);
  CHECK(g[1] < g[0]);
  CHECK_THROWS_AS(phi_star_gap(sys, pc.measure(), kPi, {10}), Error);
}

TEST_CASE("Lebesgue scaling rows are exact") {
  SchurModel leb(lebesgue());
  auto sys = szego_recursion(leb.verblunsky(), 50);
  const auto ss = scaling_series(sys, leb, 0.3, {2, 10, 50});
  for (const auto& r : ss.rows) {
    CHECK(r.distTimesN == doctest::Approx(r.n).epsilon(1e-14));
    CHECK(r.radialAbs == 0.0);
    CHECK(r.stolzSup == 0.0);
    CHECK(r.phiStarGap < 1e-14);
  }
}

TEST_CASE("rescaled zero density") {
  auto leb = szego_recursion(prescribed(std::vector<cplx>(10, 0.0)), 10);
  auto p = rescaled_zero_profile(leb, 10);
  for (double t : {-3.0, 0.0, 7.0}) CHECK(std::abs(p.h_prime(t) - 1.0) < 1e-14);

  auto half = szego_recursion(prescribed({0.5}), 100);
  for (int n : {1, 4, 20}) {
    p = rescaled_zero_profile(half, n);
    CHECK(std::abs(p.h_prime(0.0) - (n + 2.0) / n) < 1e-12);
  }
  // each Poisson kernel carries mass 2 pi before the 1/n scale
  SchurModel pc(one_plus_cos());
  auto sys = szego_recursion(pc.verblunsky(), 40);
  p = rescaled_zero_profile(sys, 40);
  const int K = 40000;
  double mass = 0.0;
  for (int k = 0; k < K; ++k) mass += p.h_prime(-kPi * 40 + kTwoPi * 40 * (k + 0.5) / K);
  mass *= kTwoPi * 40 / K / kTwoPi;
  CHECK(std::abs(mass - 40.0) < 1e-6);

  for (double t : {-2.0, 0.5}) CHECK(std::abs(p.h_prime_near(t, 3.0) + p.h_prime_far(t, 3.0) - p.h_prime(t)) < 1e-13);
}

TEST_CASE("limit kernel") {
  LimitKernel none;
  CHECK(none(1.0) == 0.0);
  LimitKernel one{{cplx(0.0, 1.0)}};
  CHECK(std::abs(one(0.0) - 2.0) < 1e-15);

  auto half = szego_recursion(prescribed({0.5}), 100);
  const auto p = rescaled_zero_profile(half, 100);
  const auto U = limit_kernel(p, 10.0);
  CHECK(U.points.empty());
  CHECK(std::abs(p.h_prime_far(0.0, 10.0) - p.h_prime(0.0)) < 1e-14);
}

TEST_CASE("v_n argument formula") {
  SchurModel leb(lebesgue());
  auto s0 = szego_recursion(leb.verblunsky(), 4);
  CHECK(vn_argument_check(s0, leb, 3).maxError < 1e-10);
  SchurModel bs(three_over_two_minus_xi());
  auto s1 = szego_recursion(bs.verblunsky(), 2);
  CHECK(vn_argument_check(s1, bs, 1).maxError < 1e-8);
  SchurModel pc(one_plus_cos());
  auto s2 = szego_recursion(pc.verblunsky(), 6);
  CHECK(vn_argument_check(s2, pc, 5).maxError < 1e-6);
}

TEST_CASE("region oscillation") {
  SchurModel leb(lebesgue());
  for (double v : region_oscillation(leb, 0.0, 0.1, 0.5, 0.5, 2.0, {0, 3})) CHECK(v == 0.0);
  SchurModel bs(three_over_two_minus_xi());
  CHECK(region_oscillation(bs, 0.0, 0.1, 0.5, 0.5, 2.0, {0})[0] < 1e-13);
  SchurModel pc(one_plus_cos());
  double prev = 1e300;
  for (int n : {10, 40, 160}) {
    const auto osc = region_oscillation(pc, 0.0, 1.0 / n, 0.5, 0.5, 2.0, {0, 1, 2, 5});
    const double mx = *std::max_element(osc.begin(), osc.end());
    CHECK(mx < prev);
    prev = mx;
  }
}
