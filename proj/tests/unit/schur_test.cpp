#include "doctest.h"
#include "helpers.hpp"
#include "opuc/families.hpp"
#include "opuc/iterates.hpp"
#include "opuc/opuc.hpp"
#include "opuc/schur.hpp"

using namespace opuc;

namespace {
std::vector<cplx> cos_moments(int K) {
  std::vector<cplx> c(K + 1, 0.0);
  c[0] = 1.0;
  c[1] = 0.5;
  return c;
}
// a_n = (-1)^n / (n + 2)
cplx cos_a(int n) { return (n % 2 ? -1.0 : 1.0) / (n + 2.0); }
}  // namespace

TEST_CASE("caratheodory_to_schur examples") {
  std::vector<cplx> leb(12, 0.0);
  leb[0] = 1.0;
  auto f = caratheodory_to_schur(leb);
  for (auto t : f.taylor) CHECK(std::abs(t) == 0.0);

  f = caratheodory_to_schur(std::vector<cplx>(12, 1.0));
  CHECK(std::abs(f.taylor[0] - 1.0) < 1e-15);
  for (int k = 1; k < f.order(); ++k) CHECK(std::abs(f.taylor[k]) < 1e-15);
  CHECK(f.near_boundary());

  f = caratheodory_to_schur(cos_moments(12));
  REQUIRE(f.order() == 12);
  for (int k = 0; k < f.order(); ++k) CHECK(std::abs(f.taylor[k] - std::pow(-1.0, k) / std::pow(2.0, k + 1)) < 1e-15);
}

TEST_CASE("schur_algorithm examples") {
  SchurSeries zero{std::vector<cplx>(10, 0.0)};
  auto r = schur_algorithm(zero, 5);
  for (int k = 0; k < 5; ++k) CHECK(std::abs(r.a.at(k)) == 0.0);

  auto f = caratheodory_to_schur(cos_moments(40));
  r = schur_algorithm(f, 20);
  for (int k = 0; k < 20; ++k) CHECK(std::abs(r.a.at(k) - cos_a(k)) < 1e-12);
  // iterate series against (-1)^n / ((n+2) + (n+1) z)
  for (int n : {1, 3, 6}) {
    const auto& it = r.iterates[n].taylor;
    const double p = n + 2.0, q = n + 1.0;
    for (int k = 0; k < 5; ++k)
      CHECK(std::abs(it[k] - std::pow(-1.0, n) / p * std::pow(-q / p, k)) < 1e-12);
  }

  SchurSeries half{std::vector<cplx>(10, 0.0)};
  half.taylor[0] = 0.5;
  r = schur_algorithm(half, 5);
  CHECK(std::abs(r.a.at(0) - 0.5) < 1e-15);
  for (int k = 1; k < 5; ++k) CHECK(std::abs(r.a.at(k)) < 1e-15);

  CHECK_THROWS_AS(schur_algorithm(half, 10), Error);
}

TEST_CASE("unimodular a stops the algorithm with the index") {
  auto f = caratheodory_to_schur(std::vector<cplx>(12, 1.0));
  const auto r = schur_algorithm(f, 5);
  REQUIRE(r.a.warning);
  CHECK(r.a.warning->index == 0);
  CHECK(r.a.size() == 0);
  CHECK(r.a.warning->message.find("a_0") != std::string::npos);
}

TEST_CASE("verblunsky_levinson examples") {
  std::vector<cplx> c(12, 0.0);
  c[0] = 1.0;
  auto a = verblunsky_levinson(c, 10);
  for (int k = 0; k < 10; ++k) CHECK(std::abs(a.at(k)) == 0.0);

  a = verblunsky_levinson(cos_moments(60), 50);
  for (int k = 0; k < 50; ++k) CHECK(std::abs(a.at(k) - cos_a(k)) < 1e-12);

  a = verblunsky_levinson(moments(three_over_two_minus_xi(1024), 20), 20);
  CHECK(std::abs(a.at(0) - 0.5) < 1e-13);
  for (int k = 1; k < 20; ++k) CHECK(std::abs(a.at(k)) < 1e-13);
}

TEST_CASE("Schur algorithm and Levinson agree on smooth densities") {
  for (const auto& mu : {one_plus_cos(), random_decaying(21, 1.0, 0.9, 64)}) {
    const int N = 64;
    const auto c = moments(mu, N + kTruncationReserve);
    const auto sa = schur_algorithm(caratheodory_to_schur(c), N).a;
    const auto lv = verblunsky_levinson(c, N);
    for (int k = 0; k < N; ++k) CHECK(std::abs(sa.at(k) - lv.at(k)) < 1e-8);
  }
}

TEST_CASE("Wall polynomial examples") {
  auto w = wall_polynomials(prescribed(std::vector<cplx>(6, 0.0)), 4);
  CHECK(w.A.is_zero());
  CHECK(max_coeff_diff(w.B, ComplexPoly::constant(1.0)) == 0.0);

  w = wall_polynomials(prescribed({0.5}), 0);
  CHECK(max_coeff_diff(w.A, ComplexPoly::constant(0.5)) == 0.0);
  CHECK(max_coeff_diff(w.B, ComplexPoly::constant(1.0)) == 0.0);

  // f = (A_2 + z B_2^* f_3) / (B_2 + z A_2^* f_3) for f = 1/(2 + z)
  std::vector<cplx> a;
  for (int k = 0; k < 10; ++k) a.push_back(cos_a(k));
  w = wall_polynomials(prescribed(a, false), 2);
  for (cplx z : test::ring_points({0.3, 0.6, 0.9}, 7)) {
    const cplx f3 = test::cos_iterate(3, z);
    const cplx rec = (eval(w.A, z) + z * eval(w.Bstar, z) * f3) / (eval(w.B, z) + z * eval(w.Astar, z) * f3);
    CHECK(std::abs(rec - 1.0 / (2.0 + z)) < 1e-9);
  }
}

TEST_CASE("B_n has no zeros in the closed disk") {
  const auto a = prescribed(random_verblunsky(77, 12, 0.9));
  for (const auto& w : wall_table(a, 11)) {
    if (w.B.degree() < 1) continue;
    for (auto r : roots(w.B).roots) CHECK(std::abs(r) > 1.0);
  }
}

TEST_CASE("iterate routes on f = 1/(2 + z)") {
  SchurModel m(one_plus_cos());
  auto e = m.schur_iterate_eval(2, 0.0);
  CHECK(std::abs(e.mobius - 0.25) < 1e-12);
  CHECK(std::abs(e.wall - 0.25) < 1e-12);
  CHECK(std::abs(m.wall_route(3, 1.0) + 1.0 / 9.0) < 1e-10);
  CHECK_THROWS_AS(m.mobius_route(3, 1.0), Error);
  for (int n : {0, 5, 20, 50})
    for (cplx z : test::ring_points({0.2, 0.7, 0.99}, 5)) {
      e = m.schur_iterate_eval(n, z);
      CHECK(e.discrepancy < 1e-8);
      CHECK(std::abs(e.wall - test::cos_iterate(n, z)) < 1e-8);
    }

  SchurModel leb(lebesgue());
  e = leb.schur_iterate_eval(4, {0.3, 0.3});
  CHECK(std::abs(e.mobius) == 0.0);
  CHECK(std::abs(e.wall) == 0.0);
}

TEST_CASE("boundary iterates stay in the closed disk") {
  SchurModel m(random_decaying(5, 1.0, 0.9, 64));
  for (int n : {0, 3, 10}) {
    const auto b = m.boundary_iterate(n);
    for (int j = 0; j < b.publicGrid.size(); ++j) CHECK(std::abs(b.publicGrid[j]) <= 1.0 + 1e-10);
  }
}

TEST_CASE("Szego sum for a_n = (-1)^n / (n + 2)") {
  std::vector<cplx> a;
  for (int k = 0; k < 10000; ++k) a.push_back(cos_a(k));
  const auto s = szego_sum(prescribed(a, false));
  // partial sum after N terms telescopes to log(2 (N + 1) / (N + 2))
  CHECK(std::abs(s.partial - std::log(2.0 * 10001.0 / 10002.0)) < 1e-10);
  CHECK(std::abs(s.partial + s.tail - std::log(2.0)) < 1e-8);
}

TEST_CASE("Szego sum equals the log integral for finite sequences") {
  for (int seed = 0; seed < 4; ++seed) {
    const auto a = random_verblunsky(300 + seed, 4, 0.7);
    const auto mu = bernstein_szego(a);
    CHECK(std::abs(szego_sum(prescribed(a)).partial + mean_log(mu)) < 1e-6);
  }
}
