#include "doctest.h"
#include "opuc/config.hpp"
#include "opuc/families.hpp"

using namespace opuc;

namespace {
bool has(const std::string& s, const std::string& sub) { return s.find(sub) != std::string::npos; }
std::string config_error(const std::string& text) {
  try {
    (void)parse_experiment_config(text);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Config);
    return e.what();
  }
  return {};
}
}  // namespace

TEST_CASE("a minimal config parses with defaults") {
  const auto c = parse_experiment_config(R"({"measure": {"type": "family", "name": "lebesgue"}})");
  CHECK(c.measure.gridSize == kDefaultGridSize);
  CHECK(c.grids.nMax == 20);
  CHECK(c.output.csv);
}

TEST_CASE("unknown keys are rejected with their path") {
  CHECK(has(config_error(R"({"measure": {"type": "family", "name": "lebesgue"}, "colour": 1})"), "colour"));
  CHECK(has(config_error(R"({"measure": {"type": "family", "name": "lebesgue", "widht": 3}})"), "measure.widht"));
  CHECK(has(config_error(R"({"measure": {"type": "family", "name": "lebesgue"}, "grids": {"nmax": 3}})"), "grids.nmax"));
}

TEST_CASE("syntax errors report a position") {
  const auto msg = config_error("{\n  \"measure\": {\"type\": \"family\",,}\n}");
  CHECK(has(msg, "line 2"));
}

TEST_CASE("unknown tasks and families are rejected") {
  CHECK(!config_error(R"({"measure": {"type": "family", "name": "lebesgue"}, "tasks": ["nope"]})").empty());
  CHECK(!config_error(R"({"measure": {"type": "family", "name": "nope"}})").empty());
}

TEST_CASE("tolerance overrides") {
  auto c = parse_experiment_config(R"({"measure": {"type": "family", "name": "lebesgue"}, "tolerances": {"wall": 1e-9}})");
  CHECK(tolerance(c, "wall") == 1e-9);
  CHECK(tolerance(c, "szego") == default_tolerances().at("szego"));
  set_tolerance(c, "szego", 1e-5);
  CHECK(tolerance(c, "szego") == 1e-5);
  CHECK_THROWS_AS(set_tolerance(c, "szego", 1e-15), Error);
  CHECK_THROWS_AS(set_tolerance(c, "bogus", 1e-5), Error);
  CHECK(!config_error(R"({"measure": {"type": "family", "name": "lebesgue"}, "tolerances": {"wall": 1e-16}})").empty());
}

TEST_CASE("build_measure") {
  auto c = parse_experiment_config(R"({"measure": {"type": "verblunsky", "a": [0.5], "gridSize": 1024}})");
  auto mu = build_measure(c.measure, c.seed);
  CHECK(mu.grid_size() == 1024);
  REQUIRE(mu.exact_verblunsky());
  CHECK(std::abs(mu.density()[0] - 3.0) < 1e-13);

  c = parse_experiment_config(R"({"measure": {"type": "trigpoly", "coeffs": [1, 0.5]}})");
  mu = build_measure(c.measure, 0);
  CHECK(std::abs(mu.density()[0] - 2.0) < 1e-14);

  c = parse_experiment_config(
      R"({"measure": {"type": "family", "name": "atom-mixtures", "atoms": [[1.0, 0.2]], "gridSize": 512}})");
  mu = build_measure(c.measure, 0);
  CHECK(std::abs(mu.total_mass() - 1.0) < 1e-14);
  CHECK(std::abs(mu.density()[5] - 0.8) < 1e-14);
}

TEST_CASE("family catalog") {
  const auto cat = family_catalog();
  auto find = [&](const std::string& n) -> const FamilyInfo* {
    for (const auto& f : cat)
      if (f.name == n) return &f;
    return nullptr;
  };
  for (auto n : {"lebesgue", "bernstein-szego", "geronimus", "trigpoly", "atom-mixtures", "random-decaying"})
    CHECK(find(n) != nullptr);
  REQUIRE(find("bernstein-szego"));
  CHECK(has(find("bernstein-szego")->description, "phi"));
  REQUIRE(find("random-decaying"));
  CHECK(has(find("random-decaying")->description, "(n+1)^"));
  CHECK(has(find("random-decaying")->description, "1/2"));
}

TEST_CASE("families") {
  CHECK_THROWS_AS(geronimus(0.3), Error);
  CHECK(geronimus(0.0).density()[9] == doctest::Approx(1.0));
  const auto a1 = random_decaying_coefficients(42, 1.0, 0.9, 16);
  const auto a2 = random_decaying_coefficients(42, 1.0, 0.9, 16);
  CHECK(a1 == a2);
  for (int n = 0; n < 16; ++n) CHECK(std::abs(a1[n]) <= 0.9 / (n + 1.0));
  const auto a3 = random_decaying_coefficients(43, 1.0, 0.9, 16);
  CHECK(a1 != a3);
  try {
    (void)bernstein_szego({0.999999});
    FAIL("expected RadiusTooLarge");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::RadiusTooLarge);
    CHECK(has(e.what(), "gridSize"));
  }
}
