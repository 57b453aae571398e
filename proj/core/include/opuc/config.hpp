#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "opuc/measure.hpp"

namespace opuc {

// measure: {type: trigpoly | grid | family | verblunsky, ...}
//   trigpoly    coeffs: [c_0, c_1, ...]
//   grid        samples: [w_0, ..., w_{M-1}] (M a power of two)
//   family      name: one of family_catalog(), with a / coeffs / rate / sigma / length
//   verblunsky  a: [a_0, ...] (finite, zero afterwards)
//   every type  atoms: [[theta, mass], ...], gridSize
// Complex values are numbers or [re, im] pairs.
struct MeasureConfig {
  std::string type;
  std::string name;
  std::vector<cplx> coeffs;
  std::vector<cplx> a;
  std::vector<double> samples;
  std::vector<Atom> atoms;
  int gridSize = kDefaultGridSize;
  double rate = 1.0;
  double sigma = 0.9;
  int length = 64;
};

struct GridConfig {
  std::vector<double> radii{0.1, 0.3, 0.5, 0.7, 0.9};
  int angles = 16;
  int nMax = 20;
  std::vector<int> nList{1, 2, 5, 10, 20, 50, 100};
  std::vector<double> xi{0.0};  // boundary angles
  double radialA = 1.0;
  double stolzRho = 0.5;
  double tMax = 20.0;
  int tPoints = 201;
  double window = 10.0;
  cplx zStar{0.0};
};

struct OutputConfig {
  std::string dir = "out";
  bool csv = true;
  bool json = true;
};

struct ExperimentConfig {
  MeasureConfig measure;
  std::vector<std::string> tasks;
  GridConfig grids;
  std::map<std::string, double> tolerances;
  std::uint64_t seed = 0;
  OutputConfig output;
};

const std::vector<std::string>& known_tasks();

// Named tolerances used by the verification tasks, with defaults.
const std::map<std::string, double>& default_tolerances();

// Throws Error(Config) with the offending key path, or the line and column
// of a syntax error.
ExperimentConfig parse_experiment_config(const std::string& text);
ExperimentConfig load_experiment_config(const std::string& path);

// Applies NAME=VAL; rejects unknown names and values below 100 eps.
void set_tolerance(ExperimentConfig& cfg, const std::string& name, double value);
double tolerance(const ExperimentConfig& cfg, const std::string& name);

CircleMeasure build_measure(const MeasureConfig& m, std::uint64_t seed);

}  // namespace opuc
