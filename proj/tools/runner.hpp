#pragma once

#include <string>
#include <vector>

#include "opuc/config.hpp"

namespace opuc::cli {

struct IdentityResult {
  std::string name;
  std::string anchor;  // the identity being checked, in words
  double maxResidual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string note;
};

struct VerificationSummary {
  std::vector<IdentityResult> identities;
  std::vector<std::string> taskErrors;
  std::vector<std::string> notes;
  int gridSize = 0;
  std::uint64_t seed = 0;
  int threads = 1;
  std::string measureLabel;
  int failures() const;
};

struct RunOptions {
  bool writeFiles = true;
};

// Runs every task in the config. Task failures are recorded and the next
// task still runs.
VerificationSummary run_experiment(const ExperimentConfig& cfg, const RunOptions& opt = {});

// 17 significant digits, the format of every CSV number.
std::string fmt17(double v);

void print_summary(const VerificationSummary& s, std::FILE* out);

}  // namespace opuc::cli
