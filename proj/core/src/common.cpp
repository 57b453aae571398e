#include "opuc/common.hpp"

#include <cmath>

namespace opuc {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::NotConverged: return "not-converged";
    case ErrorKind::FiniteSupport: return "finite-support";
    case ErrorKind::DensityFloor: return "density-floor";
    case ErrorKind::RadiusTooLarge: return "radius-too-large";
    case ErrorKind::Singular: return "singular";
    case ErrorKind::Consistency: return "consistency";
    case ErrorKind::Config: return "config";
  }
  return "unknown";
}

double circular_distance(double a, double b) {
  double d = std::remainder(a - b, kTwoPi);
  return std::abs(d);
}

}  // namespace opuc
