#pragma once

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace opuc {

using cplx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

enum class ErrorKind {
  InvalidArgument,
  NotConverged,
  FiniteSupport,   // |a_k| hit 1: the measure is numerically finitely supported
  DensityFloor,    // log w not resolvable on the grid
  RadiusTooLarge,  // quadrature cannot resolve the Poisson kernel at this |z|
  Singular,        // vanishing denominator in a pointwise formula
  Consistency,     // an internal cross-check failed
  Config,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline cplx unit(double theta) { return {std::cos(theta), std::sin(theta)}; }

// Smallest distance between two angles on the circle.
double circular_distance(double a, double b);

}  // namespace opuc
