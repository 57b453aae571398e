#pragma once

#include <optional>
#include <string>
#include <vector>

#include "opuc/common.hpp"
#include "opuc/poly.hpp"

namespace opuc {

inline constexpr double kUnitMargin = 1e-12;   // |a_k| >= 1 - this stops the recursions
inline constexpr int kTruncationReserve = 32;

// Truncated Taylor series of a Schur function at the origin.
struct SchurSeries {
  std::vector<cplx> taylor;
  int order() const { return static_cast<int>(taylor.size()); }
  // |taylor[0]| > 1 - 1e-12: the series sits on the edge of the Schur class.
  bool near_boundary() const { return !taylor.empty() && std::abs(taylor[0]) > 1.0 - kUnitMargin; }
};

enum class VerblunskySource { SchurAlgorithm, Levinson, Prescribed };
const char* to_string(VerblunskySource s);

// Raised when some |a_k| reaches 1 - 1e-12: the measure is numerically
// supported on finitely many points and the recursion cannot continue.
struct FiniteSupportWarning {
  int index;
  std::string message;
};

struct VerblunskySeq {
  std::vector<cplx> values;
  VerblunskySource source = VerblunskySource::Prescribed;
  // Prescribed sequences that are exactly zero beyond `values`.
  bool finite = false;
  std::optional<FiniteSupportWarning> warning;

  int size() const { return static_cast<int>(values.size()); }
  // a_k, or 0 past the end of a finite sequence.
  cplx at(int k) const;
  double sum_squares() const;
};

VerblunskySeq prescribed(std::vector<cplx> a, bool finite = true);

// F = 1 + 2 sum c_k z^k, f = (F - 1) / (z (F + 1)); returns c.size() - 1
// Taylor coefficients of f.
SchurSeries caratheodory_to_schur(const std::vector<cplx>& c);

struct SchurAlgorithmResult {
  VerblunskySeq a;
  std::vector<SchurSeries> iterates;  // f_0 .. f_count (fewer if stopped)
};

// Schur algorithm on a truncated series; each step loses one order, so
// count < f.order() is required.
SchurAlgorithmResult schur_algorithm(const SchurSeries& f, int count);

// Levinson-Szego recursion on the moments c_0..c_count.
VerblunskySeq verblunsky_levinson(const std::vector<cplx>& c, int count);

struct WallPolys {
  int n = 0;
  ComplexPoly A, B, Astar, Bstar;  // reversals at degree n
};

// A_0 = a_0, B_0 = 1, A_{n+1} = A_n + a_{n+1} z B_n^*, B_{n+1} = B_n + a_{n+1} z A_n^*.
std::vector<WallPolys> wall_table(const VerblunskySeq& a, int nMax);
WallPolys wall_polynomials(const VerblunskySeq& a, int n);

// -sum log(1 - |a_k|^2) with an estimate of the neglected tail.
struct SzegoSum {
  double partial = 0.0;
  double tail = 0.0;   // estimated remainder; 0 for finite sequences
  int terms = 0;
};
SzegoSum szego_sum(const VerblunskySeq& a);

// Estimated sum of the terms beyond a nonnegative sequence, extrapolating
// its last half both as a geometric and as a power-law decay and keeping
// the larger estimate. Infinite when neither model gives a convergent tail.
double tail_estimate(const std::vector<double>& terms);

// Series helpers.
std::vector<cplx> series_divide(const std::vector<cplx>& num, const std::vector<cplx>& den, int order);
cplx series_eval(const std::vector<cplx>& c, cplx z);

}  // namespace opuc
