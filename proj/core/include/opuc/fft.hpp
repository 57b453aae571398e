#pragma once

#include <vector>

#include "opuc/common.hpp"

namespace opuc {

// X_k = sum_j x_j exp(-2 pi i j k / M).
std::vector<cplx> dft(const std::vector<cplx>& x);
// x_j = (1/M) sum_k X_k exp(2 pi i j k / M).
std::vector<cplx> idft(const std::vector<cplx>& X);

// Signed frequency of DFT bin k for length M; the Nyquist bin maps to M/2.
inline int signed_frequency(int k, int M) { return k <= M / 2 ? k : k - M; }

}  // namespace opuc
