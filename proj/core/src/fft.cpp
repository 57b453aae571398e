#include "opuc/fft.hpp"

#include <fftw3.h>

#include <cstring>
#include <mutex>

namespace opuc {

namespace {

std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

std::vector<cplx> run(const std::vector<cplx>& in, int sign) {
  const int n = static_cast<int>(in.size());
  std::vector<cplx> out(in.size());
  if (n == 0) return out;
  auto* bin = reinterpret_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n));
  auto* bout = reinterpret_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n));
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    plan = fftw_plan_dft_1d(n, bin, bout, sign, FFTW_ESTIMATE);
  }
  std::memcpy(bin, in.data(), sizeof(fftw_complex) * n);
  fftw_execute(plan);
  std::memcpy(static_cast<void*>(out.data()), bout, sizeof(fftw_complex) * n);
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
  fftw_free(bin);
  fftw_free(bout);
  return out;
}

}  // namespace

std::vector<cplx> dft(const std::vector<cplx>& x) { return run(x, FFTW_FORWARD); }

std::vector<cplx> idft(const std::vector<cplx>& X) {
  auto x = run(X, FFTW_BACKWARD);
  const double s = 1.0 / static_cast<double>(X.size());
  for (auto& v : x) v *= s;
  return x;
}

}  // namespace opuc
