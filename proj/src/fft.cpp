#include "fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "adisc/error.hpp"

namespace adisc::detail {
namespace {

// fftw_plan_* is not thread-safe; fftw_execute_dft on an existing plan is.
fftw_plan plan_for(int n, int sign) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, fftw_plan> plans;
  std::lock_guard lock(mutex);
  auto key = std::make_pair(n, sign);
  if (auto it = plans.find(key); it != plans.end()) return it->second;
  std::vector<Complex> scratch(static_cast<std::size_t>(n));
  auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
  fftw_plan plan = fftw_plan_dft_1d(n, buf, buf, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
  if (plan == nullptr) fail(ErrorCode::InvalidArgument, "fftw: cannot plan transform of size " + std::to_string(n));
  plans.emplace(key, plan);
  return plan;
}

void run(std::span<Complex> data, int sign) {
  if (data.empty()) return;
  auto* buf = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(plan_for(static_cast<int>(data.size()), sign), buf, buf);
}

}  // namespace

void fft_forward(std::span<Complex> data) { run(data, FFTW_FORWARD); }
void fft_backward(std::span<Complex> data) { run(data, FFTW_BACKWARD); }

int next_pow2(int n) noexcept {
  int m = 1;
  while (m < n) m <<= 1;
  return m;
}

void sample_on_circle(std::span<const Complex> coeffs, double r, std::span<Complex> out) {
  const std::size_t m = out.size();
  std::fill(out.begin(), out.end(), Complex{});
  double rk = 1.0;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    out[k % m] += coeffs[k] * rk;
    rk *= r;
  }
  fft_backward(out);
}

}  // namespace adisc::detail
