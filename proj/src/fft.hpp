#pragma once

#include <span>

#include "adisc/series.hpp"

namespace adisc::detail {

// In-place unnormalized DFT.
//   Forward:  X_k = sum_j x_j e^{-2 pi i jk/M}
//   Backward: x_j = sum_k X_k e^{+2 pi i jk/M}
void fft_forward(std::span<Complex> data);
void fft_backward(std::span<Complex> data);

int next_pow2(int n) noexcept;

// Samples of the polynomial with coefficients `coeffs` at r e^{2 pi i j/M}.
// Coefficients beyond M-1 alias onto k mod M.
void sample_on_circle(std::span<const Complex> coeffs, double r, std::span<Complex> out);

}  // namespace adisc::detail
