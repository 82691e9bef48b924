#pragma once

#include <vector>

#include "qcss/core.hpp"

namespace qcss {

/// In-place forward radix-2 FFT; size must be a power of two.
void fft_pow2(std::vector<Complex>& data, bool inverse);

/// Forward DFT of arbitrary length (Bluestein fallback for non-powers of two).
std::vector<Complex> dft(const std::vector<Complex>& data);

std::vector<Complex> idft(const std::vector<Complex>& data);

}  // namespace qcss
