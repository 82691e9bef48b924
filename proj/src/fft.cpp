#include "qcss/fft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qcss {

namespace {

bool is_pow2(size_t n) { return n != 0 && (n & (n - 1)) == 0; }

size_t next_pow2(size_t n) {
    size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

// Chirp-z (Bluestein) reduction of an arbitrary-length DFT to a power-of-two
// circular convolution.
std::vector<Complex> dft_bluestein(const std::vector<Complex>& data, bool inverse) {
    const size_t n = data.size();
    const double sign = inverse ? 1.0 : -1.0;
    std::vector<Complex> chirp(n);
    for (size_t k = 0; k < n; ++k) {
        // k^2 mod 2n keeps the angle argument small
        const long long kk = static_cast<long long>(k) * k % (2 * n);
        const double angle = sign * std::numbers::pi * static_cast<double>(kk) / static_cast<double>(n);
        chirp[k] = {std::cos(angle), std::sin(angle)};
    }
    const size_t m = next_pow2(2 * n - 1);
    std::vector<Complex> a(m, 0.0), b(m, 0.0);
    for (size_t k = 0; k < n; ++k) a[k] = data[k] * chirp[k];
    for (size_t k = 0; k < n; ++k) {
        b[k] = std::conj(chirp[k]);
        if (k != 0) b[m - k] = std::conj(chirp[k]);
    }
    fft_pow2(a, false);
    fft_pow2(b, false);
    for (size_t k = 0; k < m; ++k) a[k] *= b[k];
    fft_pow2(a, true);
    std::vector<Complex> out(n);
    for (size_t k = 0; k < n; ++k) out[k] = a[k] * chirp[k];
    return out;
}

}  // namespace

void fft_pow2(std::vector<Complex>& data, bool inverse) {
    const size_t n = data.size();
    if (!is_pow2(n)) throw std::invalid_argument("fft_pow2 requires a power-of-two size");
    for (size_t i = 1, j = 0; i < n; ++i) {
        size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(data[i], data[j]);
    }
    for (size_t len = 2; len <= n; len <<= 1) {
        const double angle = (inverse ? 2.0 : -2.0) * std::numbers::pi / static_cast<double>(len);
        const Complex wl = {std::cos(angle), std::sin(angle)};
        for (size_t i = 0; i < n; i += len) {
            Complex w = 1.0;
            for (size_t k = 0; k < len / 2; ++k) {
                Complex u = data[i + k];
                Complex v = data[i + k + len / 2] * w;
                data[i + k] = u + v;
                data[i + k + len / 2] = u - v;
                w *= wl;
            }
        }
    }
    if (inverse)
        for (auto& x : data) x /= static_cast<double>(n);
}

std::vector<Complex> dft(const std::vector<Complex>& data) {
    if (is_pow2(data.size())) {
        auto copy = data;
        fft_pow2(copy, false);
        return copy;
    }
    return dft_bluestein(data, false);
}

std::vector<Complex> idft(const std::vector<Complex>& data) {
    if (is_pow2(data.size())) {
        auto copy = data;
        fft_pow2(copy, true);
        return copy;
    }
    auto out = dft_bluestein(data, true);
    for (auto& x : out) x /= static_cast<double>(data.size());
    return out;
}

}  // namespace qcss
