#pragma once

#include <bit>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <utility>
#include <vector>

namespace wavepair::detail {

using cplx = std::complex<double>;

// Iterative radix-2 transform, unnormalized in both directions. Twiddles
// come from std::polar per butterfly instead of a running product: grids
// here are small and the verification tolerances tight, so cycles are spent
// on accuracy.
inline void fft_radix2(std::vector<cplx>& a, bool inverse) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    const double turn = inverse ? 2.0 * std::numbers::pi : -2.0 * std::numbers::pi;
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double step = turn / double(len);
        for (std::size_t base = 0; base < n; base += len) {
            for (std::size_t k = 0; k < len / 2; ++k) {
                const cplx w = std::polar(1.0, step * double(k));
                const cplx u = a[base + k];
                const cplx t = w * a[base + k + len / 2];
                a[base + k] = u + t;
                a[base + k + len / 2] = u - t;
            }
        }
    }
}

// Chirp-z fallback for lengths that are not powers of two. The chirp
// exponent k^2 is reduced mod 2n in integers first; evaluating pi*k*k/n in
// floating point throws away the low-order bits the twiddle angle lives in
// once k^2 grows past the mantissa.
inline std::vector<cplx> fft_bluestein(const std::vector<cplx>& x, bool inverse) {
    const std::size_t n = x.size();
    const double sign = inverse ? 1.0 : -1.0;
    std::vector<cplx> chirp(n);
    for (std::size_t k = 0; k < n; ++k) {
        const auto q = std::int64_t(k) * std::int64_t(k) % std::int64_t(2 * n);
        chirp[k] = std::polar(1.0, sign * std::numbers::pi * double(q) / double(n));
    }
    const std::size_t m = std::bit_ceil(2 * n + 1);
    std::vector<cplx> a(m), b(m);
    for (std::size_t k = 0; k < n; ++k) a[k] = x[k] * chirp[k];
    b[0] = cplx{1.0, 0.0};
    for (std::size_t k = 1; k < n; ++k) b[k] = b[m - k] = std::conj(chirp[k]);
    fft_radix2(a, false);
    fft_radix2(b, false);
    for (std::size_t i = 0; i < m; ++i) a[i] *= b[i];
    fft_radix2(a, true);
    std::vector<cplx> out(n);
    for (std::size_t j = 0; j < n; ++j) out[j] = chirp[j] * a[j] / double(m);
    return out;
}

inline void fft(std::vector<cplx>& a, bool inverse) {
    if (a.size() < 2) return;
    if (std::has_single_bit(a.size()))
        fft_radix2(a, inverse);
    else
        a = fft_bluestein(a, inverse);
}

} // namespace wavepair::detail
