#pragma once

#include <algorithm>
#include <complex>
#include <numbers>
#include <vector>

#include "fft.hpp"
#include "grid.hpp"

namespace wavepair {

// DFT coefficients of a series, carried together with its grid. The forward
// transform is the plain sum over e^{-i 2 pi k m / n}; the inverse applies
// the 1/n factor. Bins k <= n/2 hold non-negative angular frequencies, the
// remainder negative ones.
struct Spectrum {
    TimeGrid grid;
    std::vector<std::complex<double>> bins;

    double omega(std::size_t k) const {
        double s = double(k);
        if (2 * k > grid.n) s -= double(grid.n);
        return 2.0 * std::numbers::pi * s / (double(grid.n) * grid.dt);
    }
};

inline Spectrum dft(const ComplexSeries& x) {
    std::vector<std::complex<double>> bins(x.v.begin(), x.v.end());
    detail::fft(bins, false);
    return Spectrum{x.grid, std::move(bins)};
}

inline Spectrum dft(const RealSeries& x) {
    std::vector<std::complex<double>> bins(x.v.begin(), x.v.end());
    detail::fft(bins, false);
    return Spectrum{x.grid, std::move(bins)};
}

inline ComplexSeries idft(const Spectrum& s) {
    std::vector<std::complex<double>> v = s.bins;
    detail::fft(v, true);
    const double inv = 1.0 / double(s.grid.n);
    for (auto& z : v) z *= inv;
    return ComplexSeries{s.grid, std::move(v)};
}

// Inverse transform of a spectrum that is supposed to describe a real
// series. The imaginary leftover is measured against the real peak; a
// residue above rel_tol means the spectrum was not conjugate symmetric
// (aliasing, or a mis-built multiplier) and is an error, not noise.
inline RealSeries idft_real(const Spectrum& s, double rel_tol = 1e-10) {
    const ComplexSeries z = idft(s);
    double peak = 0.0;
    double residue = 0.0;
    for (const auto& c : z.v) {
        peak = std::max(peak, std::abs(c.real()));
        residue = std::max(residue, std::abs(c.imag()));
    }
    if (residue > rel_tol * std::max(peak, 1e-300))
        throw NonNegligibleImaginaryResidue(
            "imaginary residue " + detail::format_short(residue) +
            " exceeds " + detail::format_short(rel_tol) + " of peak " +
            detail::format_short(peak));
    std::vector<double> v(z.v.size());
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = z.v[k].real();
    return RealSeries{s.grid, std::move(v)};
}

} // namespace wavepair
