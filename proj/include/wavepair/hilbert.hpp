#pragma once

#include <complex>
#include <string>

#include "spectrum.hpp"

namespace wavepair {

// Quadrature multiplier: -i on positive-frequency bins, +i on negative
// ones, zero at DC and Nyquist where sgn(omega) carries no usable phase.
// Under the forward-transform convention in spectrum.hpp this sends
// cos to sin and sin to -cos. Note that the opposite sign convention also
// appears in the literature; this library commits to this one everywhere.
struct HilbertMultiplier {
    std::size_t n = 0;

    std::complex<double> factor(std::size_t k) const {
        if (k == 0 || 2 * k == n) return {0.0, 0.0};
        return 2 * k < n ? std::complex<double>{0.0, -1.0}
                         : std::complex<double>{0.0, 1.0};
    }
};

inline Spectrum apply_multiplier(Spectrum s, const HilbertMultiplier& m) {
    if (m.n != s.bins.size())
        throw GridMismatch("multiplier sized for " + std::to_string(m.n) +
                           " bins applied to a spectrum of " +
                           std::to_string(s.bins.size()));
    for (std::size_t k = 0; k < s.bins.size(); ++k)
        s.bins[k] *= m.factor(k);
    return s;
}

// Discrete Hilbert transform. The output's DC bin is exactly zero; applying
// the transform twice gives -x up to the DC/Nyquist projection, so it is an
// involution (up to sign) exactly on series that carry no energy there.
inline RealSeries hilbert(const RealSeries& x) {
    return idft_real(apply_multiplier(dft(x), HilbertMultiplier{x.grid.n}));
}

} // namespace wavepair
