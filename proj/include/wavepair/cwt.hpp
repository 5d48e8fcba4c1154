#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <vector>

#include "catalog.hpp"
#include "kernels.hpp"
#include "metrics.hpp"

namespace wavepair {

// Ordered analysis scales, expanded inclusively from first to last.
struct ScaleRange {
    double first = 1.0;
    double last = 1.0;
    double step = 1.0;

    std::vector<double> values() const {
        if (!(first > 0.0) || !(step > 0.0) || !(last >= first))
            throw std::invalid_argument(
                "scale range requires 0 < first <= last and step > 0");
        std::vector<double> v;
        for (double a = first; a <= last + 0.5 * step; a += step)
            v.push_back(a);
        return v;
    }
};

struct Scalogram {
    std::vector<double> scales;                  // ascending
    TimeGrid grid;                               // translation axis
    double center_frequency = 0.0;               // of the mother wavelet
    bool complex_kernel = false;
    std::vector<std::uint8_t> support_clipped;   // one flag per row
    std::vector<std::complex<double>> coeffs;    // rows x grid.n, row-major

    std::size_t rows() const { return scales.size(); }
    std::size_t cols() const { return grid.n; }
    std::complex<double> at(std::size_t i, std::size_t j) const {
        return coeffs[i * grid.n + j];
    }
};

namespace detail {

// Unit-energy constant of the mother wavelet, measured once on the default
// window. Dilated kernels reuse it so row amplitudes follow the continuous
// 1/sqrt(a) law instead of picking up per-row resampling artifacts.
inline double mother_norm_constant(const WaveletSpec& w) {
    const TimeGrid g = default_grid();
    double e = 0.0;
    if (w.family == WaveletFamily::Meyer) {
        for (double x : meyer_time_samples(g)) e += x * x;
        e *= g.dt;
        // spectral-domain constant; see dilated_kernel
        return g.dt / std::sqrt(e);
    }
    for (std::size_t k = 0; k < g.n; ++k) {
        const double x = closed_form(w, g.t(k));
        e += x * x;
    }
    e *= g.dt;
    return 1.0 / std::sqrt(e);
}

// Real dilated kernel on the signal's sample lattice in wrapped layout
// (offset u = 0 at index 0, negative offsets in the upper half). Closed
// forms are re-evaluated at u/a. Meyer dilates spectrally: the band is
// sampled at a*nu_k with nu_k in radians per sample, scaled by a so the
// kernel's sample-domain energy grows linearly in a exactly like the
// re-evaluated time-domain families.
inline std::vector<double> dilated_kernel(const WaveletSpec& w, double a,
                                          std::size_t n, double norm) {
    if (w.family == WaveletFamily::Meyer) {
        Spectrum band{TimeGrid{0.0, 1.0, n}, std::vector<std::complex<double>>(n)};
        for (std::size_t k = 0; k < n; ++k)
            band.bins[k] = a * norm * meyer_band(a * band.omega(k));
        return idft_real(band).v;
    }
    std::vector<double> v(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double u = 2 * j <= n ? double(j) : double(j) - double(n);
        v[j] = norm * closed_form(w, u / a);
    }
    return v;
}

} // namespace detail

// Continuous wavelet transform by spectral cross-correlation: each row is
// idft(dft(f) * conj(dft(g_a))) * dt / sqrt(a) with g_a the dilated kernel,
// optionally passed through one of the kernel builders (applied as its
// spectral multiplier, which is the same linear combination). The wavelet
// is conjugated so complex kernels act as inner products and their modulus
// keeps its envelope meaning; for real kernels conjugation is a no-op.
inline Scalogram cwt(const RealSeries& f, const WaveletSpec& w,
                     const ScaleRange& scales,
                     std::optional<KernelKind> kind = {}) {
    validate_spec(w);
    const std::vector<double> as = scales.values();
    const std::size_t n = f.grid.n;
    const Spectrum F = dft(f);
    const double norm = detail::mother_norm_constant(w);
    const bool complex_kernel =
        kind && (*kind == KernelKind::FourierLike || *kind == KernelKind::Analytic);

    Scalogram s;
    s.scales = as;
    s.grid = f.grid;
    s.center_frequency = center_frequency(w);
    s.complex_kernel = complex_kernel;
    s.support_clipped.assign(as.size(), 0);
    s.coeffs.resize(as.size() * n);

    const HilbertMultiplier hm{n};
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    for (std::size_t i = 0; i < as.size(); ++i) {
        const double a = as[i];
        std::vector<std::complex<double>> G;
        {
            const std::vector<double> g = detail::dilated_kernel(w, a, n, norm);
            G.assign(g.begin(), g.end());
            detail::fft(G, false);
        }
        if (kind) {
            for (std::size_t k = 0; k < n; ++k) {
                const std::complex<double> h = hm.factor(k);
                std::complex<double> m;
                switch (*kind) {
                    case KernelKind::FourierLike:
                        m = (1.0 - std::complex<double>{0.0, 1.0} * h) * inv_sqrt2;
                        break;
                    case KernelKind::Analytic:
                        m = (1.0 + std::complex<double>{0.0, 1.0} * h) * inv_sqrt2;
                        break;
                    case KernelKind::HartleyPlus:
                        m = (1.0 + h) * inv_sqrt2;
                        break;
                    case KernelKind::HartleyMinus:
                        m = (1.0 - h) * inv_sqrt2;
                        break;
                }
                G[k] *= m;
            }
        }
        std::vector<std::complex<double>> row(n);
        for (std::size_t k = 0; k < n; ++k)
            row[k] = F.bins[k] * std::conj(G[k]);
        detail::fft(row, true);
        const double amp = f.grid.dt / (double(n) * std::sqrt(a));
        for (auto& z : row) z *= amp;
        if (!complex_kernel) {
            double peak = 0.0;
            double residue = 0.0;
            for (const auto& z : row) {
                peak = std::max(peak, std::abs(z.real()));
                residue = std::max(residue, std::abs(z.imag()));
            }
            if (residue > 1e-10 * std::max(peak, 1e-300))
                throw NonNegligibleImaginaryResidue(
                    "real-kernel transform row at scale " +
                    detail::format_short(a) + " has imaginary residue " +
                    detail::format_short(residue));
        }
        // a dilated catalog wavelet effectively supports |t/a| < 8; once
        // those 16a samples exceed the signal the wrapped kernel overlaps
        // itself and the row is periodization-contaminated
        s.support_clipped[i] = 16.0 * a > double(n) ? 1 : 0;
        std::copy(row.begin(), row.end(), s.coeffs.begin() + std::ptrdiff_t(i * n));
    }
    return s;
}

// Row copy at scale a; matching uses a 1e-12 relative slack so that scales
// reconstructed from text or stepped ranges still hit.
inline ComplexSeries level_slice(const Scalogram& s, double a) {
    for (std::size_t i = 0; i < s.rows(); ++i) {
        if (std::abs(s.scales[i] - a) <= 1e-12 * std::max(1.0, std::abs(a))) {
            std::vector<std::complex<double>> row(
                s.coeffs.begin() + std::ptrdiff_t(i * s.cols()),
                s.coeffs.begin() + std::ptrdiff_t((i + 1) * s.cols()));
            return ComplexSeries{s.grid, std::move(row)};
        }
    }
    throw UnknownScale("scale " + detail::format_short(a) +
                       " is not present in the scalogram");
}

// |x| / max|x|, the shape used for crossing read-outs.
inline RealSeries normalized_modulus(const ComplexSeries& x) {
    double peak = 0.0;
    for (const auto& z : x.v) peak = std::max(peak, std::abs(z));
    if (peak == 0.0)
        throw std::invalid_argument(
            "normalized_modulus of an identically zero series");
    std::vector<double> v(x.size());
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = std::abs(x.v[k]) / peak;
    return RealSeries{x.grid, std::move(v)};
}

struct RidgePoint {
    double scale = 0.0;
    double frequency = 0.0;   // cycles per unit time, f_c / (a dt)
};

// Rows whose mean squared modulus is a strict local maximum along the
// scale axis, ranked by that energy and mapped through f = f_c / (a dt).
// Ranking raw row energies instead would hand back adjacent rows of one
// physical ridge; requiring a local maximum makes each ridge count once.
inline std::vector<RidgePoint> ridge_frequencies(const Scalogram& s,
                                                 std::size_t top_k) {
    if (top_k > s.rows())
        throw std::invalid_argument("top_k exceeds the scale count");
    std::vector<double> msm(s.rows(), 0.0);
    for (std::size_t i = 0; i < s.rows(); ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < s.cols(); ++j) acc += std::norm(s.at(i, j));
        msm[i] = acc / double(s.cols());
    }
    std::vector<std::size_t> peaks;
    for (std::size_t i = 0; i < msm.size(); ++i) {
        const bool up = i == 0 || msm[i] > msm[i - 1];
        const bool down = i + 1 == msm.size() || msm[i] > msm[i + 1];
        if (up && down && msm[i] > 0.0) peaks.push_back(i);
    }
    std::sort(peaks.begin(), peaks.end(),
              [&](std::size_t a, std::size_t b) { return msm[a] > msm[b]; });
    if (peaks.size() > top_k) peaks.resize(top_k);
    std::vector<RidgePoint> out;
    out.reserve(peaks.size());
    for (std::size_t i : peaks)
        out.push_back({s.scales[i],
                       s.center_frequency / (s.scales[i] * s.grid.dt)});
    return out;
}

namespace detail {

inline void check_below_nyquist(const TimeGrid& g, double f) {
    if (!(f >= 0.0) || !(f < 0.5 / g.dt))
        throw std::invalid_argument("frequency " + format_short(f) +
                                    " aliases on a grid with dt = " +
                                    format_short(g.dt));
}

} // namespace detail

// sin(2 pi f1 t) + sin(2 pi f2 t), unit amplitudes.
inline RealSeries gen_two_sine(const TimeGrid& g, double f1, double f2) {
    detail::check_below_nyquist(g, f1);
    detail::check_below_nyquist(g, f2);
    constexpr double two_pi = 2.0 * std::numbers::pi;
    std::vector<double> v(g.n);
    for (std::size_t k = 0; k < g.n; ++k)
        v[k] = std::sin(two_pi * f1 * g.t(k)) + std::sin(two_pi * f2 * g.t(k));
    return RealSeries{g, std::move(v)};
}

// sin(2 pi f_low t) before t_break, sin(2 pi f_high t) from t_break on.
// Discontinuous by construction.
inline RealSeries gen_freq_breakdown(const TimeGrid& g, double f_low,
                                     double f_high, double t_break) {
    detail::check_below_nyquist(g, f_low);
    detail::check_below_nyquist(g, f_high);
    if (!(t_break >= g.t_min) || !(t_break <= g.t_max()))
        throw std::invalid_argument("t_break lies outside the grid span");
    constexpr double two_pi = 2.0 * std::numbers::pi;
    std::vector<double> v(g.n);
    for (std::size_t k = 0; k < g.n; ++k) {
        const double t = g.t(k);
        v[k] = t < t_break ? std::sin(two_pi * f_low * t)
                           : std::sin(two_pi * f_high * t);
    }
    return RealSeries{g, std::move(v)};
}

// First translation where the coarse row's normalized modulus has dropped
// below one half while the fine row's still exceeds it. Past a frequency
// break the fine scale locks onto the new high band and the coarse scale
// loses its old one, so the first such sample estimates the break time.
inline double crossing_time(const Scalogram& s, double fine_scale,
                            double coarse_scale) {
    const RealSeries fine = normalized_modulus(level_slice(s, fine_scale));
    const RealSeries coarse = normalized_modulus(level_slice(s, coarse_scale));
    for (std::size_t k = 0; k < fine.size(); ++k)
        if (coarse.v[k] < 0.5 && fine.v[k] > 0.5) return s.grid.t(k);
    throw std::runtime_error("no modulus crossing found");
}

} // namespace wavepair
