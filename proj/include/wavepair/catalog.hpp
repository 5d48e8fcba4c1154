#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>

#include "spectrum.hpp"

namespace wavepair {

enum class WaveletFamily { Morlet, Meyer, MexicanHat, Gaussian1, Gaussian2, Gaussian3 };

// omega0 is the Morlet carrier frequency; the other families take no
// parameters and ignore it.
struct WaveletSpec {
    WaveletFamily family = WaveletFamily::Morlet;
    double omega0 = 5.0;
};

inline std::optional<WaveletFamily> family_from_name(std::string_view name) {
    if (name == "morlet") return WaveletFamily::Morlet;
    if (name == "meyer") return WaveletFamily::Meyer;
    if (name == "mexican-hat") return WaveletFamily::MexicanHat;
    if (name == "gaussian1") return WaveletFamily::Gaussian1;
    if (name == "gaussian2") return WaveletFamily::Gaussian2;
    if (name == "gaussian3") return WaveletFamily::Gaussian3;
    return std::nullopt;
}

inline std::string name_of(WaveletFamily f) {
    switch (f) {
        case WaveletFamily::Morlet:     return "morlet";
        case WaveletFamily::Meyer:      return "meyer";
        case WaveletFamily::MexicanHat: return "mexican-hat";
        case WaveletFamily::Gaussian1:  return "gaussian1";
        case WaveletFamily::Gaussian2:  return "gaussian2";
        case WaveletFamily::Gaussian3:  return "gaussian3";
    }
    return "unknown";
}

inline void validate_spec(const WaveletSpec& w) {
    if (w.family == WaveletFamily::Morlet &&
        !(std::isfinite(w.omega0) && w.omega0 > 0.0))
        throw std::invalid_argument("Morlet carrier frequency must be positive and finite");
}

// Default sampling window. Every closed-form family decays below 1e-12 of
// its peak by |t| = 8, so DFT periodization is negligible here.
inline TimeGrid default_grid() { return make_grid(-8.0, 8.0, 2048); }

// Pointwise closed forms at natural amplitude, before projection and
// normalization. The Gaussian-n entries are the n-th derivatives of
// exp(-t^2). Meyer has no time-domain closed form and is handled
// spectrally in sample_wavelet.
inline double closed_form(const WaveletSpec& w, double t) {
    switch (w.family) {
        case WaveletFamily::Morlet:
            return std::cos(w.omega0 * t) * std::exp(-0.5 * t * t);
        case WaveletFamily::MexicanHat:
            return (1.0 - t * t) * std::exp(-0.5 * t * t);
        case WaveletFamily::Gaussian1:
            return -2.0 * t * std::exp(-t * t);
        case WaveletFamily::Gaussian2:
            return (4.0 * t * t - 2.0) * std::exp(-t * t);
        case WaveletFamily::Gaussian3:
            return (12.0 * t - 8.0 * t * t * t) * std::exp(-t * t);
        case WaveletFamily::Meyer:
            break;
    }
    throw std::invalid_argument("no time-domain closed form for this family");
}

// Smooth 0 -> 1 ramp with three vanishing derivatives at both ends;
// satisfies nu(x) + nu(1 - x) = 1.
inline double meyer_nu(double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    return x * x * x * x * (35.0 + x * (-84.0 + x * (70.0 - 20.0 * x)));
}

// Even magnitude spectrum of the Meyer wavelet: a sine lobe rising over
// [2pi/3, 4pi/3], a cosine lobe falling over (4pi/3, 8pi/3], zero
// elsewhere. Bandlimited with an exact null at omega = 0.
inline double meyer_band(double omega) {
    constexpr double pi = std::numbers::pi;
    const double w = std::abs(omega);
    if (w >= 2.0 * pi / 3.0 && w <= 4.0 * pi / 3.0)
        return std::sin(0.5 * pi * meyer_nu(3.0 * w / (2.0 * pi) - 1.0));
    if (w > 4.0 * pi / 3.0 && w <= 8.0 * pi / 3.0)
        return std::cos(0.5 * pi * meyer_nu(3.0 * w / (4.0 * pi) - 1.0));
    return 0.0;
}

// Spectral peak in cycles per unit time; the scale-to-frequency map of
// ridge read-outs divides this by a*dt. Morlet peaks at its carrier. The
// Mexican hat spectrum is omega^2 exp(-omega^2 / 2), peaking at sqrt(2);
// Gaussian-n gives |omega|^n exp(-omega^2 / 4), peaking at sqrt(2n); the
// Meyer flat-top begins at 4pi/3.
inline double center_frequency(const WaveletSpec& w) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    switch (w.family) {
        case WaveletFamily::Morlet:     return w.omega0 / two_pi;
        case WaveletFamily::Meyer:      return (4.0 * std::numbers::pi / 3.0) / two_pi;
        case WaveletFamily::MexicanHat: return std::sqrt(2.0) / two_pi;
        case WaveletFamily::Gaussian1:  return std::sqrt(2.0) / two_pi;
        case WaveletFamily::Gaussian2:  return 2.0 / two_pi;
        case WaveletFamily::Gaussian3:  return std::sqrt(6.0) / two_pi;
    }
    throw std::invalid_argument("unknown wavelet family");
}

namespace detail {

// Raw Meyer samples in the DFT's wrapped layout (t = 0 at index 0),
// obtained by inverse-transforming the band evaluated at the grid's bins.
inline std::vector<double> meyer_time_samples(const TimeGrid& g) {
    Spectrum band{g, std::vector<std::complex<double>>(g.n)};
    for (std::size_t k = 0; k < g.n; ++k)
        band.bins[k] = meyer_band(band.omega(k));
    return idft_real(band).v;
}

} // namespace detail

// Sample a catalog wavelet on a grid: evaluate the closed form (Meyer: the
// inverse transform of its band, rotated so the peak sits mid-window),
// remove the sample mean, then scale to unit energy. The mean removal
// zeroes the DC bin exactly; without it, spectral identities that divide by
// sgn(omega) are ill-posed at omega = 0 and double application of the
// quadrature multiplier would not return -psi to full precision.
inline RealSeries sample_wavelet(const WaveletSpec& w, const TimeGrid& g) {
    validate_spec(w);
    std::vector<double> v(g.n);
    if (w.family == WaveletFamily::Meyer) {
        const std::vector<double> wrapped = detail::meyer_time_samples(g);
        for (std::size_t k = 0; k < g.n; ++k)
            v[k] = wrapped[(k + g.n / 2) % g.n];
    } else {
        for (std::size_t k = 0; k < g.n; ++k)
            v[k] = closed_form(w, g.t(k));
    }
    double mean = 0.0;
    for (double x : v) mean += x;
    mean /= double(g.n);
    for (double& x : v) x -= mean;
    double e = 0.0;
    for (double x : v) e += x * x;
    e *= g.dt;
    if (!(e > 0.0))
        throw std::invalid_argument("wavelet sampled to zero energy on this grid");
    const double scale = 1.0 / std::sqrt(e);
    for (double& x : v) x *= scale;
    return RealSeries{g, std::move(v)};
}

} // namespace wavepair
