#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "spectrum.hpp"

namespace wavepair {

inline double energy(const RealSeries& x) {
    double e = 0.0;
    for (double v : x.v) e += v * v;
    return e * x.grid.dt;
}

inline double energy(const ComplexSeries& x) {
    double e = 0.0;
    for (const auto& z : x.v) e += std::norm(z);
    return e * x.grid.dt;
}

namespace detail {

// Discrete admissibility integral: sum over the nonzero bins of
// |X(omega_k)|^2 / |omega_k| * dOmega with X the dt-scaled DFT. The window
// integrand has no sample at omega = 0, so the DC bin must already be
// negligible, otherwise the quantity silently diverges with grid size
// instead of approximating anything.
inline double admissibility_from(const Spectrum& s) {
    double peak = 0.0;
    for (const auto& b : s.bins) peak = std::max(peak, std::abs(b));
    const double dc = std::abs(s.bins[0]);
    if (dc > 1e-5 * peak)
        throw NotAdmissible("DC magnitude is " +
                            format_short(peak > 0.0 ? dc / peak : 0.0) +
                            " of the spectral peak, above the 1e-5 limit");
    const double dt = s.grid.dt;
    const double domega = 2.0 * std::numbers::pi / (double(s.grid.n) * dt);
    double c = 0.0;
    for (std::size_t k = 1; k < s.grid.n; ++k) {
        const double mag = std::abs(s.bins[k]) * dt;
        c += mag * mag / std::abs(s.omega(k)) * domega;
    }
    return c;
}

inline double int_pow(double x, unsigned n) {
    double p = 1.0;
    for (unsigned i = 0; i < n; ++i) p *= x;
    return p;
}

} // namespace detail

inline double admissibility(const RealSeries& x) {
    return detail::admissibility_from(dft(x));
}

inline double admissibility(const ComplexSeries& x) {
    return detail::admissibility_from(dft(x));
}

// Windowed n-th moment, sum of t^n x(t) dt over the grid. Orders above 8
// are rejected: t^n weighting against the window edges amplifies tail
// truncation noise past usefulness.
inline double moment(const RealSeries& x, unsigned n) {
    if (n > 8) throw std::invalid_argument("moment order limited to n <= 8");
    double m = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k)
        m += detail::int_pow(x.grid.t(k), n) * x.v[k];
    return m * x.grid.dt;
}

inline std::complex<double> moment(const ComplexSeries& x, unsigned n) {
    if (n > 8) throw std::invalid_argument("moment order limited to n <= 8");
    std::complex<double> m = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k)
        m += detail::int_pow(x.grid.t(k), n) * x.v[k];
    return m * x.grid.dt;
}

namespace detail {

// |moment n| is compared against tol * sqrt(E) * L^{n + 1/2}, the
// Cauchy-Schwarz bound of the moment functional on a window of half-width
// L. That makes tol a grid-independent relative threshold.
template <class Series>
unsigned count_vanishing(const Series& x, unsigned max_n, double tol, double e) {
    if (max_n > 8) throw std::invalid_argument("moment order limited to n <= 8");
    const double root_e = std::sqrt(e);
    const double half_width = x.grid.half_width();
    unsigned count = 0;
    for (unsigned n = 0; n < max_n; ++n) {
        const double scale = root_e * std::pow(half_width, double(n) + 0.5);
        if (std::abs(moment(x, n)) > tol * scale) break;
        ++count;
    }
    return count;
}

} // namespace detail

inline unsigned vanishing_moments(const RealSeries& x, unsigned max_n = 8,
                                  double tol = 1e-5) {
    return detail::count_vanishing(x, max_n, tol, energy(x));
}

inline unsigned vanishing_moments(const ComplexSeries& x, unsigned max_n = 8,
                                  double tol = 1e-5) {
    return detail::count_vanishing(x, max_n, tol, energy(x));
}

inline double inner_product(const RealSeries& a, const RealSeries& b) {
    require_same_grid(a.grid, b.grid);
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) s += a.v[k] * b.v[k];
    return s * a.grid.dt;
}

inline std::complex<double> inner_product(const ComplexSeries& a,
                                          const ComplexSeries& b) {
    require_same_grid(a.grid, b.grid);
    std::complex<double> s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) s += a.v[k] * std::conj(b.v[k]);
    return s * a.grid.dt;
}

inline std::complex<double> inner_product(const RealSeries& a,
                                          const ComplexSeries& b) {
    require_same_grid(a.grid, b.grid);
    std::complex<double> s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) s += a.v[k] * std::conj(b.v[k]);
    return s * a.grid.dt;
}

inline std::complex<double> inner_product(const ComplexSeries& a,
                                          const RealSeries& b) {
    require_same_grid(a.grid, b.grid);
    std::complex<double> s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) s += a.v[k] * b.v[k];
    return s * a.grid.dt;
}

enum class SymmetryClass { Even, Odd, Asymmetric };

inline std::string name_of(SymmetryClass c) {
    switch (c) {
        case SymmetryClass::Even:       return "even";
        case SymmetryClass::Odd:        return "odd";
        case SymmetryClass::Asymmetric: return "asymmetric";
    }
    return "unknown";
}

struct SymmetryReport {
    SymmetryClass cls = SymmetryClass::Asymmetric;
    double even_score = 0.0;   // fraction of energy in the mirror-even part
};

// Splits x around t = 0 with the periodic reflection k -> (n - k) mod n,
// which pairs t with -t on a symmetric window (the unpaired left-edge
// sample reflects onto itself). Even if more than 99% of the energy is in
// the even part, Odd below 1%, Asymmetric between.
inline SymmetryReport symmetry(const RealSeries& x) {
    if (!x.grid.symmetric())
        throw std::invalid_argument(
            "symmetry classification requires a window symmetric about zero");
    const std::size_t n = x.grid.n;
    double even_energy = 0.0;
    double total = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double mirrored = x.v[(n - k) % n];
        const double even_part = 0.5 * (x.v[k] + mirrored);
        even_energy += even_part * even_part;
        total += x.v[k] * x.v[k];
    }
    if (total == 0.0) return {SymmetryClass::Even, 1.0};
    const double score = even_energy / total;
    if (score > 0.99) return {SymmetryClass::Even, score};
    if (score < 0.01) return {SymmetryClass::Odd, score};
    return {SymmetryClass::Asymmetric, score};
}

struct MetricsReport {
    double energy = 0.0;
    double admissibility = 0.0;
    double dc_magnitude_ratio = 0.0;
    unsigned vanishing_moments = 0;
    SymmetryClass symmetry = SymmetryClass::Asymmetric;
    double symmetry_score = 0.0;
};

inline MetricsReport metrics_report(const RealSeries& x) {
    MetricsReport r;
    r.energy = energy(x);
    const Spectrum s = dft(x);
    double peak = 0.0;
    for (const auto& b : s.bins) peak = std::max(peak, std::abs(b));
    r.dc_magnitude_ratio = peak > 0.0 ? std::abs(s.bins[0]) / peak : 0.0;
    r.admissibility = detail::admissibility_from(s);
    r.vanishing_moments = vanishing_moments(x);
    const SymmetryReport sym = symmetry(x);
    r.symmetry = sym.cls;
    r.symmetry_score = sym.even_score;
    return r;
}

inline std::string to_key_value(const MetricsReport& r) {
    std::string out;
    out += "energy=" + detail::format_double(r.energy) + "\n";
    out += "admissibility=" + detail::format_double(r.admissibility) + "\n";
    out += "dc_magnitude_ratio=" + detail::format_double(r.dc_magnitude_ratio) + "\n";
    out += "vanishing_moments=" + std::to_string(r.vanishing_moments) + "\n";
    out += "symmetry=" + name_of(r.symmetry) + "\n";
    out += "symmetry_score=" + detail::format_double(r.symmetry_score) + "\n";
    return out;
}

inline std::string metrics_csv_header() {
    return "energy,admissibility,dc_magnitude_ratio,vanishing_moments,"
           "symmetry,symmetry_score";
}

inline std::string to_csv_row(const MetricsReport& r) {
    return detail::format_double(r.energy) + "," +
           detail::format_double(r.admissibility) + "," +
           detail::format_double(r.dc_magnitude_ratio) + "," +
           std::to_string(r.vanishing_moments) + "," + name_of(r.symmetry) +
           "," + detail::format_double(r.symmetry_score);
}

} // namespace wavepair
