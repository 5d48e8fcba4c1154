#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace wavepair {

namespace detail {

// Shortest loss-free text form of a double. 17 significant digits round-trip
// through strtod bit-exactly, which the CSV contract relies on.
inline std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

// Compact form for diagnostics.
inline std::string format_short(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

} // namespace detail

// Uniform half-open sampling window: sample k sits at t_min + k*dt for
// k in [0, n). The right endpoint t_max = t_min + n*dt is excluded, so a
// symmetric window [-L, L) pairs every interior sample with its mirror and
// leaves only t = -L unpaired.
struct TimeGrid {
    double t_min = 0.0;
    double dt = 1.0;
    std::size_t n = 0;

    double t(std::size_t k) const { return t_min + double(k) * dt; }
    double t_max() const { return t_min + double(n) * dt; }
    double span() const { return double(n) * dt; }
    double half_width() const { return 0.5 * span(); }

    // True when the window straddles zero so that index (n - k) mod n
    // mirrors t into -t.
    bool symmetric() const {
        return n > 0 && std::abs(t_min + t_max()) <= 1e-9 * span();
    }

    friend bool operator==(const TimeGrid&, const TimeGrid&) = default;
};

inline TimeGrid make_grid(double t_min, double t_max, std::size_t n) {
    if (!std::isfinite(t_min) || !std::isfinite(t_max))
        throw NonFiniteValue("grid bounds must be finite");
    if (n < 2 || n % 2 != 0)
        throw OddSampleCount("sample count must be even and at least 2, got " +
                             std::to_string(n));
    if (!(t_max > t_min))
        throw std::invalid_argument("grid requires t_max > t_min");
    return TimeGrid{t_min, (t_max - t_min) / double(n), n};
}

struct RealSeries {
    TimeGrid grid;
    std::vector<double> v;

    RealSeries() = default;
    RealSeries(TimeGrid g, std::vector<double> values)
        : grid(g), v(std::move(values)) {
        if (v.size() != grid.n)
            throw std::invalid_argument("series length does not match grid");
        for (double x : v)
            if (!std::isfinite(x))
                throw NonFiniteValue("series contains a non-finite sample");
    }

    std::size_t size() const { return v.size(); }
};

struct ComplexSeries {
    TimeGrid grid;
    std::vector<std::complex<double>> v;

    ComplexSeries() = default;
    ComplexSeries(TimeGrid g, std::vector<std::complex<double>> values)
        : grid(g), v(std::move(values)) {
        if (v.size() != grid.n)
            throw std::invalid_argument("series length does not match grid");
        for (const auto& z : v)
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
                throw NonFiniteValue("series contains a non-finite sample");
    }

    std::size_t size() const { return v.size(); }
};

inline void require_same_grid(const TimeGrid& a, const TimeGrid& b) {
    if (!(a == b))
        throw GridMismatch("operands are sampled on different grids");
}

} // namespace wavepair
