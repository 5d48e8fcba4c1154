#pragma once

#include <complex>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>

#include "hilbert.hpp"

namespace wavepair {

enum class KernelKind { FourierLike, Analytic, HartleyPlus, HartleyMinus };

inline std::optional<KernelKind> kernel_from_name(std::string_view name) {
    if (name == "fourier") return KernelKind::FourierLike;
    if (name == "analytic") return KernelKind::Analytic;
    if (name == "hartley+") return KernelKind::HartleyPlus;
    if (name == "hartley-") return KernelKind::HartleyMinus;
    return std::nullopt;
}

inline std::string name_of(KernelKind k) {
    switch (k) {
        case KernelKind::FourierLike:  return "fourier";
        case KernelKind::Analytic:     return "analytic";
        case KernelKind::HartleyPlus:  return "hartley+";
        case KernelKind::HartleyMinus: return "hartley-";
    }
    return "unknown";
}

// (psi - i H{psi}) / sqrt(2). Its spectrum lives in the negative-frequency
// half: positive bins cancel exactly.
inline ComplexSeries fourier_like(const RealSeries& psi) {
    const RealSeries h = hilbert(psi);
    const double s = 1.0 / std::numbers::sqrt2;
    std::vector<std::complex<double>> v(psi.size());
    for (std::size_t k = 0; k < v.size(); ++k)
        v[k] = {psi.v[k] * s, -h.v[k] * s};
    return ComplexSeries{psi.grid, std::move(v)};
}

// (psi + i H{psi}) / sqrt(2): the analytic companion with
// positive-frequency support.
inline ComplexSeries analytic(const RealSeries& psi) {
    const RealSeries h = hilbert(psi);
    const double s = 1.0 / std::numbers::sqrt2;
    std::vector<std::complex<double>> v(psi.size());
    for (std::size_t k = 0; k < v.size(); ++k)
        v[k] = {psi.v[k] * s, h.v[k] * s};
    return ComplexSeries{psi.grid, std::move(v)};
}

// (psi +- H{psi}) / sqrt(2): real kernels mixing both symmetries, in the
// spirit of the cas = cos + sin kernel. They keep the generator's magnitude
// spectrum bin for bin and tilt its phase by -+ pi/4 * sgn(omega).
inline RealSeries hartley_like(const RealSeries& psi, KernelKind kind) {
    if (kind != KernelKind::HartleyPlus && kind != KernelKind::HartleyMinus)
        throw std::invalid_argument("hartley_like requires hartley+ or hartley-");
    const RealSeries h = hilbert(psi);
    const double sgn = kind == KernelKind::HartleyPlus ? 1.0 : -1.0;
    const double s = 1.0 / std::numbers::sqrt2;
    std::vector<double> v(psi.size());
    for (std::size_t k = 0; k < v.size(); ++k)
        v[k] = (psi.v[k] + sgn * h.v[k]) * s;
    return RealSeries{psi.grid, std::move(v)};
}

// Uniform complex view of any kernel kind; Hartley kinds get a zero
// imaginary part.
inline ComplexSeries build_kernel(const RealSeries& psi, KernelKind kind) {
    switch (kind) {
        case KernelKind::FourierLike: return fourier_like(psi);
        case KernelKind::Analytic:    return analytic(psi);
        default: break;
    }
    const RealSeries r = hartley_like(psi, kind);
    std::vector<std::complex<double>> v(r.v.begin(), r.v.end());
    return ComplexSeries{r.grid, std::move(v)};
}

} // namespace wavepair
