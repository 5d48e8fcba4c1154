#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <wavepair/catalog.hpp>
#include <wavepair/hilbert.hpp>
#include <wavepair/kernels.hpp>
#include <wavepair/metrics.hpp>

using namespace wavepair;
using cd = std::complex<double>;

namespace {

RealSeries test_psi() {
    return sample_wavelet({WaveletFamily::MexicanHat}, default_grid());
}

} // namespace

TEST_CASE("kind names round-trip") {
    for (KernelKind k : {KernelKind::FourierLike, KernelKind::Analytic,
                         KernelKind::HartleyPlus, KernelKind::HartleyMinus}) {
        const auto back = kernel_from_name(name_of(k));
        REQUIRE(back.has_value());
        REQUIRE(*back == k);
    }
    REQUIRE_FALSE(kernel_from_name("cas").has_value());
}

TEST_CASE("builders realize their defining linear combinations") {
    const RealSeries psi = test_psi();
    const RealSeries h = hilbert(psi);
    const double s = 1.0 / std::numbers::sqrt2;
    const ComplexSeries f = fourier_like(psi);
    const ComplexSeries a = analytic(psi);
    const RealSeries hp = hartley_like(psi, KernelKind::HartleyPlus);
    const RealSeries hm = hartley_like(psi, KernelKind::HartleyMinus);
    for (std::size_t k = 0; k < psi.size(); ++k) {
        REQUIRE(f.v[k].real() == Catch::Approx(psi.v[k] * s).margin(1e-15));
        REQUIRE(f.v[k].imag() == Catch::Approx(-h.v[k] * s).margin(1e-15));
        REQUIRE(a.v[k].real() == Catch::Approx(psi.v[k] * s).margin(1e-15));
        REQUIRE(a.v[k].imag() == Catch::Approx(h.v[k] * s).margin(1e-15));
        REQUIRE(hp.v[k] ==
                Catch::Approx((psi.v[k] + h.v[k]) * s).margin(1e-15));
        REQUIRE(hm.v[k] ==
                Catch::Approx((psi.v[k] - h.v[k]) * s).margin(1e-15));
    }
}

TEST_CASE("fourier-like and analytic kernels are conjugates") {
    const RealSeries psi = test_psi();
    const ComplexSeries f = fourier_like(psi);
    const ComplexSeries a = analytic(psi);
    for (std::size_t k = 0; k < psi.size(); ++k)
        REQUIRE(f.v[k] == std::conj(a.v[k]));
}

TEST_CASE("every builder preserves unit energy") {
    const RealSeries psi = test_psi();
    REQUIRE(energy(fourier_like(psi)) == Catch::Approx(1.0).epsilon(1e-9));
    REQUIRE(energy(analytic(psi)) == Catch::Approx(1.0).epsilon(1e-9));
    REQUIRE(energy(hartley_like(psi, KernelKind::HartleyPlus)) ==
            Catch::Approx(1.0).epsilon(1e-9));
    REQUIRE(energy(hartley_like(psi, KernelKind::HartleyMinus)) ==
            Catch::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("one-sided spectra land on the advertised halves") {
    const RealSeries psi = test_psi();
    const std::size_t n = psi.grid.n;

    const Spectrum sf = dft(fourier_like(psi));
    const Spectrum sa = dft(analytic(psi));
    double total_f = 0.0, leak_f = 0.0, total_a = 0.0, leak_a = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        total_f += std::norm(sf.bins[k]);
        total_a += std::norm(sa.bins[k]);
        if (k > 0 && 2 * k < n) leak_f += std::norm(sf.bins[k]);
        if (2 * k > n) leak_a += std::norm(sa.bins[k]);
    }
    REQUIRE(leak_f / total_f < 1e-10);
    REQUIRE(leak_a / total_a < 1e-10);
}

TEST_CASE("hartley kernels keep bin magnitudes and shift phase by pi/4") {
    const RealSeries psi = test_psi();
    const Spectrum base = dft(psi);
    double peak = 0.0;
    for (const auto& b : base.bins) peak = std::max(peak, std::abs(b));

    const Spectrum plus = dft(hartley_like(psi, KernelKind::HartleyPlus));
    const Spectrum minus = dft(hartley_like(psi, KernelKind::HartleyMinus));
    const double quarter = std::numbers::pi / 4.0;
    for (std::size_t k = 1; k < psi.grid.n; ++k) {
        REQUIRE(std::abs(std::abs(plus.bins[k]) - std::abs(base.bins[k])) <=
                1e-9 * peak);
        REQUIRE(std::abs(std::abs(minus.bins[k]) - std::abs(base.bins[k])) <=
                1e-9 * peak);
        if (std::abs(base.bins[k]) <= 1e-8 * peak) continue;
        const double sgn = base.omega(k) > 0.0 ? 1.0 : -1.0;
        const cd rot_p = plus.bins[k] * std::conj(base.bins[k]) *
                         std::polar(1.0, quarter * sgn);
        const cd rot_m = minus.bins[k] * std::conj(base.bins[k]) *
                         std::polar(1.0, -quarter * sgn);
        REQUIRE(std::abs(std::arg(rot_p)) < 1e-6);
        REQUIRE(std::abs(std::arg(rot_m)) < 1e-6);
    }
}

TEST_CASE("hartley builder rejects non-hartley kinds") {
    const RealSeries psi = test_psi();
    REQUIRE_THROWS_AS(hartley_like(psi, KernelKind::FourierLike),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(hartley_like(psi, KernelKind::Analytic),
                      std::invalid_argument);
}

TEST_CASE("generic builder promotes hartley kinds to real-valued complex") {
    const RealSeries psi = test_psi();
    const ComplexSeries k = build_kernel(psi, KernelKind::HartleyMinus);
    const RealSeries r = hartley_like(psi, KernelKind::HartleyMinus);
    for (std::size_t i = 0; i < psi.size(); ++i) {
        REQUIRE(k.v[i].imag() == 0.0);
        REQUIRE(k.v[i].real() == r.v[i]);
    }
}

TEST_CASE("hartley kernels are asymmetric mixtures") {
    const RealSeries psi = test_psi();
    const SymmetryReport rep =
        symmetry(hartley_like(psi, KernelKind::HartleyPlus));
    REQUIRE(rep.cls == SymmetryClass::Asymmetric);
    // even and odd parts carry half the energy each
    REQUIRE(rep.even_score == Catch::Approx(0.5).margin(1e-6));
}
