#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <wavepair/cwt.hpp>

using namespace wavepair;

namespace {

TimeGrid experiment_grid() { return make_grid(0.0, 1.0, 1000); }

double max_mod_diff(const Scalogram& a, const Scalogram& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        m = std::max(m, std::abs(std::abs(a.coeffs[i]) - std::abs(b.coeffs[i])));
    return m;
}

double peak_modulus(const Scalogram& s) {
    double m = 0.0;
    for (const auto& z : s.coeffs) m = std::max(m, std::abs(z));
    return m;
}

} // namespace

TEST_CASE("scale ranges enumerate inclusively") {
    REQUIRE(ScaleRange{1.0, 8.0, 1.0}.values() ==
            std::vector<double>{1, 2, 3, 4, 5, 6, 7, 8});
    REQUIRE(ScaleRange{2.0, 3.0, 0.5}.values() ==
            std::vector<double>{2.0, 2.5, 3.0});
    REQUIRE(ScaleRange{4.0, 4.0, 1.0}.values() == std::vector<double>{4.0});
    REQUIRE_THROWS_AS((ScaleRange{0.0, 8.0, 1.0}.values()),
                      std::invalid_argument);
    REQUIRE_THROWS_AS((ScaleRange{8.0, 1.0, 1.0}.values()),
                      std::invalid_argument);
    REQUIRE_THROWS_AS((ScaleRange{1.0, 8.0, -1.0}.values()),
                      std::invalid_argument);
}

TEST_CASE("zero signal gives a zero scalogram") {
    const RealSeries f{experiment_grid(), std::vector<double>(1000, 0.0)};
    const Scalogram s = cwt(f, {WaveletFamily::Morlet}, {1.0, 4.0, 1.0});
    REQUIRE(s.rows() == 4);
    REQUIRE(s.cols() == 1000);
    REQUIRE(peak_modulus(s) == 0.0);
    REQUIRE_FALSE(s.complex_kernel);
}

TEST_CASE("transform is linear in the signal") {
    const TimeGrid g = make_grid(0.0, 1.0, 256);
    std::vector<double> a(g.n), b(g.n);
    for (std::size_t k = 0; k < g.n; ++k) {
        a[k] = std::sin(2.0 * std::numbers::pi * 20.0 * g.t(k));
        b[k] = std::cos(2.0 * std::numbers::pi * 33.0 * g.t(k));
    }
    std::vector<double> mixv(g.n);
    for (std::size_t k = 0; k < g.n; ++k) mixv[k] = 2.0 * a[k] - 0.5 * b[k];
    const ScaleRange r{1.0, 4.0, 1.0};
    const WaveletSpec w{WaveletFamily::MexicanHat};
    const Scalogram sa = cwt(RealSeries{g, a}, w, r);
    const Scalogram sb = cwt(RealSeries{g, b}, w, r);
    const Scalogram sm = cwt(RealSeries{g, mixv}, w, r);
    double scale = peak_modulus(sm);
    double err = 0.0;
    for (std::size_t i = 0; i < sm.coeffs.size(); ++i)
        err = std::max(err, std::abs(sm.coeffs[i] - (2.0 * sa.coeffs[i] -
                                                     0.5 * sb.coeffs[i])));
    REQUIRE(err <= 1e-10 * scale);
}

TEST_CASE("circular signal shift shifts every row") {
    const TimeGrid g = make_grid(0.0, 1.0, 256);
    std::vector<double> v(g.n);
    for (std::size_t k = 0; k < g.n; ++k)
        v[k] = std::sin(2.0 * std::numbers::pi * 12.0 * g.t(k)) +
               0.3 * std::sin(2.0 * std::numbers::pi * 40.0 * g.t(k) + 0.7);
    const std::size_t m = 37;
    std::vector<double> shifted(g.n);
    for (std::size_t k = 0; k < g.n; ++k) shifted[k] = v[(k + g.n - m) % g.n];
    const ScaleRange r{1.0, 6.0, 1.0};
    const WaveletSpec w{WaveletFamily::Morlet};
    const Scalogram s0 = cwt(RealSeries{g, v}, w, r);
    const Scalogram s1 = cwt(RealSeries{g, shifted}, w, r);
    const double scale = peak_modulus(s0);
    double err = 0.0;
    for (std::size_t i = 0; i < s0.rows(); ++i)
        for (std::size_t j = 0; j < s0.cols(); ++j)
            err = std::max(err, std::abs(s1.at(i, (j + m) % s0.cols()) -
                                         s0.at(i, j)));
    REQUIRE(err <= 1e-12 * scale);
}

TEST_CASE("real kernels give real coefficient rows") {
    const RealSeries f = gen_two_sine(experiment_grid(), 5.0, 9.0);
    for (auto kind : {std::optional<KernelKind>{},
                      std::optional<KernelKind>{KernelKind::HartleyPlus},
                      std::optional<KernelKind>{KernelKind::HartleyMinus}}) {
        const Scalogram s = cwt(f, {WaveletFamily::MexicanHat},
                                {1.0, 8.0, 1.0}, kind);
        REQUIRE_FALSE(s.complex_kernel);
        const double scale = peak_modulus(s);
        double imag_peak = 0.0;
        for (const auto& z : s.coeffs)
            imag_peak = std::max(imag_peak, std::abs(z.imag()));
        REQUIRE(imag_peak <= 1e-10 * scale);
    }
}

TEST_CASE("analytic and fourier-like kernels give equal moduli") {
    const RealSeries f = gen_two_sine(experiment_grid(), 5.0, 9.0);
    const WaveletSpec w{WaveletFamily::MexicanHat};
    const ScaleRange r{1.0, 32.0, 1.0};
    const Scalogram sa = cwt(f, w, r, KernelKind::Analytic);
    const Scalogram sf = cwt(f, w, r, KernelKind::FourierLike);
    REQUIRE(sa.complex_kernel);
    REQUIRE(sf.complex_kernel);
    REQUIRE(max_mod_diff(sa, sf) <= 1e-10 * peak_modulus(sa));
}

TEST_CASE("support flag marks rows whose kernel exceeds the window") {
    const RealSeries f = gen_two_sine(experiment_grid(), 5.0, 9.0);
    const Scalogram s =
        cwt(f, {WaveletFamily::Morlet}, {32.0, 96.0, 32.0});
    REQUIRE(s.scales == std::vector<double>{32.0, 64.0, 96.0});
    REQUIRE(s.support_clipped[0] == 0);    // 16 * 32 = 512 < 1000
    REQUIRE(s.support_clipped[1] == 1);    // 16 * 64 = 1024 > 1000
    REQUIRE(s.support_clipped[2] == 1);
}

TEST_CASE("level slice returns rows and rejects unknown scales") {
    const RealSeries f = gen_two_sine(experiment_grid(), 5.0, 9.0);
    const Scalogram s = cwt(f, {WaveletFamily::MexicanHat}, {1.0, 8.0, 1.0});
    const ComplexSeries row = level_slice(s, 5.0);
    REQUIRE(row.size() == s.cols());
    for (std::size_t j = 0; j < s.cols(); ++j)
        REQUIRE(row.v[j] == s.at(4, j));
    // tolerant matching absorbs text round-trips
    REQUIRE_NOTHROW(level_slice(s, 5.0 + 2e-13));
    REQUIRE_THROWS_AS(level_slice(s, 8.5), UnknownScale);
}

TEST_CASE("normalized modulus peaks at one and rejects zero input") {
    const TimeGrid g = make_grid(0.0, 1.0, 8);
    using cd = std::complex<double>;
    std::vector<cd> v{{3.0, 4.0}, {0.0, 1.0}, {0, 0}, {0, 0},
                      {0, 0},     {0, 0},     {0, 0}, {0, 0}};
    const RealSeries nm = normalized_modulus(ComplexSeries{g, v});
    REQUIRE(nm.v[0] == 1.0);
    REQUIRE(nm.v[1] == Catch::Approx(0.2));
    REQUIRE(*std::max_element(nm.v.begin(), nm.v.end()) == 1.0);
    REQUIRE_THROWS_AS(
        normalized_modulus(ComplexSeries{g, std::vector<cd>(8, cd{})}),
        std::invalid_argument);
}

TEST_CASE("two-sine generator is bin-aligned on the experiment grid") {
    const RealSeries f = gen_two_sine(experiment_grid(), 5.0, 9.0);
    double peak = 0.0;
    for (double x : f.v) peak = std::max(peak, std::abs(x));
    REQUIRE(peak <= 2.0);
    const Spectrum s = dft(f);
    std::vector<std::size_t> hot;
    double top = 0.0;
    for (std::size_t k = 0; 2 * k <= s.grid.n; ++k)
        top = std::max(top, std::abs(s.bins[k]));
    for (std::size_t k = 0; 2 * k <= s.grid.n; ++k)
        if (std::abs(s.bins[k]) > 0.5 * top) hot.push_back(k);
    REQUIRE(hot == std::vector<std::size_t>{5, 9});
    REQUIRE_THROWS_AS(gen_two_sine(experiment_grid(), 5.0, 600.0),
                      std::invalid_argument);
}

TEST_CASE("same-frequency two-sine doubles the amplitude") {
    const TimeGrid g = experiment_grid();
    const RealSeries f = gen_two_sine(g, 7.0, 7.0);
    for (std::size_t k = 0; k < g.n; ++k)
        REQUIRE(f.v[k] ==
                Catch::Approx(2.0 * std::sin(2.0 * std::numbers::pi * 7.0 *
                                             g.t(k)))
                    .margin(1e-12));
}

TEST_CASE("breakdown generator switches bands at the break time") {
    const TimeGrid g = experiment_grid();
    const RealSeries f = gen_freq_breakdown(g, 5.0, 50.0, 0.5);
    constexpr double two_pi = 2.0 * std::numbers::pi;
    for (std::size_t k = 0; k < g.n; ++k) {
        const double t = g.t(k);
        const double want =
            t < 0.5 ? std::sin(two_pi * 5.0 * t) : std::sin(two_pi * 50.0 * t);
        REQUIRE(f.v[k] == want);
    }
    const RealSeries hi = gen_freq_breakdown(g, 5.0, 50.0, 0.0);
    for (std::size_t k = 0; k < 32; ++k)
        REQUIRE(hi.v[k] ==
                Catch::Approx(std::sin(two_pi * 50.0 * g.t(k))).margin(1e-12));
    REQUIRE_THROWS_AS(gen_freq_breakdown(g, 5.0, 50.0, 1.5),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(gen_freq_breakdown(g, 5.0, 500.0, 0.5),
                      std::invalid_argument);
}

TEST_CASE("a single tone produces one dominant ridge at its frequency") {
    const TimeGrid g = experiment_grid();
    std::vector<double> v(g.n);
    for (std::size_t k = 0; k < g.n; ++k)
        v[k] = std::sin(2.0 * std::numbers::pi * 5.0 * g.t(k));
    const Scalogram s =
        cwt(RealSeries{g, v}, {WaveletFamily::Morlet}, {80.0, 256.0, 2.0});
    const std::vector<RidgePoint> ridges = ridge_frequencies(s, 1);
    REQUIRE(ridges.size() == 1);
    REQUIRE(std::abs(ridges[0].frequency - 5.0) / 5.0 < 0.05);
}

TEST_CASE("ridge extraction validates top_k and ranks true maxima") {
    const RealSeries f = gen_two_sine(experiment_grid(), 5.0, 9.0);
    const Scalogram s = cwt(f, {WaveletFamily::Morlet}, {1.0, 8.0, 1.0});
    REQUIRE_THROWS_AS(ridge_frequencies(s, 9), std::invalid_argument);
}

TEST_CASE("detected ridge rows dominate the median row energy") {
    const RealSeries f = gen_two_sine(experiment_grid(), 5.0, 9.0);
    const Scalogram s =
        cwt(f, {WaveletFamily::Morlet}, {1.0, 384.0, 1.0});
    const std::vector<RidgePoint> ridges = ridge_frequencies(s, 2);
    REQUIRE(ridges.size() == 2);
    std::vector<double> msm(s.rows(), 0.0);
    for (std::size_t i = 0; i < s.rows(); ++i) {
        for (std::size_t j = 0; j < s.cols(); ++j)
            msm[i] += std::norm(s.at(i, j));
        msm[i] /= double(s.cols());
    }
    std::vector<double> sorted = msm;
    std::sort(sorted.begin(), sorted.end());
    const double median = sorted[sorted.size() / 2];
    for (const RidgePoint& r : ridges) {
        const std::size_t i =
            std::size_t(std::find(s.scales.begin(), s.scales.end(), r.scale) -
                        s.scales.begin());
        REQUIRE(msm[i] >= 5.0 * median);
    }
}

TEST_CASE("Meyer kernels run through the transform") {
    // the Meyer band reaches 5 and 9 Hz on this grid for scales in
    // roughly [67, 267]; smaller scales would correlate to exactly zero
    const RealSeries f = gen_two_sine(experiment_grid(), 5.0, 9.0);
    const Scalogram s = cwt(f, {WaveletFamily::Meyer}, {100.0, 160.0, 30.0});
    REQUIRE(s.rows() == 3);
    REQUIRE(peak_modulus(s) > 0.0);
    for (const auto& z : s.coeffs) {
        REQUIRE(std::isfinite(z.real()));
        REQUIRE(std::isfinite(z.imag()));
    }
}

TEST_CASE("breakdown crossing estimator brackets the break time") {
    const RealSeries f =
        gen_freq_breakdown(experiment_grid(), 5.0, 50.0, 0.5);
    const Scalogram s = cwt(f, {WaveletFamily::MexicanHat}, {1.0, 32.0, 1.0},
                            KernelKind::Analytic);
    const double t = crossing_time(s, 5.0, 25.0);
    REQUIRE(std::abs(t - 0.5) <= 0.020);
}

TEST_CASE("crossing search reports when no crossing exists") {
    const RealSeries f = gen_two_sine(experiment_grid(), 5.0, 5.0);
    const Scalogram s = cwt(f, {WaveletFamily::MexicanHat}, {1.0, 2.0, 1.0},
                            KernelKind::Analytic);
    // a row can never be both above and below one half of its own peak
    REQUIRE_THROWS_AS(crossing_time(s, 1.0, 1.0), std::runtime_error);
}
