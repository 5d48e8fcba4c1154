#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <vector>

#include <wavepair/errors.hpp>
#include <wavepair/grid.hpp>

using namespace wavepair;

TEST_CASE("make_grid fills in the sample spacing") {
    const TimeGrid g = make_grid(-8.0, 8.0, 2048);
    REQUIRE(g.t_min == -8.0);
    REQUIRE(g.n == 2048);
    REQUIRE(g.dt == Catch::Approx(16.0 / 2048).epsilon(1e-15));
    REQUIRE(g.t(0) == -8.0);
    REQUIRE(g.t(1) == Catch::Approx(-8.0 + g.dt).margin(1e-15));
    // half-open window: the right endpoint is not a sample
    REQUIRE(g.t(g.n - 1) == Catch::Approx(8.0 - g.dt).margin(1e-12));
    REQUIRE(g.t_max() == Catch::Approx(8.0).margin(1e-12));
    REQUIRE(g.span() == Catch::Approx(16.0).margin(1e-12));
    REQUIRE(g.half_width() == Catch::Approx(8.0).margin(1e-12));
}

TEST_CASE("make_grid rejects bad shapes") {
    REQUIRE_THROWS_AS(make_grid(-8.0, 8.0, 1001), OddSampleCount);
    REQUIRE_THROWS_AS(make_grid(-8.0, 8.0, 0), OddSampleCount);
    REQUIRE_THROWS_AS(make_grid(8.0, -8.0, 16), std::invalid_argument);
    REQUIRE_THROWS_AS(make_grid(1.0, 1.0, 16), std::invalid_argument);
    const double inf = std::numeric_limits<double>::infinity();
    const double nan = std::numeric_limits<double>::quiet_NaN();
    REQUIRE_THROWS_AS(make_grid(-inf, 8.0, 16), NonFiniteValue);
    REQUIRE_THROWS_AS(make_grid(0.0, nan, 16), NonFiniteValue);
}

TEST_CASE("symmetric window detection") {
    REQUIRE(make_grid(-8.0, 8.0, 2048).symmetric());
    REQUIRE(make_grid(-1.0, 1.0, 10).symmetric());
    REQUIRE_FALSE(make_grid(0.0, 1.0, 1000).symmetric());
    REQUIRE_FALSE(make_grid(-1.0, 3.0, 16).symmetric());
}

TEST_CASE("series constructors validate length and finiteness") {
    const TimeGrid g = make_grid(0.0, 1.0, 4);
    REQUIRE_NOTHROW(RealSeries(g, {1.0, 2.0, 3.0, 4.0}));
    REQUIRE_THROWS_AS(RealSeries(g, {1.0, 2.0}), std::invalid_argument);
    REQUIRE_THROWS_AS(
        RealSeries(g, {1.0, std::numeric_limits<double>::quiet_NaN(), 0.0, 0.0}),
        NonFiniteValue);

    using cd = std::complex<double>;
    REQUIRE_NOTHROW(ComplexSeries(g, std::vector<cd>(4, cd{1.0, -1.0})));
    REQUIRE_THROWS_AS(ComplexSeries(g, std::vector<cd>(3)), std::invalid_argument);
    std::vector<cd> bad(4);
    bad[2] = cd{0.0, std::numeric_limits<double>::infinity()};
    REQUIRE_THROWS_AS(ComplexSeries(g, bad), NonFiniteValue);
}

TEST_CASE("grid mismatch is detected") {
    const TimeGrid a = make_grid(0.0, 1.0, 4);
    const TimeGrid b = make_grid(0.0, 2.0, 4);
    REQUIRE_NOTHROW(require_same_grid(a, a));
    REQUIRE_THROWS_AS(require_same_grid(a, b), GridMismatch);
}

TEST_CASE("seventeen digit formatting round-trips") {
    for (double v : {3.141592653589793, -1.0 / 3.0, 1e-300, 0.0, 12345.678}) {
        const double back = std::stod(detail::format_double(v));
        REQUIRE(back == v);
    }
}
