#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <stdexcept>

#include <sl21osc/fourier.hpp>

using namespace sl21osc;
using namespace sl21osc::fourier;
using Catch::Approx;
using Complexd = std::complex<double>;

TEST_CASE("continuous kernel reduces to the classical Fourier kernel") {
    RepParams p{0.5, 1.0};
    const double s = 1.0 / std::sqrt(2.0 * M_PI);
    for (double x : {-2.0, -0.5, 0.0, 1.0, 2.0})
        for (double y : {-2.0, 0.5, 2.0}) {
            const Complexd want{s * std::cos(x * y), -s * std::sin(x * y)};
            REQUIRE(std::abs(kernel_closed(p, x, y) - want) < 1e-12);
        }
}

TEST_CASE("frozen kernel values") {
    RepParams cont{1.3, 1.0};
    REQUIRE(std::abs(kernel_closed(cont, 0.8, -1.7)
                     - Complexd{0.392627882479888, 0.24597234993048229})
            < 1e-14);
    RepParams inner{0.7, 0.6};
    REQUIRE(std::abs(kernel_closed(inner, spectral::support_point(inner, 1, 2),
                                   spectral::support_point(inner, -1, 3))
                     - Complexd{-0.09174241796578752, 0.019271637939996057})
            < 1e-13);
    RepParams outer{1.4, 1.3};
    REQUIRE(std::abs(kernel_closed(outer, spectral::support_point(outer, 1, 0),
                                   spectral::support_point(outer, -1, 5))
                     - Complexd{0.13352653196690699, 0.0})
            < 1e-13);
}

TEST_CASE("lowest inner kernel entry in closed form") {
    // k = l = 0 leaves both hypergeometric factors at 1
    RepParams p{1.0, 0.5};
    const auto pt = spectral::support_point(p, 1, 0);
    const double x0 = pt.x;
    const Complexd want =
        0.5 * (0.75 / 1.25) * Complexd{1.0, -x0 * x0 / (1.0 * 1.25)};
    REQUIRE(std::abs(kernel_closed(p, pt, pt) - want) < 1e-15);
}

TEST_CASE("degenerate kernel is the diagonal quarter-turn") {
    RepParams p{1.1, 0.0};
    const auto k2p = spectral::support_point(p, 1, 2);
    const auto k2m = spectral::support_point(p, -1, 2);
    const auto k3p = spectral::support_point(p, 1, 3);
    REQUIRE(std::abs(kernel_closed(p, k2p, k2p) - Complexd{0.5, -0.5}) < 1e-15);
    REQUIRE(std::abs(kernel_closed(p, k2p, k2m) - Complexd{0.5, 0.5}) < 1e-15);
    REQUIRE(std::abs(kernel_closed(p, k3p, k3p) - Complexd{-0.5, 0.5}) < 1e-15);
    REQUIRE(kernel_closed(p, k2p, k3p) == Complexd{0.0, 0.0});
}

TEST_CASE("kernel parity in the first argument") {
    RepParams p{0.8, 0.7};
    const auto yl = spectral::support_point(p, 1, 3);
    for (int k : {0, 1, 4}) {
        const auto kp = kernel_closed(p, spectral::support_point(p, 1, k), yl);
        const auto km = kernel_closed(p, spectral::support_point(p, -1, k), yl);
        REQUIRE(kp.real() == Approx(km.real()).margin(1e-15));
        REQUIRE(kp.imag() == Approx(-km.imag()).margin(1e-15));
    }
}

TEST_CASE("series oracle is termwise symmetric") {
    RepParams p{2.0, 0.5};
    const auto a = spectral::support_point(p, 1, 2);
    const auto b = spectral::support_point(p, -1, 3);
    const auto ab = kernel_series(p, a, b, 120).value;
    const auto ba = kernel_series(p, b, a, 120).value;
    REQUIRE(ab == ba);
}

TEST_CASE("closed forms match the defining series") {
    RepParams inner{2.0, 0.5};
    const auto a = spectral::support_point(inner, 1, 2);
    const auto b = spectral::support_point(inner, -1, 3);
    REQUIRE(std::abs(kernel_closed(inner, a, b) - kernel_series(inner, a, b, 200).value)
            < 1e-9);
    RepParams cont{0.5, 1.0};
    const Complexd classical =
        std::exp(Complexd{0.0, -0.25}) / std::sqrt(2.0 * M_PI);
    REQUIRE(std::abs(kernel_series(cont, 0.5, 0.5, 120).value - classical) < 1e-8);
    RepParams outer{1.0, 1.4};
    const auto c = spectral::support_point(outer, 1, 1);
    const auto d = spectral::support_point(outer, 1, 4);
    REQUIRE(std::abs(kernel_closed(outer, c, d) - kernel_series(outer, c, d, 400).value)
            < 1e-8);
}

TEST_CASE("bilinear generating function") {
    REQUIRE(bilinear_gf_check(1.5, 0.5, 0.0, 2, 3, 50) == 0.0);
    REQUIRE(bilinear_gf_check(2.0, 0.6, 0.3, 0, 4, 400) < 1e-9);
    REQUIRE(bilinear_gf_check(1.0, 0.5, 0.2, 3, 5, 400) < 1e-9);
    REQUIRE_THROWS_AS(bilinear_gf_check(1.0, 0.5, 0.6, 1, 1, 100), std::domain_error);
}

TEST_CASE("kernel matrix is unitary in the Parseval sense") {
    REQUIRE(unitarity_residual(RepParams{1.0, 0.5}, 20) < 1e-5);
    REQUIRE(unitarity_residual(RepParams{1.1, 0.0}, 12) < 1e-14);
}

TEST_CASE("kernel converges to the continuous kernel as gamma approaches 1") {
    auto rows = kernel_limit_check(0.5, 1.0, 1.0, {1e-1, 1e-4});
    REQUIRE(rows.size() == 4);
    const Complexd classical = std::exp(Complexd{0.0, -1.0}) / std::sqrt(2.0 * M_PI);
    double first = 0.0, last = 0.0;
    for (const auto& r : rows) {
        if (r.epsilon == 1e-1) first = std::max(first, r.difference);
        if (r.epsilon == 1e-4) {
            last = std::max(last, r.difference);
            REQUIRE(r.difference < 1e-2);
            REQUIRE(std::abs(r.discrete_value - classical) < 2e-2);
        }
    }
    REQUIRE(last < first);
}

TEST_CASE("kernel arguments must share a class") {
    RepParams inner{1.0, 0.5};
    RepParams outer{1.0, 2.0};
    const auto pi = spectral::support_point(inner, 1, 1);
    REQUIRE_THROWS_AS(kernel_closed(outer, pi, pi), std::domain_error);
}
