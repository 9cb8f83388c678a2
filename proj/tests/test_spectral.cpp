#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <stdexcept>

#include <sl21osc/spectral.hpp>

using namespace sl21osc;
using namespace sl21osc::spectral;
using Catch::Approx;

TEST_CASE("classification of gamma") {
    REQUIRE(classify(1.0) == SpectralClass::Continuous);
    REQUIRE(classify(-1.0) == SpectralClass::Continuous);
    REQUIRE(classify(0.5) == SpectralClass::DiscreteInner);
    REQUIRE(classify(-2.0) == SpectralClass::DiscreteOuter);
    REQUIRE(classify(0.0) == SpectralClass::Degenerate);
}

TEST_CASE("determinacy of the moment problem") {
    auto r = determinacy_check(RepParams{1.0, 1.0}, 1000);
    REQUIRE(r.determinate);
    REQUIRE(r.partial_sum > 60.0);
    REQUIRE(determinacy_check(RepParams{100.0, 0.1}, 500).determinate);
    REQUIRE(determinacy_check(RepParams{0.4, 0.0}, 500).determinate);
}

TEST_CASE("support points") {
    REQUIRE(support_x(RepParams{1.0, 2.0}, 1, 1) == Approx(std::sqrt(3.0)));
    REQUIRE(support_x(RepParams{1.0, 2.0}, -1, 1) == Approx(-std::sqrt(3.0)));
    REQUIRE(support_x(RepParams{0.5, 0.6}, 1, 0) == Approx(0.56568542494923801));
    REQUIRE(support_x(RepParams{2.0, 0.0}, 1, 0) == Approx(std::sqrt(2.0)));
    REQUIRE(support_x(RepParams{1.3, 1.7}, 1, 0) == 0.0);
}

TEST_CASE("support point enumeration covers both signs once") {
    RepParams p{1.0, 1.5};
    auto pts = support_points(p, 3);
    // x = 0 appears once, k = 1..3 twice
    REQUIRE(pts.size() == 7);
    int zeros = 0;
    for (const auto& pt : pts) zeros += pt.x == 0.0 ? 1 : 0;
    REQUIRE(zeros == 1);
}

TEST_CASE("weights") {
    RepParams outer{1.4, 1.3};
    REQUIRE(weight(outer, support_point(outer, 1, 0)) == 1.0);
    REQUIRE(weight(outer, support_point(outer, 1, 6))
            == Approx(0.051779980786315106).epsilon(1e-13));
    RepParams inner{0.7, 0.6};
    REQUIRE(weight(inner, support_point(inner, 1, 0)) == Approx(0.5));
    REQUIRE(weight(inner, support_point(inner, -1, 5))
            == Approx(0.0014077047293568).epsilon(1e-13));
    RepParams cont{0.5, 1.0};
    REQUIRE(continuous_weight(cont, 0.0) == Approx(1.0));
    RepParams dg{2.0, 0.0};
    REQUIRE(weight(dg, support_point(dg, 1, 3)) == 0.5);
}

TEST_CASE("normalization constants") {
    REQUIRE(norm_constant(RepParams{0.7, 0.6}) == Approx(1.3667025924290976).epsilon(1e-14));
    REQUIRE(norm_constant(RepParams{1.4, 1.3}) == Approx(3.5047146133825074).epsilon(1e-14));
    REQUIRE(norm_constant(RepParams{0.7, 1.0}) == Approx(1.2980553326475578).epsilon(1e-14));
    REQUIRE(norm_constant(RepParams{0.7, 0.0}) == 1.0);
}

TEST_CASE("jacobi off-diagonal couplings") {
    RepParams p{0.9, 1.7};
    REQUIRE(jacobi_offdiagonal(p, 0) == Approx(std::sqrt(0.9)));
    REQUIRE(jacobi_offdiagonal(p, 1) == Approx(1.7));
    REQUIRE(jacobi_offdiagonal(p, 4) == Approx(std::sqrt(2.9)));
    const auto M = jacobi_matrix(p, 6).entries;
    for (int i = 0; i < 6; ++i) REQUIRE(M(i, i) == rep::Complex(0.0, 0.0));
    REQUIRE(M(2, 1).real() == Approx(1.7));
    REQUIRE(M(1, 2).real() == Approx(1.7));
}

TEST_CASE("closed-form polynomial values") {
    REQUIRE(pn_closed_form(RepParams{3.1, 0.8}, 1.234, 0) == 1.0);
    RepParams cont{1.1, 1.0};
    REQUIRE(pn_closed_form(cont, 0.8, 4) == Approx(0.01470165052429584).margin(1e-14));
    REQUIRE(pn_closed_form(cont, 1.3, 7) == Approx(0.72925867649949903).epsilon(1e-13));
    RepParams inner{0.7, 0.6};
    const auto pt3 = support_point(inner, 1, 3);
    REQUIRE(pn_closed_form(inner, pt3, 9) == Approx(2.303519336018666).epsilon(1e-13));
    REQUIRE(pn_closed_form(inner, pt3, 10) == Approx(-0.91974154497164071).epsilon(1e-13));
    RepParams outer{1.4, 1.3};
    REQUIRE(pn_closed_form(outer, support_point(outer, -1, 2), 7)
            == Approx(0.15200012987917852).epsilon(1e-12));
}

TEST_CASE("recurrence agrees with closed forms across all classes") {
    for (double gamma : {0.4, 0.75, 1.0, 1.2, 1.5, 0.0}) {
        RepParams p{1.3, gamma};
        CAPTURE(gamma);
        double worst = 0.0;
        if (classify(gamma) == SpectralClass::Continuous) {
            for (double x : {0.3, 1.7}) {
                auto rec = pn_recurrence(p, x, 40);
                for (int n = 0; n <= 40; ++n) {
                    const double cf = pn_closed_form(p, x, n);
                    const double scale = std::max({std::abs(cf), std::abs(rec[n]), 1.0});
                    worst = std::max(worst, std::abs(cf - rec[n]) / scale);
                }
            }
        } else {
            for (int k : {0, 4}) {
                const auto pt = support_point(p, 1, k);
                auto rec = pn_recurrence(p, pt, 40);
                for (int n = 0; n <= 40; ++n) {
                    const double cf = pn_closed_form(p, pt, n);
                    const double scale = std::max({std::abs(cf), std::abs(rec[n]), 1.0});
                    worst = std::max(worst, std::abs(cf - rec[n]) / scale);
                }
            }
        }
        REQUIRE(worst < 1e-10);
    }
}

TEST_CASE("degenerate polynomials collapse to indicator values") {
    RepParams p{2.0, 0.0};
    const double x2 = std::sqrt(2.0 + 2.0);
    auto v = pn_recurrence(p, x2, 8);
    REQUIRE(v[4] == 1.0);
    REQUIRE(v[5] == 1.0);
    REQUIRE(v[2] == 0.0);
    REQUIRE(pn_closed_form(p, -x2, 5) == -1.0);
    REQUIRE_THROWS_AS(pn_recurrence(p, 0.77, 8), std::domain_error);
}

TEST_CASE("orthogonality against the exact normalization") {
    REQUIRE(orthogonality_residual(RepParams{0.7, 0.6}, 10) < 1e-8);
    REQUIRE(orthogonality_residual(RepParams{1.3, 1.0}, 10) < 1e-8);
    REQUIRE(orthogonality_residual(RepParams{1.4, 1.3}, 10) < 1e-8);
    REQUIRE(orthogonality_residual(RepParams{0.9, 0.0}, 10) < 1e-8);
}

TEST_CASE("truncated spectrum matches the analytic support") {
    for (auto [beta, gamma] : {std::pair{1.0, 0.4}, {2.0, 1.5}, {0.8, 0.0}}) {
        CAPTURE(beta, gamma);
        auto matches = truncated_spectrum_crosscheck(RepParams{beta, gamma}, 400, 10);
        REQUIRE(matches.size() == 10);
        for (const auto& m : matches) REQUIRE(m.gap < 1e-4);
    }
}

TEST_CASE("formal eigenvectors satisfy the truncated eigen-relation") {
    RepParams p{1.0, 0.5};
    for (int k : {0, 5, 20}) {
        CAPTURE(k);
        REQUIRE(eigenvector_residual(p, 1, k, 200) < 1e-6);
        REQUIRE(eigenvector_residual(p, -1, k, 200) < 1e-6);
    }
}

TEST_CASE("nearest support point and membership") {
    RepParams p{1.0, 0.5};
    const auto pt = nearest_support(p, support_x(p, 1, 4) + 1e-4);
    REQUIRE(pt.k == 4);
    REQUIRE(pt.sign == 1);
    REQUIRE(on_support(p, support_x(p, -1, 2)));
    REQUIRE_FALSE(on_support(p, 0.0));
}
