// Suite-level acceptance gate: nine checks covering the representation
// algebra, the position-operator spectra, wavefunctions, Fourier kernels,
// limits, and the paraboson embedding, each at its stated tolerance.
// Prints one line per criterion and exits nonzero if any fails.
#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdio>
#include <vector>

#include <sl21osc/sl21osc.hpp>

using namespace sl21osc;

namespace {

int failures = 0;

void report(int idx, const char* label, double worst, double tol) {
    const bool ok = worst <= tol;
    if (!ok) ++failures;
    std::printf("criterion %d: %-42s %s  (worst %.3e, tol %.0e)\n", idx, label,
                ok ? "PASS" : "FAIL", worst, tol);
}

double hermite_fn(int n, double x) {
    const long double xl = x;
    long double h0 = std::pow(3.14159265358979323846L, -0.25L) * std::exp(-0.5L * xl * xl);
    if (n == 0) return double(h0);
    long double h1 = std::sqrt(2.0L) * xl * h0;
    for (int j = 2; j <= n; ++j) {
        const long double h2 = xl * std::sqrt(2.0L / j) * h1 - std::sqrt((j - 1.0L) / j) * h0;
        h0 = h1;
        h1 = h2;
    }
    return double(h1);
}

const std::vector<double> beta_grid{0.3, 0.5, 1.0, 2.0, 3.7};
const std::vector<double> gamma_grid{0.4, 0.75, 1.0, 1.2, 1.5, 0.0};

double criterion_superalgebra() {
    double worst = 0.0;
    for (double beta : beta_grid) {
        RepParams p{beta, 1.0};
        CheckReport r = rep::verify_brackets(p, 40);
        r.merge(rep::verify_star(p, 40));
        r.merge(rep::verify_observables(p, 40));
        worst = std::max(worst, r.max_residual());
    }
    return worst;
}

double criterion_recurrence_vs_closed() {
    double worst = 0.0;
    for (double beta : beta_grid)
        for (double gamma : gamma_grid) {
            RepParams p{beta, gamma};
            if (spectral::classify(gamma) == spectral::SpectralClass::Continuous) {
                for (double x : {0.3, 0.9, 1.7, 2.6}) {
                    auto rec = spectral::pn_recurrence(p, x, 40);
                    for (int n = 0; n <= 40; ++n) {
                        const double cf = spectral::pn_closed_form(p, x, n);
                        const double scale = std::max({std::abs(cf), std::abs(rec[n]), 1.0});
                        worst = std::max(worst, std::abs(cf - rec[n]) / scale);
                    }
                }
            } else {
                for (int k : {0, 1, 4, 9}) {
                    const auto pt = spectral::support_point(p, 1, k);
                    auto rec = spectral::pn_recurrence(p, pt, 40);
                    for (int n = 0; n <= 40; ++n) {
                        const double cf = spectral::pn_closed_form(p, pt, n);
                        const double scale = std::max({std::abs(cf), std::abs(rec[n]), 1.0});
                        worst = std::max(worst, std::abs(cf - rec[n]) / scale);
                    }
                }
            }
        }
    return worst;
}

double criterion_orthogonality() {
    double worst = 0.0;
    for (double beta : beta_grid)
        for (double gamma : gamma_grid)
            worst = std::max(worst, spectral::orthogonality_residual(RepParams{beta, gamma}, 10));
    return worst;
}

void criterion_spectrum(double& gap_worst, double& vec_worst) {
    gap_worst = 0.0;
    vec_worst = 0.0;
    for (double beta : {0.5, 1.3, 2.0})
        for (double gamma : {0.4, 0.75, 1.2, 1.5, 0.0}) {
            RepParams p{beta, gamma};
            for (const auto& m : spectral::truncated_spectrum_crosscheck(p, 400, 10))
                gap_worst = std::max(gap_worst, m.gap);
            const bool outer =
                spectral::classify(gamma) == spectral::SpectralClass::DiscreteOuter;
            for (int k = 0; k <= 20; ++k) {
                vec_worst = std::max(vec_worst, spectral::eigenvector_residual(p, 1, k, 200));
                if (!(outer && k == 0))
                    vec_worst =
                        std::max(vec_worst, spectral::eigenvector_residual(p, -1, k, 200));
            }
        }
}

double criterion_hermite_case(double& kernel_worst) {
    RepParams p{0.5, 1.0};
    double worst = 0.0;
    for (int n = 0; n <= 10; ++n)
        for (double x = -5.0; x <= 5.0; x += 0.25)
            worst = std::max(worst, std::abs(wavefun::phi(p, n, x) - hermite_fn(n, x)));
    kernel_worst = 0.0;
    const double s = 1.0 / std::sqrt(2.0 * M_PI);
    for (double x = -2.0; x <= 2.0; x += 1.0)
        for (double y = -2.0; y <= 2.0; y += 1.0) {
            const std::complex<double> want{s * std::cos(x * y), -s * std::sin(x * y)};
            kernel_worst = std::max(kernel_worst,
                                    std::abs(fourier::kernel_closed(p, x, y) - want));
        }
    return worst;
}

double criterion_kernels(double& unitarity_worst) {
    double worst = 0.0;
    for (double beta : {0.5, 1.0, 2.0})
        for (double gamma : gamma_grid) {
            RepParams p{beta, gamma};
            if (spectral::classify(gamma) == spectral::SpectralClass::Continuous) {
                for (double x = -3.0; x <= 3.0; x += 1.0)
                    for (double y = x; y <= 3.0; y += 1.0) {
                        const auto series = fourier::kernel_series(p, x, y, 200).value;
                        worst = std::max(worst,
                                         std::abs(fourier::kernel_closed(p, x, y) - series));
                    }
            } else {
                const auto pts = spectral::support_points(p, 10);
                for (std::size_t i = 0; i < pts.size(); ++i)
                    for (std::size_t j = i; j < pts.size(); ++j) {
                        const auto series =
                            fourier::kernel_series(p, pts[i], pts[j], 300).value;
                        worst = std::max(
                            worst,
                            std::abs(fourier::kernel_closed(p, pts[i], pts[j]) - series));
                    }
            }
        }
    unitarity_worst = 0.0;
    for (double beta : {0.5, 1.0, 2.0})
        for (double gamma : {0.4, 0.5, 0.75, 1.2, 1.5})
            unitarity_worst =
                std::max(unitarity_worst, fourier::unitarity_residual(RepParams{beta, gamma}, 20));
    return worst;
}

void criterion_limits(double& wave_worst, double& kernel_worst, double& gf_worst) {
    wave_worst = 0.0;
    for (double beta : {0.5, 1.0, 2.0})
        for (int n : {0, 1, 2, 5})
            for (double x : {0.6, 1.0, 1.8})
                for (const auto& row : wavefun::limit_gamma_to_one(beta, n, x, {1e-4}))
                    wave_worst = std::max(wave_worst, row.difference);
    kernel_worst = 0.0;
    for (const auto& row : fourier::kernel_limit_check(0.5, 1.0, 1.0, {1e-4}))
        kernel_worst = std::max(kernel_worst, row.difference);
    for (const auto& row : fourier::kernel_limit_check(2.0, 1.5, 0.8, {1e-4}))
        kernel_worst = std::max(kernel_worst, row.difference);
    gf_worst = 0.0;
    const std::vector<std::array<double, 3>> bcz{{1.0, 0.5, 0.2}, {2.0, 0.6, 0.3},
                                                 {0.5, 0.3, 0.12}};
    for (const auto& s : bcz)
        for (int xi = 0; xi <= 10; ++xi)
            for (int xi2 = xi; xi2 <= 10; ++xi2)
                gf_worst = std::max(gf_worst,
                                    fourier::bilinear_gf_check(s[0], s[1], s[2], xi, xi2, 600));
}

double criterion_paraboson() {
    double worst = 0.0;
    for (double beta : {0.3, 0.5, 1.0, 2.0}) {
        CheckReport r = paraboson::verify_triple_relation(beta, 40);
        r.merge(paraboson::verify_osp_embedding(beta, 40));
        r.merge(paraboson::verify_q_identification(beta, 40));
        r.merge(paraboson::verify_compatibility(beta, 40));
        worst = std::max(worst, r.max_residual());
        for (double gamma : {0.5, 1.0, 1.3}) {
            const auto qp = paraboson::commutator_qp_spectrum(RepParams{beta, gamma}, 40);
            worst = std::max({worst, qp.offdiagonal_residual, qp.pattern_residual});
            const auto wg = paraboson::wigner_hamiltonian_spectrum(RepParams{beta, gamma}, 40);
            worst = std::max({worst, wg.offdiagonal_residual, wg.pattern_residual});
        }
    }
    return worst;
}

double criterion_figures() {
    double worst = 0.0;
    for (double beta : {0.5, 2.0}) {
        const double window = beta <= 1.0 ? 6.0 : 7.0;
        for (double gamma : {0.4, 0.75, 1.0, 1.2, 1.5})
            for (int n : {0, 1}) {
                const auto rows = wavefun::figure_data(beta, {gamma}, {n}, window);
                double total = 0.0;
                if (spectral::classify(gamma) == spectral::SpectralClass::Continuous) {
                    for (std::size_t i = 0; i < rows.size(); ++i) {
                        const double f = rows[i].value * rows[i].value;
                        const bool edge = i == 0 || i + 1 == rows.size();
                        total += (edge ? 0.5 : 1.0) * f * 0.05;
                    }
                } else {
                    for (const auto& r : rows) total += r.value * r.value;
                }
                worst = std::max(worst, std::abs(total - 1.0));
            }
    }
    return worst;
}

} // namespace

int main() {
    report(1, "superalgebra relations (beta grid, N=40)", criterion_superalgebra(), 1e-12);
    report(2, "recurrence vs closed forms (n <= 40)", criterion_recurrence_vs_closed(), 1e-10);
    report(3, "orthogonality, all four normalizations", criterion_orthogonality(), 1e-8);

    double gap_worst = 0.0, vec_worst = 0.0;
    criterion_spectrum(gap_worst, vec_worst);
    report(4, "truncated spectrum vs analytic support", gap_worst, 1e-4);
    report(4, "eigenvector relative residuals", vec_worst, 1e-6);

    double kernel_classical = 0.0;
    const double hermite_worst = criterion_hermite_case(kernel_classical);
    report(5, "oscillator reduction at beta = 1/2", hermite_worst, 1e-11);
    report(5, "classical Fourier kernel at beta = 1/2", kernel_classical, 1e-10);

    double unitarity_worst = 0.0;
    const double kernels_worst = criterion_kernels(unitarity_worst);
    report(6, "kernel closed forms vs defining series", kernels_worst, 1e-8);
    report(6, "kernel matrix unitarity (K=20)", unitarity_worst, 1e-5);

    double wave_limit = 0.0, kernel_limit = 0.0, gf = 0.0;
    criterion_limits(wave_limit, kernel_limit, gf);
    report(7, "wavefunction limit at gamma -> 1", wave_limit, 1e-3);
    report(7, "kernel limit at gamma -> 1", kernel_limit, 1e-2);
    report(7, "bilinear generating function", gf, 1e-9);

    report(8, "paraboson embedding (beta grid, N=40)", criterion_paraboson(), 1e-12);
    report(9, "figure panels normalized", criterion_figures(), 1e-6);

    if (failures == 0) std::printf("all acceptance criteria passed\n");
    else std::printf("%d acceptance criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
