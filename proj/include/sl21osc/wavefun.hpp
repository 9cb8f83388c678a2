#pragma once
// Normalized position wavefunctions Phi_n (and their i-power companions
// Psi_n): Meixner-polynomial closed forms on the discrete classes, Laguerre
// forms on the continuous one, Kronecker deltas in the degenerate case, the
// gamma -> 1 limit comparison, and the figure-data sampler.
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "hyperfun.hpp"
#include "quadrature.hpp"
#include "spectral.hpp"
#include "tailsum.hpp"

namespace sl21osc::wavefun {

using spectral::SpectralClass;
using spectral::SupportPoint;

// Phi_n at a point of the continuous spectrum (gamma = +-1)
inline double phi(const RepParams& p, int n, double x) {
    require_beta(p);
    if (n < 0) throw std::domain_error("phi: n must be nonnegative");
    if (p.gamma * p.gamma != 1.0)
        throw std::domain_error("phi: real-argument form requires the continuous class");
    const double beta = p.beta;
    const int m = n / 2;
    // (-gamma)^m: the gamma=-1 branch drops the alternating sign
    const double sgn = p.gamma > 0.0 ? (m % 2 == 0 ? 1.0 : -1.0) : 1.0;
    const double envelope =
        std::pow(std::abs(x), beta - 0.5) * std::exp(-0.5 * x * x);
    if (n % 2 == 0) {
        const double c = std::exp(0.5 * (std::lgamma(m + 1.0) - std::lgamma(m + beta)));
        return sgn * c * envelope * hyperfun::laguerre(m, beta - 1.0, x * x);
    }
    const double c = std::exp(0.5 * (std::lgamma(m + 1.0) - std::lgamma(m + beta + 1.0)));
    return sgn * c * envelope * x * hyperfun::laguerre(m, beta, x * x);
}

// Phi_n at a discrete support point
inline double phi(const RepParams& p, int n, const SupportPoint& pt) {
    require_beta(p);
    if (n < 0) throw std::domain_error("phi: n must be nonnegative");
    const SpectralClass cls = spectral::classify(p.gamma);
    if (pt.cls != cls) throw std::domain_error("phi: point class does not match gamma");
    if (cls == SpectralClass::Continuous) return phi(p, n, pt.x);
    const double beta = p.beta;
    const int m = n / 2;
    const int k = pt.k;
    using hyperfun::log_pochhammer;
    using hyperfun::meixner;
    if (cls == SpectralClass::Degenerate) {
        if (m != k) return 0.0;
        return (n % 2 == 0 ? 1.0 : double(pt.sign)) / std::sqrt(2.0);
    }
    if (p.gamma < 0.0)
        throw std::domain_error("phi: closed forms assume gamma > 0; negative gamma is "
                                "covered by the spectral layer");
    const double g = p.gamma, g2 = g * g;
    const double msgn = m % 2 == 0 ? 1.0 : -1.0;
    if (cls == SpectralClass::DiscreteInner) {
        const double lpt = 0.5 * (log_pochhammer(beta, k) - std::lgamma(k + 1.0))
                           + k * std::log(g) + 0.5 * beta * std::log1p(-g2)
                           - 0.5 * std::log(2.0);
        if (n % 2 == 0) {
            const double lvl = 0.5 * (log_pochhammer(beta, m) - std::lgamma(m + 1.0))
                               + m * std::log(g);
            return msgn * std::exp(lvl + lpt) * meixner(m, k, beta, g2);
        }
        const double lvl = 0.5 * (log_pochhammer(beta + 1.0, m) - std::lgamma(m + 1.0)
                                  - std::log(beta))
                           + m * std::log(g);
        return msgn * std::exp(lvl + lpt) * pt.x * meixner(m, k, beta + 1.0, g2);
    }
    // DiscreteOuter: unified sqrt(1 + delta_{k,0}) factor keeps k = 0 on the
    // same code path; the odd form shifts the Meixner argument to k - 1
    const double lpt = 0.5 * (log_pochhammer(beta, k) - std::lgamma(k + 1.0))
                       - (k + beta) * std::log(g) + 0.5 * beta * std::log(g2 - 1.0)
                       - 0.5 * std::log(2.0);
    if (n % 2 == 0) {
        const double dfac = k == 0 ? std::sqrt(2.0) : 1.0;
        const double lvl = 0.5 * (log_pochhammer(beta, m) - std::lgamma(m + 1.0))
                           - m * std::log(g);
        return msgn * dfac * std::exp(lvl + lpt) * meixner(m, k, beta, 1.0 / g2);
    }
    if (k == 0) return 0.0; // odd states vanish at x = 0
    const double lvl = 0.5 * (log_pochhammer(beta + 1.0, m) - std::lgamma(m + 1.0)
                              - std::log(beta))
                       - m * std::log(g);
    return msgn * std::exp(lvl + lpt) * pt.x * meixner(m, double(k - 1), beta + 1.0, 1.0 / g2);
}

inline std::complex<double> psi_factor(int n) {
    switch (n % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, -1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, 1.0};
    }
}

inline std::complex<double> psi(const RepParams& p, int n, const SupportPoint& pt) {
    return psi_factor(n) * phi(p, n, pt);
}
inline std::complex<double> psi(const RepParams& p, int n, double x) {
    return psi_factor(n) * phi(p, n, x);
}

// worst |sum of Phi_n^2 - 1| over n <= nmax
inline double normalization_residual(const RepParams& p, int nmax) {
    require_beta(p);
    const SpectralClass cls = spectral::classify(p.gamma);
    double worst = 0.0;
    for (int n = 0; n <= nmax; ++n) {
        double total;
        if (cls == SpectralClass::Continuous) {
            const double L = 8.0 + 2.0 * std::sqrt(p.beta + 2.0 * nmax);
            auto f = [&](double x) {
                double v = phi(p, n, x);
                return v * v;
            };
            total = detail::integrate_symmetric(f, L);
        } else if (cls == SpectralClass::Degenerate) {
            total = 0.0;
            for (int k = 0; k <= n / 2 + 2; ++k)
                for (int s : {1, -1}) {
                    double v = phi(p, n, spectral::support_point(p, s, k));
                    total += v * v;
                }
        } else {
            TailRule rule;
            rule.ratio = cls == SpectralClass::DiscreteInner ? p.gamma * p.gamma
                                                             : 1.0 / (p.gamma * p.gamma);
            rule.degree = n + p.beta;
            rule.min_terms = std::size_t(n + 4);
            rule.max_terms = 20000;
            auto term = [&](std::size_t k) {
                double acc = 0.0;
                for (int s : {1, -1}) {
                    if (cls == SpectralClass::DiscreteOuter && k == 0 && s == -1) continue;
                    double v = phi(p, n, spectral::support_point(p, s, int(k)));
                    acc += v * v;
                }
                return acc;
            };
            total = tail_sum<double>(term, rule);
        }
        worst = std::max(worst, std::abs(total - 1.0));
    }
    return worst;
}

struct LimitRow {
    double epsilon;
    double gamma;
    int k;
    double x_used;
    double discrete_value; // transported to the continuous normalization
    double continuous_value;
    double difference;
};

// gamma -> 1 comparison. The discrete wavefunctions live in l^2 while the
// limit lives in L^2(dx), so the raw values cannot converge pointwise; the
// coefficient p_n transported to the continuous normalization,
// p_n^(beta,gamma)(x_k) * sqrt(w_cont(x_k)/Gamma(beta)), does, and is what
// "redistributing the dots" means quantitatively.
inline std::vector<LimitRow> limit_gamma_to_one(double beta, int n, double x,
                                                const std::vector<double>& epsilons) {
    if (!(beta > 0.0)) throw std::domain_error("limit_gamma_to_one: beta must be positive");
    if (x == 0.0 && n % 2 != 0)
        throw std::domain_error("limit_gamma_to_one: odd states vanish identically at x = 0");
    std::vector<LimitRow> rows;
    const double lognorm = std::lgamma(beta);
    for (double eps : epsilons) {
        if (!(eps > 0.0 && eps < 1.0))
            throw std::domain_error("limit_gamma_to_one: epsilons must lie in (0,1)");
        for (double gamma : {1.0 - eps, 1.0 + eps}) {
            RepParams p{beta, gamma};
            SupportPoint pt = spectral::nearest_support(p, x);
            double pn = spectral::pn_recurrence(p, pt.x, n)[n];
            double transported =
                pn * std::sqrt(spectral::continuous_weight(RepParams{beta, 1.0}, pt.x)
                               / std::exp(lognorm));
            double cont = phi(RepParams{beta, 1.0}, n, pt.x);
            rows.push_back({eps, gamma, pt.k, pt.x, transported, cont,
                            std::abs(transported - cont)});
        }
    }
    return rows;
}

struct FigureRow {
    double gamma;
    int n;
    double x;
    double value;
    SpectralClass cls;
};

// samples for the wavefunction figures: a uniform grid on the continuous
// class, every support point inside the window otherwise
inline std::vector<FigureRow> figure_data(double beta, const std::vector<double>& gammas,
                                          const std::vector<int>& n_values, double window) {
    if (!(beta > 0.0)) throw std::domain_error("figure_data: beta must be positive");
    if (!(window > 0.0)) throw std::domain_error("figure_data: window must be positive");
    std::vector<FigureRow> rows;
    const double step = 0.05;
    const int half = int(std::floor(window / step + 0.5));
    for (double gamma : gammas) {
        RepParams p{beta, gamma};
        const SpectralClass cls = spectral::classify(gamma);
        for (int n : n_values) {
            if (cls == SpectralClass::Continuous) {
                for (int j = -half; j <= half; ++j) {
                    double x = j * step;
                    rows.push_back({gamma, n, x, phi(p, n, x), cls});
                }
            } else {
                std::vector<SupportPoint> pts;
                for (int k = 0;; ++k) {
                    SupportPoint pt = spectral::support_point(p, 1, k);
                    if (pt.x > window) break;
                    pts.push_back(pt);
                    if (pt.x != 0.0) pts.push_back(spectral::support_point(p, -1, k));
                }
                std::sort(pts.begin(), pts.end(),
                          [](const SupportPoint& a, const SupportPoint& b) { return a.x < b.x; });
                for (const auto& pt : pts) rows.push_back({gamma, n, pt.x, phi(p, n, pt), cls});
            }
        }
    }
    return rows;
}

} // namespace sl21osc::wavefun
