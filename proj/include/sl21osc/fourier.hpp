#pragma once
// Integral/sum kernels of the deformed Fourier transform: closed forms per
// spectral class, the defining series as an independent oracle, the Meixner
// bilinear generating function, the discrete unitarity (Parseval) check, and
// the gamma -> 1 kernel limit.
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "hyperfun.hpp"
#include "spectral.hpp"
#include "tailsum.hpp"
#include "wavefun.hpp"

namespace sl21osc::fourier {

using spectral::SpectralClass;
using spectral::SupportPoint;
using Complex = std::complex<double>;

namespace detail {

// 0F1(; b; z), ascending series; |z| stays modest for the grids we use
inline double hyp0f1(double b, double z) {
    double sum = 1.0, term = 1.0;
    for (int j = 0; j < 400; ++j) {
        term *= z / ((b + j) * (j + 1.0));
        sum += term;
        if (std::abs(term) < 1e-18 * std::max(1.0, std::abs(sum)) && j > 3) break;
    }
    return sum;
}

// terminating 2F1(-k, -l; b; z) summed over the smaller index
inline double sym2f1(int k, int l, double b, double z) {
    int n = std::min(k, l);
    double a = -double(std::max(k, l));
    return hyperfun::terminating_2f1(n, a, b, z);
}

} // namespace detail

// kernel on the continuous class (gamma = 1)
inline Complex kernel_closed(const RepParams& p, double x, double y) {
    require_beta(p);
    if (p.gamma != 1.0)
        throw std::domain_error("kernel_closed: real-argument form requires gamma = 1");
    const double beta = p.beta;
    const double xy = x * y;
    const double z = -0.25 * xy * xy;
    const double pref = std::pow(std::abs(xy), beta - 0.5)
                        / (std::pow(2.0, beta) * std::tgamma(beta));
    return pref * Complex(detail::hyp0f1(beta, z),
                          -xy / (2.0 * beta) * detail::hyp0f1(beta + 1.0, z));
}

// kernel between two discrete support points (inner, outer, or degenerate)
inline Complex kernel_closed(const RepParams& p, const SupportPoint& px,
                             const SupportPoint& py) {
    require_beta(p);
    const SpectralClass cls = spectral::classify(p.gamma);
    if (px.cls != cls || py.cls != cls)
        throw std::domain_error("kernel_closed: point class does not match gamma");
    if (cls == SpectralClass::Continuous) return kernel_closed(p, px.x, py.x);
    const double beta = p.beta;
    const int k = px.k, l = py.k;
    if (cls == SpectralClass::Degenerate) {
        if (k != l) return {0.0, 0.0};
        const double s = (k % 2 == 0 ? 1.0 : -1.0) * 0.5;
        return Complex(s, -s * px.sign * py.sign);
    }
    if (p.gamma < 0.0)
        throw std::domain_error("kernel_closed: closed forms assume gamma > 0");
    const double g = p.gamma, g2 = g * g;
    const double zs = -(g2 - 1.0) * (g2 - 1.0) / (4.0 * g2);
    using hyperfun::log_pochhammer;
    const double lshared = (k + l) * std::log(2.0 * g / (1.0 + g2))
                           + 0.5 * (log_pochhammer(beta, k) - std::lgamma(k + 1.0)
                                    + log_pochhammer(beta, l) - std::lgamma(l + 1.0));
    if (cls == SpectralClass::DiscreteInner) {
        const double lp = lshared + beta * std::log((1.0 - g2) / (1.0 + g2));
        const double even = detail::sym2f1(k, l, beta, zs);
        const double odd = px.x * py.x / (beta * (1.0 + g2)) * detail::sym2f1(k, l, beta + 1.0, zs);
        return 0.5 * std::exp(lp) * Complex(even, -odd);
    }
    const double lp = lshared + beta * std::log((g2 - 1.0) / (1.0 + g2));
    const double dfac = std::sqrt((k == 0 ? 2.0 : 1.0) * (l == 0 ? 2.0 : 1.0));
    const double even = detail::sym2f1(k, l, beta, zs);
    const double odd = (k == 0 || l == 0)
                           ? 0.0
                           : px.x * py.x * (1.0 + g2) / (4.0 * beta * g2)
                                 * detail::sym2f1(k - 1, l - 1, beta + 1.0, zs);
    return 0.5 * dfac * std::exp(lp) * Complex(even, -odd);
}

struct SeriesResult {
    Complex value;
    double tail_estimate;
    int terms;
};

namespace detail {

// Iterated pairwise averaging of the partial sums. On the discrete classes
// the sums converge geometrically and averaging is a no-op in the limit; on
// the continuous class the raw sums oscillate with an O(n^{-1/2}) envelope
// and repeated averaging recovers the Abel limit to near machine precision.
inline SeriesResult average_partial_sums(std::vector<Complex> s) {
    while (s.size() > 8) {
        for (std::size_t i = 0; i + 1 < s.size(); ++i) s[i] = 0.5 * (s[i] + s[i + 1]);
        s.pop_back();
    }
    return {s.back(), std::abs(s[s.size() - 1] - s[s.size() - 2]), 0};
}

} // namespace detail

template <typename Point>
inline SeriesResult kernel_series(const RepParams& p, const Point& px, const Point& py,
                                  int nmax = 200) {
    require_beta(p);
    if (nmax < 8) throw std::domain_error("kernel_series: need nmax >= 8");
    std::vector<Complex> partial(nmax + 1);
    Complex acc{0.0, 0.0};
    for (int n = 0; n <= nmax; ++n) {
        acc += wavefun::psi_factor(n) * (wavefun::phi(p, n, px) * wavefun::phi(p, n, py));
        partial[n] = acc;
    }
    SeriesResult r = detail::average_partial_sums(std::move(partial));
    r.terms = nmax + 1;
    return r;
}

// |sum_n ((b)_n/n!) z^n M_n(xi) M_n(xi') - closed form| for the Meixner
// bilinear generating function; the closed form's 2F1 terminates in xi
inline double bilinear_gf_check(double b, double c, double z, int xi, int xi2, int nmax) {
    if (!(b > 0.0)) throw std::domain_error("bilinear_gf_check: b must be positive");
    if (!(c > 0.0 && c < 1.0)) throw std::domain_error("bilinear_gf_check: c must lie in (0,1)");
    if (!(std::abs(z) < c)) throw std::domain_error("bilinear_gf_check: need |z| < c");
    if (xi < 0 || xi2 < 0) throw std::domain_error("bilinear_gf_check: xi must be nonnegative");
    double lhs = 0.0, factor = 1.0;
    TailRule rule;
    rule.ratio = std::abs(z);
    rule.degree = double(xi + xi2);
    rule.max_terms = std::size_t(nmax + 1);
    TailSummary summary;
    lhs = tail_sum<double>(
        [&](std::size_t n) {
            if (n > 0) factor *= z * (b + (double(n) - 1.0)) / double(n);
            return factor * hyperfun::meixner(int(n), double(xi), b, c)
                   * hyperfun::meixner(int(n), double(xi2), b, c);
        },
        rule, &summary);
    const double arg = z * (1.0 - c) * (1.0 - c) / ((z - c) * (z - c));
    const double rhs = std::pow(1.0 - z, -b - xi - xi2) * std::pow(1.0 - z / c, double(xi + xi2))
                       * detail::sym2f1(xi, xi2, b, arg);
    return std::abs(lhs - rhs);
}

// column range for the Parseval sums below: the summand |K(x_r, x_l)|^2 is
// enveloped by q^l l^{2 kmax} with q = (2|gamma|/(1+gamma^2))^2 < 1, which
// peaks near l = 2 kmax/|ln q|; walk past the peak until the envelope has
// dropped by e^36, capped to keep near-|gamma|=1 parameters from exploding
inline int unitarity_columns(const RepParams& p, int kmax) {
    const double g = std::abs(p.gamma);
    if (g == 0.0) return kmax + 5;
    const double alpha = -2.0 * std::log(2.0 * g / (1.0 + g * g));
    const double k2 = 2.0 * std::max(1, kmax);
    const auto h = [&](double l) { return -alpha * l + k2 * std::log(l); };
    const double lstar = std::max(double(kmax + 5), k2 / alpha);
    double L = lstar;
    while (h(L) > h(lstar) - 36.0 && L < 1e5) L *= 1.25;
    return int(L) + 25;
}

// Parseval defect of the kernel matrix: rows at the support points with
// index <= kmax, columns summed far enough out (the transform spreads a
// low slot across many columns, so the column range must dominate kmax)
inline double unitarity_residual(const RepParams& p, int kmax) {
    require_beta(p);
    const SpectralClass cls = spectral::classify(p.gamma);
    if (cls == SpectralClass::Continuous)
        throw std::domain_error("unitarity_residual: discrete classes only");
    std::vector<SupportPoint> rows = spectral::support_points(p, kmax);
    std::vector<SupportPoint> cols = spectral::support_points(p, unitarity_columns(p, kmax));
    Eigen::MatrixXcd U(rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c)
            U(r, c) = kernel_closed(p, rows[r], cols[c]);
    Eigen::MatrixXcd gram = U * U.adjoint();
    gram -= Eigen::MatrixXcd::Identity(rows.size(), rows.size());
    return gram.cwiseAbs().maxCoeff();
}

struct KernelLimitRow {
    double epsilon;
    double gamma;
    int k, l;
    double x_used, y_used;
    Complex discrete_value; // transported to the continuous normalization
    Complex continuous_value;
    double difference;
};

// gamma -> 1 limit of the kernel at the support points nearest (x, y),
// with the same density transport as the wavefunction limit applied to
// both arguments
inline std::vector<KernelLimitRow> kernel_limit_check(double beta, double x, double y,
                                                      const std::vector<double>& epsilons) {
    if (!(beta > 0.0)) throw std::domain_error("kernel_limit_check: beta must be positive");
    if (x == 0.0 || y == 0.0)
        throw std::domain_error("kernel_limit_check: x and y must be nonzero");
    std::vector<KernelLimitRow> rows;
    const double lognorm = std::lgamma(beta);
    for (double eps : epsilons) {
        if (!(eps > 0.0 && eps < 1.0))
            throw std::domain_error("kernel_limit_check: epsilons must lie in (0,1)");
        for (double gamma : {1.0 - eps, 1.0 + eps}) {
            RepParams p{beta, gamma};
            SupportPoint px = spectral::nearest_support(p, x);
            SupportPoint py = spectral::nearest_support(p, y);
            const double norm_disc = spectral::norm_constant(p);
            auto transport = [&](const SupportPoint& pt) {
                return std::sqrt(spectral::continuous_weight(RepParams{beta, 1.0}, pt.x)
                                 * norm_disc
                                 / (std::exp(lognorm) * spectral::weight(p, pt)));
            };
            Complex kd = kernel_closed(p, px, py) * transport(px) * transport(py);
            Complex kc = kernel_closed(RepParams{beta, 1.0}, px.x, py.x);
            rows.push_back({eps, gamma, px.k, py.k, px.x, py.x, kd, kc, std::abs(kd - kc)});
        }
    }
    return rows;
}

} // namespace sl21osc::fourier
