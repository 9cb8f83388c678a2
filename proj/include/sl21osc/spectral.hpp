#pragma once
// Spectral theory of the position operator: its Jacobi matrix, the four
// support classes cut out by gamma, the orthogonality weights and
// normalization constants, and the polynomial eigenvector components p_n
// by recurrence and by closed form.
#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "hyperfun.hpp"
#include "quadrature.hpp"
#include "rep_algebra.hpp"
#include "tailsum.hpp"

namespace sl21osc::spectral {

enum class SpectralClass { DiscreteOuter, Continuous, DiscreteInner, Degenerate };

inline const char* class_name(SpectralClass c) {
    switch (c) {
    case SpectralClass::DiscreteOuter: return "discrete_outer";
    case SpectralClass::Continuous: return "continuous";
    case SpectralClass::DiscreteInner: return "discrete_inner";
    case SpectralClass::Degenerate: return "degenerate";
    }
    return "?";
}

inline SpectralClass classify(double gamma) {
    if (gamma == 0.0) return SpectralClass::Degenerate;
    if (gamma * gamma == 1.0) return SpectralClass::Continuous;
    return gamma * gamma > 1.0 ? SpectralClass::DiscreteOuter : SpectralClass::DiscreteInner;
}

struct SupportPoint {
    SpectralClass cls;
    int sign; // +1 or -1; the single x=0 outer point carries +1
    int k;
    double x;
};

// off-diagonal of the Jacobi matrix coupling levels j and j+1:
// sqrt(beta + j/2) below an even level, gamma*sqrt((j+1)/2) below an odd one
inline double jacobi_offdiagonal(const RepParams& p, int j) {
    return (j % 2 == 0) ? std::sqrt(p.beta + j / 2) : p.gamma * std::sqrt((j + 1) / 2);
}

inline rep::TruncatedOperator jacobi_matrix(const RepParams& p, int N) {
    return rep::build_generator(rep::Gen::QHat, p, N);
}

struct DeterminacyResult {
    bool determinate;
    double partial_sum;
};

// Carleman condition: the reciprocal off-diagonals Sum 1/sqrt(beta+n) (+
// Sum 1/(|gamma| sqrt(n)) when gamma != 0) diverge, so the moment problem is
// determinate for every parameter choice. The partial sum is evidence only.
inline DeterminacyResult determinacy_check(const RepParams& p, int terms) {
    require_beta(p);
    if (terms < 1) throw std::domain_error("determinacy_check: need terms >= 1");
    double s = 0.0;
    for (int n = 1; n <= terms; ++n) {
        s += 1.0 / std::sqrt(p.beta + n);
        if (p.gamma != 0.0) s += 1.0 / (std::abs(p.gamma) * std::sqrt(double(n)));
    }
    return {true, s};
}

inline double support_x(const RepParams& p, int sign, int k) {
    require_beta(p);
    if (k < 0) throw std::domain_error("support_x: k must be nonnegative");
    if (sign != 1 && sign != -1) throw std::domain_error("support_x: sign must be +-1");
    const double g2 = p.gamma * p.gamma;
    switch (classify(p.gamma)) {
    case SpectralClass::DiscreteOuter: return sign * std::sqrt(g2 - 1.0) * std::sqrt(double(k));
    case SpectralClass::DiscreteInner: return sign * std::sqrt(1.0 - g2) * std::sqrt(p.beta + k);
    case SpectralClass::Degenerate: return sign * std::sqrt(p.beta + k);
    case SpectralClass::Continuous: break;
    }
    throw std::domain_error("support_x: continuous spectrum has no indexed points");
}

inline SupportPoint support_point(const RepParams& p, int sign, int k) {
    return SupportPoint{classify(p.gamma), k == 0 && classify(p.gamma) == SpectralClass::DiscreteOuter ? 1 : sign,
                        k, support_x(p, sign, k)};
}

inline std::vector<SupportPoint> support_points(const RepParams& p, int kmax) {
    const SpectralClass cls = classify(p.gamma);
    if (cls == SpectralClass::Continuous)
        throw std::domain_error("support_points: continuous spectrum; sample the real line directly");
    std::vector<SupportPoint> pts;
    for (int k = 0; k <= kmax; ++k) {
        pts.push_back(support_point(p, 1, k));
        if (!(cls == SpectralClass::DiscreteOuter && k == 0)) pts.push_back(support_point(p, -1, k));
    }
    return pts;
}

// discrete point mass at x_k, or the density exp(-x^2)|x|^(2 beta - 1) on
// the continuous class
inline double weight(const RepParams& p, const SupportPoint& pt) {
    require_beta(p);
    const double beta = p.beta;
    const double ag = std::abs(p.gamma);
    using hyperfun::log_pochhammer;
    switch (pt.cls) {
    case SpectralClass::DiscreteOuter:
        if (pt.k == 0) return 1.0;
        return 0.5 * std::exp(log_pochhammer(beta, pt.k) - std::lgamma(pt.k + 1.0)
                              - 2.0 * pt.k * std::log(ag));
    case SpectralClass::DiscreteInner:
        return 0.5 * std::exp(log_pochhammer(beta, pt.k) - std::lgamma(pt.k + 1.0)
                              + 2.0 * pt.k * std::log(ag));
    case SpectralClass::Degenerate:
        return 0.5;
    case SpectralClass::Continuous:
        return std::exp(-pt.x * pt.x) * std::pow(std::abs(pt.x), 2.0 * beta - 1.0);
    }
    return 0.0;
}

inline double continuous_weight(const RepParams& p, double x) {
    return weight(p, SupportPoint{SpectralClass::Continuous, x >= 0 ? 1 : -1, 0, x});
}

// total mass of the orthogonality measure, per class
inline double norm_constant(const RepParams& p) {
    require_beta(p);
    const double g2 = p.gamma * p.gamma;
    switch (classify(p.gamma)) {
    case SpectralClass::DiscreteOuter: return std::pow(g2 / (g2 - 1.0), p.beta);
    case SpectralClass::Continuous: return std::tgamma(p.beta);
    case SpectralClass::DiscreteInner: return std::pow(1.0 - g2, -p.beta);
    case SpectralClass::Degenerate: return 1.0;
    }
    return 1.0;
}

// nearest support point to x (discrete classes); ties resolved downward
inline SupportPoint nearest_support(const RepParams& p, double x) {
    const SpectralClass cls = classify(p.gamma);
    const double g2 = p.gamma * p.gamma;
    double raw;
    switch (cls) {
    case SpectralClass::DiscreteOuter: raw = x * x / (g2 - 1.0); break;
    case SpectralClass::DiscreteInner: raw = x * x / (1.0 - g2) - p.beta; break;
    case SpectralClass::Degenerate: raw = x * x - p.beta; break;
    default: throw std::domain_error("nearest_support: continuous spectrum");
    }
    const int sign = x < 0.0 ? -1 : 1;
    const double ax = std::abs(x);
    long lo = std::max(0L, static_cast<long>(std::floor(raw)));
    long hi = std::max(0L, static_cast<long>(std::ceil(raw)));
    SupportPoint best = support_point(p, sign, int(lo));
    if (hi != lo) {
        SupportPoint alt = support_point(p, sign, int(hi));
        if (std::abs(std::abs(alt.x) - ax) < std::abs(std::abs(best.x) - ax)) best = alt;
    }
    return best;
}

inline bool on_support(const RepParams& p, double x, double tol = 1e-9) {
    SupportPoint pt = nearest_support(p, x);
    return std::abs(pt.x - x) <= tol * (1.0 + std::abs(x));
}

namespace detail {
// gamma = 0 decouples the recurrence; the eigenvector collapses to a
// Kronecker delta pair at x = +-sqrt(beta + k)
inline int degenerate_index(const RepParams& p, double x) {
    long k = std::lround(x * x - p.beta);
    if (k < 0 || std::abs(x * x - p.beta - double(k)) > 1e-9 * (1.0 + x * x))
        throw std::domain_error("degenerate class: x is off the spectrum");
    return int(k);
}

// forward three-term recurrence carried in extended precision: at spectral
// points the wanted solution decays while forward errors ride the growing one
inline void pn_recurrence_ld(const RepParams& p, long double x, int nmax,
                             std::vector<double>& out) {
    const auto offdiag = [&p](int j) -> long double {
        if (j % 2 == 0) return sqrtl((long double)p.beta + (long double)(j / 2));
        return (long double)p.gamma * sqrtl((long double)((j + 1) / 2));
    };
    std::vector<long double> w(nmax + 1);
    w[0] = 1.0L;
    long double prev = 0.0L;
    for (int j = 0; j < nmax; ++j) {
        long double next = (x * w[j] - (j > 0 ? offdiag(j - 1) * prev : 0.0L)) / offdiag(j);
        prev = w[j];
        w[j + 1] = next;
    }
    for (int n = 0; n <= nmax; ++n) out[n] = (double)w[n];
}
} // namespace detail

// p_0..p_nmax at x by the three-term recurrence (forward; the polynomials
// are the dominant solution at spectral points)
inline std::vector<double> pn_recurrence(const RepParams& p, double x, int nmax) {
    require_beta(p);
    if (nmax < 0) throw std::domain_error("pn_recurrence: nmax must be nonnegative");
    std::vector<double> out(nmax + 1);
    if (classify(p.gamma) == SpectralClass::Degenerate) {
        const int k = detail::degenerate_index(p, x);
        const double s = x >= 0.0 ? 1.0 : -1.0;
        for (int n = 0; n <= nmax; ++n)
            out[n] = (n / 2 == k) ? (n % 2 == 0 ? 1.0 : s) : 0.0;
        return out;
    }
    detail::pn_recurrence_ld(p, (long double)x, nmax, out);
    return out;
}

// p_0..p_nmax at a spectral point; the abscissa is rebuilt in extended
// precision from the index because the polynomial's x-sensitivity near the
// bottom of the support amplifies even one rounding of x
inline std::vector<double> pn_recurrence(const RepParams& p, const SupportPoint& pt, int nmax) {
    require_beta(p);
    if (nmax < 0) throw std::domain_error("pn_recurrence: nmax must be nonnegative");
    if (pt.cls != classify(p.gamma))
        throw std::domain_error("pn_recurrence: point class does not match gamma");
    if (pt.cls == SpectralClass::Continuous || pt.cls == SpectralClass::Degenerate)
        return pn_recurrence(p, pt.x, nmax);
    const long double g = p.gamma, b = p.beta;
    long double xl = pt.cls == SpectralClass::DiscreteInner
                         ? sqrtl(1.0L - g * g) * sqrtl(b + (long double)pt.k)
                         : sqrtl(g * g - 1.0L) * sqrtl((long double)pt.k);
    if (pt.sign < 0) xl = -xl;
    std::vector<double> out(nmax + 1);
    detail::pn_recurrence_ld(p, xl, nmax, out);
    return out;
}

// closed forms: terminating 2F1 off the continuous class, terminating 1F1
// on it, Kronecker deltas in the degenerate case
inline double pn_closed_form(const RepParams& p, double x, int n) {
    require_beta(p);
    if (n < 0) throw std::domain_error("pn_closed_form: n must be nonnegative");
    using namespace hyperfun;
    const double beta = p.beta, gamma = p.gamma;
    const int m = n / 2;
    const bool even = n % 2 == 0;
    if (classify(p.gamma) == SpectralClass::Degenerate) {
        const int k = detail::degenerate_index(p, x);
        if (m != k) return 0.0;
        return even ? 1.0 : (x >= 0.0 ? 1.0 : -1.0);
    }
    const double lfac = even ? 0.5 * (log_pochhammer(beta, m) - std::lgamma(m + 1.0))
                             : 0.5 * (log_pochhammer(beta + 1.0, m) - std::lgamma(m + 1.0)
                                      - std::log(beta));
    if (gamma * gamma == 1.0) {
        // 1F1(-m; b; t) = m!/(b)_m L_m^{(b-1)}(t); the recurrence form keeps
        // full accuracy where the alternating series cancels
        const double sgn = std::pow(-gamma, m);
        const double l = even ? laguerre(m, beta - 1.0, x * x) : laguerre(m, beta, x * x);
        const double lfull = even ? 0.5 * (std::lgamma(m + 1.0) - log_pochhammer(beta, m))
                                  : 0.5 * (std::lgamma(m + 1.0)
                                           - log_pochhammer(beta + 1.0, m) - std::log(beta));
        return (even ? 1.0 : x) * sgn * std::exp(lfull) * l;
    }
    const double g2 = gamma * gamma;
    const double a = even ? x * x / (1.0 - g2) : x * x / (1.0 - g2) + 1.0;
    const double b = even ? beta : beta + 1.0;
    double sgn, f;
    if (g2 < 1.0) {
        // Pfaff-transformed series: the gamma^{+m} prefactor decays, so the
        // sum carries no cancellation amplification on the inner class
        sgn = std::pow(-gamma, m);
        f = terminating_2f1(m, b - a, b, (g2 - 1.0) / g2);
    } else {
        sgn = std::pow(-gamma, -m);
        f = terminating_2f1(m, a, b, 1.0 - g2);
    }
    return (even ? 1.0 : x) * sgn * std::exp(lfac) * f;
}

// closed form at a spectral point: the 2F1 numerator parameter collapses to
// the integer -k there, so it is substituted exactly instead of through the
// rounded x^2/(1-gamma^2) (whose error the parameter derivative amplifies)
inline double pn_closed_form(const RepParams& p, const SupportPoint& pt, int n) {
    require_beta(p);
    if (n < 0) throw std::domain_error("pn_closed_form: n must be nonnegative");
    if (pt.cls != classify(p.gamma))
        throw std::domain_error("pn_closed_form: point class does not match gamma");
    if (pt.cls == SpectralClass::Continuous || pt.cls == SpectralClass::Degenerate)
        return pn_closed_form(p, pt.x, n);
    using namespace hyperfun;
    const double beta = p.beta, g2 = p.gamma * p.gamma;
    const int m = n / 2;
    const bool even = n % 2 == 0;
    const double lfac = even ? 0.5 * (log_pochhammer(beta, m) - std::lgamma(m + 1.0))
                             : 0.5 * (log_pochhammer(beta + 1.0, m) - std::lgamma(m + 1.0)
                                      - std::log(beta));
    double sgn, f;
    if (g2 < 1.0) {
        sgn = std::pow(-p.gamma, m);
        f = even ? meixner(m, pt.k, beta, g2) : meixner(m, pt.k, beta + 1.0, g2);
    } else {
        if (!even && pt.k == 0) return 0.0;
        sgn = std::pow(-p.gamma, -m);
        f = even ? meixner(m, pt.k, beta, 1.0 / g2)
                 : meixner(m, pt.k - 1, beta + 1.0, 1.0 / g2);
    }
    return (even ? 1.0 : pt.x) * sgn * std::exp(lfac) * f;
}

// max_{m,n <= nmax} |Gram_{mn}/Norm - delta_{mn}|, discrete sums by the tail
// rule, continuous by quadrature
inline double orthogonality_residual(const RepParams& p, int nmax) {
    require_beta(p);
    const SpectralClass cls = classify(p.gamma);
    const double norm = norm_constant(p);
    const int count = nmax + 1;
    Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(count, count);
    if (cls == SpectralClass::Continuous) {
        const double L = 8.0 + 2.0 * std::sqrt(p.beta + 2.0 * nmax);
        for (int m = 0; m < count; ++m)
            for (int n = m; n < count; ++n) {
                if ((m + n) % 2 != 0) continue; // odd parity integrates to zero
                auto f = [&](double x) {
                    std::vector<double> pv = pn_recurrence(p, x, std::max(m, n));
                    return continuous_weight(p, x) * pv[m] * pv[n];
                };
                double v = sl21osc::detail::integrate_symmetric(f, L);
                gram(m, n) = gram(n, m) = v;
            }
    } else if (cls == SpectralClass::Degenerate) {
        for (int k = 0; k <= nmax / 2; ++k)
            for (int s : {1, -1}) {
                SupportPoint pt = support_point(p, s, k);
                std::vector<double> pv = pn_recurrence(p, pt.x, nmax);
                for (int m = 0; m < count; ++m)
                    for (int n = 0; n < count; ++n) gram(m, n) += 0.5 * pv[m] * pv[n];
            }
    } else {
        const double ratio = cls == SpectralClass::DiscreteInner
                                 ? p.gamma * p.gamma
                                 : 1.0 / (p.gamma * p.gamma);
        for (int m = 0; m < count; ++m)
            for (int n = m; n < count; ++n) {
                TailRule rule;
                rule.ratio = ratio;
                rule.degree = m + n + p.beta;
                rule.eps = 1e-18;
                rule.min_terms = std::size_t(nmax + 4);
                rule.max_terms = 20000;
                auto term = [&](std::size_t k) {
                    double total = 0.0;
                    for (int s : {1, -1}) {
                        SupportPoint pt = support_point(p, s, int(k));
                        if (cls == SpectralClass::DiscreteOuter && k == 0 && s == -1) continue;
                        std::vector<double> pv = pn_recurrence(p, pt.x, std::max(m, n));
                        total += weight(p, pt) * pv[m] * pv[n];
                    }
                    return total;
                };
                double v = tail_sum<double>(term, rule);
                gram(m, n) = gram(n, m) = v;
            }
    }
    double resid = 0.0;
    for (int m = 0; m < count; ++m)
        for (int n = 0; n < count; ++n)
            resid = std::max(resid, std::abs(gram(m, n) / norm - (m == n ? 1.0 : 0.0)));
    return resid;
}

struct SpectrumMatch {
    double x;
    double eigenvalue;
    double gap;
};

// eigenvalues of the truncated Jacobi matrix against the analytic support:
// for the `count` smallest-|x| points, the nearest eigenvalue and its gap
inline std::vector<SpectrumMatch> truncated_spectrum_crosscheck(const RepParams& p, int N,
                                                                int count) {
    require_beta(p);
    if (classify(p.gamma) == SpectralClass::Continuous)
        throw std::domain_error("truncated_spectrum_crosscheck: continuous spectrum");
    if (count < 1 || N < 2 * count + 2)
        throw std::domain_error("truncated_spectrum_crosscheck: need N well above 2*count");
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(N);
    Eigen::VectorXd sub(N - 1);
    for (int j = 0; j + 1 < N; ++j) sub(j) = jacobi_offdiagonal(p, j);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    const Eigen::VectorXd& ev = solver.eigenvalues();
    std::vector<SupportPoint> pts;
    for (int k = 0; k <= count; ++k) {
        pts.push_back(support_point(p, 1, k));
        if (!(classify(p.gamma) == SpectralClass::DiscreteOuter && k == 0))
            pts.push_back(support_point(p, -1, k));
    }
    std::sort(pts.begin(), pts.end(),
              [](const SupportPoint& a, const SupportPoint& b) {
                  return std::abs(a.x) != std::abs(b.x) ? std::abs(a.x) < std::abs(b.x)
                                                        : a.x < b.x;
              });
    pts.resize(std::min<std::size_t>(pts.size(), std::size_t(count)));
    std::vector<SpectrumMatch> out;
    for (const auto& pt : pts) {
        double best = std::numeric_limits<double>::infinity(), at = 0.0;
        for (int i = 0; i < N; ++i)
            if (std::abs(ev(i) - pt.x) < best) { best = std::abs(ev(i) - pt.x); at = ev(i); }
        out.push_back({pt.x, at, best});
    }
    return out;
}

// relative residual of the formal eigenvector (p_0(x),...,p_{N-1}(x)) under
// the truncated Jacobi matrix, ignoring the last row where truncation bites
inline double eigenvector_residual(const RepParams& p, int sign, int k, int N) {
    SupportPoint pt = support_point(p, sign, k);
    std::vector<double> pv = pn_recurrence(p, pt.x, N - 1);
    Eigen::VectorXd v = Eigen::Map<Eigen::VectorXd>(pv.data(), N);
    Eigen::VectorXd r = Eigen::VectorXd::Zero(N);
    for (int i = 0; i < N; ++i) {
        double acc = -pt.x * v(i);
        if (i > 0) acc += jacobi_offdiagonal(p, i - 1) * v(i - 1);
        if (i + 1 < N) acc += jacobi_offdiagonal(p, i) * v(i + 1);
        r(i) = acc;
    }
    return r.head(N - 1).norm() / v.norm();
}

} // namespace sl21osc::spectral
