#pragma once
// Pochhammer symbols, terminating hypergeometric series, and the Meixner
// and generalized Laguerre polynomials built from them.

#include <cmath>
#include <stdexcept>

namespace sl21osc::hyperfun {

inline double pochhammer(double base, int n) {
    if (n < 0) throw std::domain_error("pochhammer: n must be nonnegative");
    double r = 1.0;
    for (int j = 0; j < n; ++j) r *= base + j;
    return r;
}

inline double log_pochhammer(double base, int n) {
    if (base <= 0.0) throw std::domain_error("log_pochhammer: base must be positive");
    if (n < 0) throw std::domain_error("log_pochhammer: n must be nonnegative");
    return std::lgamma(base + n) - std::lgamma(base);
}

// 2F1(-n, a; b; z) summed in ascending j with a multiplicative term update.
inline double terminating_2f1(int n, double a, double b, double z) {
    if (n < 0) throw std::domain_error("terminating_2f1: n must be nonnegative");
    double sum = 1.0, term = 1.0;
    for (int j = 0; j < n; ++j) {
        double denom = b + j;
        if (denom == 0.0) throw std::domain_error("terminating_2f1: denominator parameter hits zero");
        term *= double(-n + j) * (a + j) * z / (denom * double(j + 1));
        sum += term;
    }
    return sum;
}

// 1F1(-n; b; z)
inline double terminating_1f1(int n, double b, double z) {
    if (n < 0) throw std::domain_error("terminating_1f1: n must be nonnegative");
    double sum = 1.0, term = 1.0;
    for (int j = 0; j < n; ++j) {
        double denom = b + j;
        if (denom == 0.0) throw std::domain_error("terminating_1f1: denominator parameter hits zero");
        term *= double(-n + j) * z / (denom * double(j + 1));
        sum += term;
    }
    return sum;
}

// Meixner polynomial M_n(k; beta, c) = 2F1(-n, -k; beta; 1 - 1/c).
// k may be any real; the series terminates through -n.
inline double meixner(int n, double k, double beta, double c) {
    if (!(c > 0.0 && c < 1.0)) throw std::domain_error("meixner: c must lie in (0,1)");
    if (!(beta > 0.0)) throw std::domain_error("meixner: beta must be positive");
    return terminating_2f1(n, -k, beta, 1.0 - 1.0 / c);
}

// Generalized Laguerre L_n^{(alpha)}(t), normalized so that
// L_n^{(alpha)}(t) = ((alpha+1)_n / n!) 1F1(-n; alpha+1; t).
// Evaluated by the three-term recurrence, which keeps full accuracy at
// degrees where the series form cancels catastrophically.
inline double laguerre(int n, double alpha, double t) {
    if (!(alpha > -1.0)) throw std::domain_error("laguerre: alpha must exceed -1");
    if (n < 0) throw std::domain_error("laguerre: n must be nonnegative");
    if (n == 0) return 1.0;
    double prev = 1.0;
    double cur = 1.0 + alpha - t;
    for (int m = 1; m < n; ++m) {
        double next = ((2.0 * m + 1.0 + alpha - t) * cur - (m + alpha) * prev) / double(m + 1);
        prev = cur;
        cur = next;
    }
    return cur;
}

} // namespace sl21osc::hyperfun
