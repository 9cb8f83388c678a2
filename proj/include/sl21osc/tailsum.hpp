#pragma once
// Truncation of infinite sums whose terms decay geometrically with a
// polynomial prefactor (discrete orthogonality weights, kernel series).

#include <cmath>
#include <complex>
#include <cstddef>
#include <algorithm>

namespace sl21osc {

struct TailRule {
    // envelope c^j * j^d of the terms; ratio <= 0 disables the envelope gate
    double ratio = 0.0;
    double degree = 0.0;
    double eps = 1e-18;
    std::size_t min_terms = 8;
    std::size_t max_terms = 100000;

    bool envelope_decreasing(std::size_t j) const {
        if (ratio <= 0.0) return true;
        if (ratio >= 1.0) return false;
        if (j == 0) return degree <= 0.0;
        return std::log(ratio) + degree * std::log1p(1.0 / double(j)) < 0.0;
    }
};

struct TailSummary {
    std::size_t terms_used = 0;
    bool converged = false;
};

// Sums term(0), term(1), ... and stops once the envelope is past its
// turnover and two consecutive terms fall below eps times the largest
// partial-sum magnitude so far. Two terms are required because parity
// makes alternate terms vanish identically at symmetric points.
template <typename T, typename Term>
T tail_sum(Term&& term, const TailRule& rule = {}, TailSummary* summary = nullptr) {
    T total{};
    double run_max = 0.0;
    int small_streak = 0;
    std::size_t j = 0;
    for (; j < rule.max_terms; ++j) {
        T t = term(j);
        total += t;
        run_max = std::max(run_max, std::abs(total));
        if (std::abs(t) < rule.eps * std::max(run_max, 1e-300) && rule.envelope_decreasing(j)) {
            if (++small_streak >= 2 && j + 1 >= rule.min_terms) {
                if (summary) *summary = {j + 1, true};
                return total;
            }
        } else {
            small_streak = 0;
        }
    }
    if (summary) *summary = {j, false};
    return total;
}

} // namespace sl21osc
