#pragma once
// Named-residual reports shared by the verification routines.
#include <string>
#include <utility>
#include <vector>

namespace sl21osc {

struct CheckReport {
    std::vector<std::pair<std::string, double>> residuals;

    void add(std::string name, double residual) {
        residuals.emplace_back(std::move(name), residual);
    }
    void merge(const CheckReport& other) {
        residuals.insert(residuals.end(), other.residuals.begin(), other.residuals.end());
    }
    double max_residual() const {
        double m = 0.0;
        for (const auto& [name, r] : residuals) m = std::max(m, r);
        return m;
    }
    bool all_within(double tol) const { return max_residual() <= tol; }
};

} // namespace sl21osc
