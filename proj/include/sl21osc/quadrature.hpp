#pragma once
// Integration over a symmetric interval with an integrable singularity
// allowed at the origin (the continuous weight carries |x|^{2 beta - 1}).
#include <boost/math/quadrature/tanh_sinh.hpp>

namespace sl21osc::detail {

// integral of f over [-L, L], split at 0 so tanh_sinh absorbs the cusp
template <typename F>
double integrate_symmetric(F&& f, double L) {
    boost::math::quadrature::tanh_sinh<double> integrator;
    auto folded = [&](double x) { return f(x) + f(-x); };
    return integrator.integrate(folded, 0.0, L, 1e-12);
}

} // namespace sl21osc::detail
