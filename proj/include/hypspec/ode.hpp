#ifndef HYPSPEC_ODE_HPP
#define HYPSPEC_ODE_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "hypspec/errors.hpp"

namespace hypspec {

struct OdeOptions {
    double rtol = 1e-10;
    double atol = 1e-12;
    double h_max = 0.1;
    long max_steps = 2'000'000;
};

// Dormand-Prince 5(4) with the standard quartic dense-output polynomial.
// Integrates y' = f(x, y) from x0 to x1 (x1 > x0) and emits the dense
// solution at the sorted sample points via emit(index, y).
void integrate_dopri5(
    const std::function<void(double, const Eigen::VectorXcd&, Eigen::VectorXcd&)>& f, double x0,
    double x1, const Eigen::VectorXcd& y0, const std::vector<double>& samples,
    const std::function<void(std::size_t, const Eigen::VectorXcd&)>& emit,
    const OdeOptions& opt = {});

}  // namespace hypspec

#endif
