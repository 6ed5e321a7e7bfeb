#ifndef HYPSPEC_INTERPOLATION_HPP
#define HYPSPEC_INTERPOLATION_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "hypspec/errors.hpp"

namespace hypspec {

// Shape-preserving cubic Hermite slopes (Fritsch-Butland weighted harmonic
// mean). For positive monotone-bounded data the interpolant stays within the
// node values on every interval.
std::vector<double> pchip_slopes(const std::vector<double>& x, const std::vector<double>& y);

double hermite_eval(double x0, double x1, double y0, double y1, double d0, double d1, double x);

// Local 4-point Lagrange cubic on sorted, strictly increasing nodes.
template <class T>
T cubic_interp(const std::vector<double>& x, const std::vector<T>& y, double xq) {
    const std::size_t n = x.size();
    if (n < 2 || y.size() != n) fail(Errc::DimensionMismatch, "cubic_interp: bad table");
    if (n < 4) {  // degrade gracefully on tiny tables
        auto it = std::upper_bound(x.begin(), x.end(), xq);
        std::size_t i = std::min<std::size_t>(std::max<std::ptrdiff_t>(it - x.begin() - 1, 0), n - 2);
        const double t = (xq - x[i]) / (x[i + 1] - x[i]);
        return y[i] * (1.0 - t) + y[i + 1] * t;
    }
    auto it = std::upper_bound(x.begin(), x.end(), xq);
    std::ptrdiff_t i = it - x.begin() - 1;
    i = std::clamp<std::ptrdiff_t>(i, 0, static_cast<std::ptrdiff_t>(n) - 2);
    std::size_t s = static_cast<std::size_t>(std::clamp<std::ptrdiff_t>(
        i - 1, 0, static_cast<std::ptrdiff_t>(n) - 4));
    T acc{};
    for (std::size_t j = s; j < s + 4; ++j) {
        double lj = 1.0;
        for (std::size_t m = s; m < s + 4; ++m) {
            if (m == j) continue;
            lj *= (xq - x[m]) / (x[j] - x[m]);
        }
        acc += lj * y[j];
    }
    return acc;
}

// Same on an equispaced grid x_i = x0 + i h.
template <class T>
T cubic_interp_uniform(double x0, double h, const std::vector<T>& y, double xq) {
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(y.size());
    if (n < 4) fail(Errc::DimensionMismatch, "cubic_interp_uniform: table too small");
    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(std::floor((xq - x0) / h));
    i = std::clamp<std::ptrdiff_t>(i, 0, n - 2);
    const std::size_t s = static_cast<std::size_t>(std::clamp<std::ptrdiff_t>(i - 1, 0, n - 4));
    const double t = (xq - (x0 + static_cast<double>(s) * h)) / h;  // in stencil units
    // Lagrange basis on offsets {0,1,2,3}
    const double l0 = -(t - 1.0) * (t - 2.0) * (t - 3.0) / 6.0;
    const double l1 = t * (t - 2.0) * (t - 3.0) / 2.0;
    const double l2 = -t * (t - 1.0) * (t - 3.0) / 2.0;
    const double l3 = t * (t - 1.0) * (t - 2.0) / 6.0;
    return l0 * y[s] + l1 * y[s + 1] + l2 * y[s + 2] + l3 * y[s + 3];
}

// Fornberg finite-difference weights for d^m/dx^m at x0 from nodes xs.
std::vector<double> fd_weights(double x0, const std::vector<double>& xs, int m);

// d/dzeta of equispaced samples, 6th-order central stencils in the interior
// and one-sided 6th-order stencils at the three nodes nearest each end.
std::vector<std::complex<double>> derivative_6th(const std::vector<std::complex<double>>& f,
                                                 double h);

}  // namespace hypspec

#endif
