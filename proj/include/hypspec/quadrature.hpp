#ifndef HYPSPEC_QUADRATURE_HPP
#define HYPSPEC_QUADRATURE_HPP

#include <complex>
#include <functional>
#include <vector>

namespace hypspec {

// Cumulative integral of equispaced samples f[0..N], N even, spacing h.
// Composite Simpson at even nodes; odd nodes use the quadratic-fit half-panel
//   int_{x0}^{x1} f = h/12 (5 f0 + 8 f1 - f2),
// which keeps the cumulative table 4th-order accurate everywhere.
std::vector<double> cumulative_simpson(const std::vector<double>& f, double h);
std::vector<std::complex<double>> cumulative_simpson(const std::vector<std::complex<double>>& f,
                                                     double h);

// Quadrature weights for samples on an equispaced grid of N+1 points.
// N % 4 == 0 gives pure composite Boole (6th order); otherwise the leading
// panels are Boole and the remainder is closed with one Simpson or
// Simpson-3/8 panel. N must be even and >= 4.
std::vector<double> boole_weights(int n_intervals, double h);

std::vector<double> simpson_weights(int n_intervals, double h);

// Adaptive Gauss-Kronrod (G7,K15) with bisection refinement.
double adaptive_quadrature(const std::function<double(double)>& f, double a, double b,
                           double tol = 1e-12, int max_depth = 30);

}  // namespace hypspec

#endif
