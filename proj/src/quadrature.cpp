#include "hypspec/quadrature.hpp"

#include <cmath>
#include <cstddef>

#include "hypspec/errors.hpp"

namespace hypspec {

namespace {

template <class T>
std::vector<T> cumulative_simpson_impl(const std::vector<T>& f, double h) {
    const std::size_t n = f.size();
    if (n < 3 || n % 2 == 0)
        fail(Errc::InvalidArgument, "cumulative_simpson needs an odd sample count (even intervals)");
    std::vector<T> acc(n);
    acc[0] = T(0);
    for (std::size_t i = 2; i < n; i += 2) {
        acc[i - 1] = acc[i - 2] + (h / 12.0) * (5.0 * f[i - 2] + 8.0 * f[i - 1] - f[i]);
        acc[i] = acc[i - 2] + (h / 3.0) * (f[i - 2] + 4.0 * f[i - 1] + f[i]);
    }
    return acc;
}

// 7-point Gauss / 15-point Kronrod nodes and weights on [-1, 1].
constexpr double kKronrodNodes[8] = {
    0.0,
    0.2077849550078985,
    0.4058451513773972,
    0.5860872354676911,
    0.7415311855993945,
    0.8648644233597691,
    0.9491079123427585,
    0.9914553711208126,
};
constexpr double kKronrodWeights[8] = {
    0.2094821410847278,
    0.2044329400752989,
    0.1903505780647854,
    0.1690047266392679,
    0.1406532597155259,
    0.1047900103222502,
    0.0630920926299786,
    0.0229353220105292,
};
constexpr double kGaussWeights[4] = {
    0.4179591836734694,
    0.3818300505051189,
    0.2797053914892767,
    0.1294849661688697,
};

struct GkResult {
    double value;
    double error;
};

GkResult gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double r = 0.5 * (b - a);
    const double f0 = f(c);
    double kron = kKronrodWeights[0] * f0;
    double gauss = kGaussWeights[0] * f0;
    for (int i = 1; i < 8; ++i) {
        const double dx = r * kKronrodNodes[i];
        const double fv = f(c - dx) + f(c + dx);
        kron += kKronrodWeights[i] * fv;
        if (i % 2 == 0) gauss += kGaussWeights[i / 2] * fv;
    }
    kron *= r;
    gauss *= r;
    const double diff = std::abs(kron - gauss);
    return {kron, std::pow(200.0 * diff, 1.5)};
}

double adaptive_rec(const std::function<double(double)>& f, double a, double b, double tol,
                    int depth, int max_depth) {
    const GkResult whole = gk15(f, a, b);
    if (depth >= max_depth || whole.error <= tol || b - a < 1e-14 * (std::abs(a) + 1.0))
        return whole.value;
    const double m = 0.5 * (a + b);
    return adaptive_rec(f, a, m, 0.5 * tol, depth + 1, max_depth) +
           adaptive_rec(f, m, b, 0.5 * tol, depth + 1, max_depth);
}

}  // namespace

std::vector<double> cumulative_simpson(const std::vector<double>& f, double h) {
    return cumulative_simpson_impl(f, h);
}

std::vector<std::complex<double>> cumulative_simpson(const std::vector<std::complex<double>>& f,
                                                     double h) {
    return cumulative_simpson_impl(f, h);
}

std::vector<double> simpson_weights(int n_intervals, double h) {
    if (n_intervals < 2 || n_intervals % 2 != 0)
        fail(Errc::InvalidArgument, "simpson_weights needs an even interval count >= 2");
    std::vector<double> w(static_cast<std::size_t>(n_intervals) + 1, 0.0);
    for (int i = 0; i + 2 <= n_intervals; i += 2) {
        w[i] += h / 3.0;
        w[i + 1] += 4.0 * h / 3.0;
        w[i + 2] += h / 3.0;
    }
    return w;
}

std::vector<double> boole_weights(int n_intervals, double h) {
    if (n_intervals < 4 || n_intervals % 2 != 0)
        fail(Errc::InvalidArgument, "boole_weights needs an even interval count >= 4");
    std::vector<double> w(static_cast<std::size_t>(n_intervals) + 1, 0.0);
    int i = 0;
    const int boole_end = (n_intervals % 4 == 0) ? n_intervals : n_intervals - 2;
    for (; i + 4 <= boole_end; i += 4) {
        w[i] += 2.0 * h / 45.0 * 7.0;
        w[i + 1] += 2.0 * h / 45.0 * 32.0;
        w[i + 2] += 2.0 * h / 45.0 * 12.0;
        w[i + 3] += 2.0 * h / 45.0 * 32.0;
        w[i + 4] += 2.0 * h / 45.0 * 7.0;
    }
    if (n_intervals % 4 != 0) {
        w[i] += h / 3.0;
        w[i + 1] += 4.0 * h / 3.0;
        w[i + 2] += h / 3.0;
    }
    return w;
}

double adaptive_quadrature(const std::function<double(double)>& f, double a, double b, double tol,
                           int max_depth) {
    if (!(b >= a)) fail(Errc::InvalidArgument, "adaptive_quadrature needs b >= a");
    if (a == b) return 0.0;
    return adaptive_rec(f, a, b, tol, 0, max_depth);
}

}  // namespace hypspec
