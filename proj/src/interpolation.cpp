#include "hypspec/interpolation.hpp"

#include <array>

namespace hypspec {

std::vector<double> pchip_slopes(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    if (n != y.size() || n < 2) fail(Errc::DimensionMismatch, "pchip_slopes: bad table");
    std::vector<double> d(n, 0.0);
    if (n == 2) {
        d[0] = d[1] = (y[1] - y[0]) / (x[1] - x[0]);
        return d;
    }
    std::vector<double> h(n - 1), delta(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        h[i] = x[i + 1] - x[i];
        delta[i] = (y[i + 1] - y[i]) / h[i];
    }
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (delta[i - 1] * delta[i] <= 0.0) {
            d[i] = 0.0;
        } else {
            const double w1 = 2.0 * h[i] + h[i - 1];
            const double w2 = h[i] + 2.0 * h[i - 1];
            d[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
        }
    }
    auto endpoint = [](double h0, double h1, double d0, double d1) {
        double s = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
        if (s * d0 <= 0.0)
            s = 0.0;
        else if (d0 * d1 < 0.0 && std::abs(s) > 3.0 * std::abs(d0))
            s = 3.0 * d0;
        return s;
    };
    d[0] = endpoint(h[0], h[1], delta[0], delta[1]);
    d[n - 1] = endpoint(h[n - 2], h[n - 3], delta[n - 2], delta[n - 3]);
    return d;
}

double hermite_eval(double x0, double x1, double y0, double y1, double d0, double d1, double x) {
    const double h = x1 - x0;
    const double t = (x - x0) / h;
    const double t2 = t * t;
    const double t3 = t2 * t;
    return y0 * (2.0 * t3 - 3.0 * t2 + 1.0) + y1 * (-2.0 * t3 + 3.0 * t2) +
           h * d0 * (t3 - 2.0 * t2 + t) + h * d1 * (t3 - t2);
}

std::vector<double> fd_weights(double x0, const std::vector<double>& xs, int m) {
    // Fornberg (1988) recursion.
    const int n = static_cast<int>(xs.size()) - 1;
    if (n < m) fail(Errc::InvalidArgument, "fd_weights: too few nodes");
    std::vector<std::vector<double>> c(static_cast<std::size_t>(n) + 1,
                                       std::vector<double>(static_cast<std::size_t>(m) + 1, 0.0));
    double c1 = 1.0;
    double c4 = xs[0] - x0;
    c[0][0] = 1.0;
    for (int i = 1; i <= n; ++i) {
        const int mn = std::min(i, m);
        double c2 = 1.0;
        const double c5 = c4;
        c4 = xs[static_cast<std::size_t>(i)] - x0;
        for (int j = 0; j < i; ++j) {
            const double c3 = xs[static_cast<std::size_t>(i)] - xs[static_cast<std::size_t>(j)];
            c2 *= c3;
            if (j == i - 1) {
                for (int k = mn; k >= 1; --k)
                    c[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
                        c1 *
                        (k * c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k - 1)] -
                         c5 * c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k)]) /
                        c2;
                c[static_cast<std::size_t>(i)][0] =
                    -c1 * c5 * c[static_cast<std::size_t>(i - 1)][0] / c2;
            }
            for (int k = mn; k >= 1; --k)
                c[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] =
                    (c4 * c[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] -
                     k * c[static_cast<std::size_t>(j)][static_cast<std::size_t>(k - 1)]) /
                    c3;
            c[static_cast<std::size_t>(j)][0] =
                c4 * c[static_cast<std::size_t>(j)][0] / c3;
        }
        c1 = c2;
    }
    std::vector<double> w(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) w[i] = c[i][static_cast<std::size_t>(m)];
    return w;
}

std::vector<std::complex<double>> derivative_6th(const std::vector<std::complex<double>>& f,
                                                 double h) {
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(f.size());
    if (n < 7) fail(Errc::InvalidArgument, "derivative_6th: need at least 7 samples");
    static const std::array<double, 7> central = {-1.0 / 60.0, 3.0 / 20.0, -3.0 / 4.0, 0.0,
                                                  3.0 / 4.0,   -3.0 / 20.0, 1.0 / 60.0};
    // one-sided stencils from the first/last 7 nodes
    std::vector<double> nodes(7);
    for (int i = 0; i < 7; ++i) nodes[static_cast<std::size_t>(i)] = static_cast<double>(i);
    std::array<std::vector<double>, 3> head;
    std::array<std::vector<double>, 3> tail;
    for (int i = 0; i < 3; ++i) {
        head[static_cast<std::size_t>(i)] = fd_weights(static_cast<double>(i), nodes, 1);
        tail[static_cast<std::size_t>(i)] = fd_weights(6.0 - static_cast<double>(i), nodes, 1);
    }
    std::vector<std::complex<double>> out(f.size());
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        std::complex<double> acc(0.0, 0.0);
        if (i < 3) {
            const auto& w = head[static_cast<std::size_t>(i)];
            for (int j = 0; j < 7; ++j) acc += w[static_cast<std::size_t>(j)] * f[static_cast<std::size_t>(j)];
        } else if (i > n - 4) {
            const auto& w = tail[static_cast<std::size_t>(n - 1 - i)];
            for (int j = 0; j < 7; ++j)
                acc += w[static_cast<std::size_t>(j)] * f[static_cast<std::size_t>(n - 7 + j)];
        } else {
            for (int j = 0; j < 7; ++j)
                acc += central[static_cast<std::size_t>(j)] * f[static_cast<std::size_t>(i - 3 + j)];
        }
        out[static_cast<std::size_t>(i)] = acc / h;
    }
    return out;
}

}  // namespace hypspec
