#include "hypspec/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "hypspec/interpolation.hpp"
#include "hypspec/quadrature.hpp"

namespace hypspec {

const std::vector<double>& GeometryTables::omega_nodes(int m) const {
    if (m < 0 || m > m_max()) fail(Errc::OutOfRange, "omega index outside tables");
    return omega_[static_cast<std::size_t>(m)];
}

double GeometryTables::eta(double zeta) const {
    return cubic_interp_uniform(0.0, h_, eta_, zeta);
}

double GeometryTables::omega(int m, double zeta) const {
    if (m < 0 || m > m_max()) fail(Errc::OutOfRange, "omega index outside tables");
    if (m == 0) return 1.0;
    return cubic_interp_uniform(0.0, h_, omega_[static_cast<std::size_t>(m)], zeta);
}

double GeometryTables::eta_inverse(double s) const {
    const double s_tol = 1e-12;
    if (s < -s_tol || s > eta1() + s_tol)
        fail(Errc::OutOfRange, "eta_inverse argument outside [0, eta(1)]");
    s = std::clamp(s, 0.0, eta1());
    // bracket from the node table
    auto it = std::upper_bound(eta_.begin(), eta_.end(), s);
    std::size_t i = static_cast<std::size_t>(
        std::clamp<std::ptrdiff_t>(it - eta_.begin() - 1, 0,
                                   static_cast<std::ptrdiff_t>(eta_.size()) - 2));
    double lo = grid_[i], hi = grid_[i + 1];
    double z = lo + (hi - lo) * (s - eta_[i]) / (eta_[i + 1] - eta_[i]);
    for (int iter = 0; iter < 60; ++iter) {
        const double r = eta(z) - s;
        if (std::abs(r) <= s_tol) return z;
        if (r > 0.0)
            hi = z;
        else
            lo = z;
        const double step = r * lambda0_(z);  // eta' = 1/lambda0
        double znext = z - step;
        if (!(znext > lo && znext < hi)) znext = 0.5 * (lo + hi);
        z = znext;
    }
    return z;
}

GeometryTables build_geometry(const ValidatedSystem& sys, int N, int m_max) {
    if (N < 16 || N % 2 != 0) fail(Errc::InvalidArgument, "grid size must be even and >= 16");
    if (m_max < 1) m_max = static_cast<int>(sys.n());

    GeometryTables g;
    g.lambda0_ = sys.lambda0();
    g.h_ = 1.0 / static_cast<double>(N);
    g.grid_.resize(static_cast<std::size_t>(N) + 1);
    std::vector<double> inv_speed(g.grid_.size());
    for (std::size_t i = 0; i < g.grid_.size(); ++i) {
        g.grid_[i] = static_cast<double>(i) * g.h_;
        inv_speed[i] = 1.0 / g.lambda0_(g.grid_[i]);
    }
    g.eta_ = cumulative_simpson(inv_speed, g.h_);

    g.omega_.resize(static_cast<std::size_t>(m_max) + 1);
    g.omega_[0].assign(g.grid_.size(), 1.0);
    std::vector<double> integrand(g.grid_.size());
    for (int m = 1; m <= m_max; ++m) {
        const auto& prev = g.omega_[static_cast<std::size_t>(m - 1)];
        for (std::size_t i = 0; i < g.grid_.size(); ++i) integrand[i] = inv_speed[i] * prev[i];
        g.omega_[static_cast<std::size_t>(m)] = cumulative_simpson(integrand, g.h_);
    }
    return g;
}

}  // namespace hypspec
