#ifndef HYPSPEC_GEOMETRY_HPP
#define HYPSPEC_GEOMETRY_HPP

#include <vector>

#include "hypspec/system.hpp"

namespace hypspec {

/// Travel-time tables on the equispaced master grid:
///   eta(zeta) = int_0^zeta 1/lambda0,
///   Omega_0 = 1,  Omega_m(zeta) = int_0^zeta Omega_{m-1}/lambda0.
/// Built once with composite Simpson; evaluations between nodes use local
/// cubic interpolation. Immutable after construction.
class GeometryTables {
public:
    int N() const { return static_cast<int>(grid_.size()) - 1; }
    int m_max() const { return static_cast<int>(omega_.size()) - 1; }
    double h() const { return h_; }
    const std::vector<double>& grid() const { return grid_; }
    const std::vector<double>& eta_nodes() const { return eta_; }
    const std::vector<double>& omega_nodes(int m) const;
    double eta1() const { return eta_.back(); }

    double eta(double zeta) const;
    double omega(int m, double zeta) const;
    double lambda0(double zeta) const { return lambda0_(zeta); }
    const CoefficientProfile& lambda0_profile() const { return lambda0_; }

    /// Inverse travel-time map: the zeta with eta(zeta) = s, s in [0, eta1].
    /// Bracketed Newton with bisection fallback, |eta(zeta) - s| <= 1e-12.
    double eta_inverse(double s) const;

private:
    friend GeometryTables build_geometry(const ValidatedSystem&, int, int);
    CoefficientProfile lambda0_ = CoefficientProfile::constant(1.0);
    std::vector<double> grid_, eta_;
    std::vector<std::vector<double>> omega_;  // omega_[m], m = 0..m_max
    double h_ = 0.0;
};

/// N >= 16 and even; m_max < 1 means "use n" (longest possible chain).
GeometryTables build_geometry(const ValidatedSystem& sys, int N = kDefaultGridN, int m_max = -1);

}  // namespace hypspec

#endif
