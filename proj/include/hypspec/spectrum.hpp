#ifndef HYPSPEC_SPECTRUM_HPP
#define HYPSPEC_SPECTRUM_HPP

#include <Eigen/Dense>
#include <complex>
#include <utility>
#include <vector>

#include "hypspec/geometry.hpp"
#include "hypspec/similarity.hpp"
#include "hypspec/system.hpp"

namespace hypspec {

inline constexpr double kDefaultRankTol = 1e-8;

/// One Jordan chain { (rho I - A_d)^j v }_{j=0..p-1}; vectors[0] is the
/// generating vector, vectors[p-1] the eigenvector.
struct JordanChain {
    std::vector<Eigen::VectorXcd> vectors;
    int length() const { return static_cast<int>(vectors.size()); }
};

struct EigenvalueGroup {
    std::complex<double> rho;
    double abs_rho;
    double theta;  // arg in [0, 2*pi)
    int alg_mult;
    int geom_mult;
    std::vector<JordanChain> chains;
};

struct BoundaryEigenStructure {
    Eigen::MatrixXcd A_d;
    std::vector<EigenvalueGroup> groups;
    double rank_tol;

    int n() const { return static_cast<int>(A_d.rows()); }
    int n_distinct() const { return static_cast<int>(groups.size()); }
    bool diagonalizable() const;
    const EigenvalueGroup& group(int k) const;  // k is 1-based
};

/// A_d = -K^{-1} L P(1), via a linear solve against K.
Eigen::MatrixXcd boundary_matrix(const ValidatedSystem& sys, const Eigen::MatrixXcd& P1);

/// Dense eigendecomposition with clustering at rank_tol and Jordan chains
/// from null spaces of powers of (rho I - A_d). Eigenvectors have unit norm
/// with the first significant component rotated to the positive real axis.
BoundaryEigenStructure eigen_structure(const Eigen::MatrixXcd& A_d,
                                       double rank_tol = kDefaultRankTol);

struct ModeIndex {
    int k;   // eigenvalue group, 1-based
    long l;  // lattice index
    int j;   // chain position, 1 for plain eigenvectors
};

/// mu_kl = (log|rho_k| + i(theta_k + 2*pi*l)) / eta1.
std::complex<double> mode_eigenvalue(const BoundaryEigenStructure& es, double eta1, int k, long l);

/// omega0 = max_k log|rho_k| / eta1.
double growth_bound(const BoundaryEigenStructure& es, double eta1);

/// True iff every |rho_k| < 1 (strictly); |rho| = 1 counts as unstable.
bool stability_verdict(const BoundaryEigenStructure& es);

struct SpectrumResult {
    SpectralClassification classification;
    BoundaryEigenStructure es;
    double eta1;
    double growth_bound;
    bool stable;

    std::complex<double> lattice(int k, long l) const { return mode_eigenvalue(es, eta1, k, l); }
};

/// Full pipeline: classify, then (unless NotWellPosed) A_d and its spectrum.
SpectrumResult analyze_spectrum(const ValidatedSystem& sys, const GeometryTables& geom,
                                const SimilaritySolution& sim,
                                double rank_tol = kDefaultRankTol,
                                double singular_tol = kDefaultSingularTol);

/// All (k, l) with |l| <= l_max, sorted by decreasing Re mu, then increasing
/// |Im mu|, then (k, l).
std::vector<std::pair<ModeIndex, std::complex<double>>> enumerate_modes(const SpectrumResult& sr,
                                                                        long l_max);

}  // namespace hypspec

#endif
