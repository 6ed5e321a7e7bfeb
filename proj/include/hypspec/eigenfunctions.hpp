#ifndef HYPSPEC_EIGENFUNCTIONS_HPP
#define HYPSPEC_EIGENFUNCTIONS_HPP

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "hypspec/geometry.hpp"
#include "hypspec/spectrum.hpp"

namespace hypspec {

/// Evaluator for a (generalized) eigenfunction
///   phi(zeta) = lambda0(0)/lambda0(zeta) e^{-mu eta(zeta)}
///               [omega_j + sum_{m=0}^{j-2} omega_{j-1-m} Omega_{m+1}(zeta)].
/// Holds a non-owning pointer to the geometry tables; keep them alive.
class ModeFunction {
public:
    ModeFunction(ModeIndex mode, std::complex<double> mu, std::vector<Eigen::VectorXcd> omegas,
                 const GeometryTables* geom);

    const ModeIndex& mode() const { return mode_; }
    std::complex<double> mu() const { return mu_; }
    int order() const { return static_cast<int>(omegas_.size()); }  // j
    const std::vector<Eigen::VectorXcd>& omegas() const { return omegas_; }

    Eigen::VectorXcd operator()(double zeta) const;
    /// Values at every master node (table lookups, no interpolation).
    StateField sample() const;

private:
    Eigen::VectorXcd combination(double eta_value, const std::vector<double>& omega_values) const;

    ModeIndex mode_;
    std::complex<double> mu_;
    std::vector<Eigen::VectorXcd> omegas_;
    const GeometryTables* geom_;
    double lam0_;
};

/// phi_kl from the geometric eigenvector of rho_k (first chain's end vector).
ModeFunction eigenfunction(const BoundaryEigenStructure& es, const GeometryTables& geom, int k,
                           long l);

/// The omega_1..omega_p recursion over a Jordan chain:
///   omega_1 = (rho-A_d)^{p-1} v,
///   (rho-A_d) omega_m = A_d sum_q Omega_q(1) omega_{m-q},
/// solved in the chain basis (triangular in exact arithmetic).
std::vector<Eigen::VectorXcd> jordan_omegas(const std::complex<double>& rho,
                                            const JordanChain& chain, const GeometryTables& geom,
                                            const Eigen::MatrixXcd& A_d,
                                            double rank_tol = kDefaultRankTol);

/// phi_klj for chain position 1 <= j <= p of the given chain of rho_k.
ModeFunction generalized_eigenfunction(const BoundaryEigenStructure& es,
                                       const GeometryTables& geom, int k, long l, int j,
                                       int chain_index = 0);

struct ChainResiduals {
    double r_j;    // ||(mu - A)^j phi||, should vanish
    double r_jm1;  // ||(mu - A)^{j-1} phi||, should not
};

/// Applies (mu - A) f = mu f + d/dzeta(lambda0 f) on the master grid with
/// 6th-order stencils, j times; returns grid L2 norms after j and j-1
/// applications.
ChainResiduals chain_residuals(const ModeFunction& phi, const GeometryTables& geom);

/// One application of (mu - A) to a sampled field.
StateField apply_mu_minus_generator(std::complex<double> mu, const StateField& f,
                                    const GeometryTables& geom);

/// Plain grid L2 norm sqrt(int |f|^2) via the master-grid weights.
double field_l2_norm(const StateField& f, const GeometryTables& geom);

/// W(zeta) = V^{-*} diag(w_k(zeta)) V^{-1} over the unit eigenbasis V, with
///   w_k(zeta) = e^{2 log|rho_k| eta(zeta)/eta(1)} / (lambda0(0)^2 eta(1)).
/// Only defined when A_d is diagonalizable.
class WeightMatrix {
public:
    int n() const { return static_cast<int>(V_.rows()); }
    const Eigen::MatrixXcd& eigenbasis() const { return V_; }
    /// rho of the eigenvalue the basis column belongs to.
    const std::vector<std::complex<double>>& column_rho() const { return col_rho_; }
    /// group index (1-based) per column.
    const std::vector<int>& column_group() const { return col_group_; }

    double w_scalar(int column, double zeta) const;
    Eigen::MatrixXcd operator()(double zeta) const;
    const Eigen::MatrixXcd& at_node(std::size_t i) const { return nodes_[i]; }

private:
    friend WeightMatrix build_weight(const BoundaryEigenStructure&, const GeometryTables&);
    Eigen::MatrixXcd V_, Vinv_;
    std::vector<std::complex<double>> col_rho_;
    std::vector<int> col_group_;
    std::vector<Eigen::MatrixXcd> nodes_;
    const GeometryTables* geom_ = nullptr;
    double lam0_ = 1.0;
};

WeightMatrix build_weight(const BoundaryEigenStructure& es, const GeometryTables& geom);

/// <f, g>_W = int_0^1 g^* lambda0 W f dzeta on the master grid.
std::complex<double> weighted_inner_product(const StateField& f, const StateField& g,
                                            const WeightMatrix& W, const GeometryTables& geom);

/// phi_l built from one eigenbasis column of the weight matrix (equals the
/// group eigenfunction whenever the eigenvalue is simple).
ModeFunction column_eigenfunction(const BoundaryEigenStructure& es, const WeightMatrix& W,
                                  const GeometryTables& geom, int column, long l);

/// Modal coefficients c_{k,l} = <z0, phi_kl>_W over every eigenbasis column
/// k = 1..n and |l| <= l_max. Columns coincide with distinct eigenvalues for
/// simple spectra; repeated diagonalizable eigenvalues contribute one column
/// per independent eigenvector.
struct ModalCoefficients {
    long l_max = 0;
    int n_columns = 0;
    std::vector<int> column_group;                     // 1-based group per column
    std::vector<std::vector<std::complex<double>>> c;  // c[k-1][l + l_max]

    std::complex<double> at(int k, long l) const {
        return c[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(l + l_max)];
    }
};

ModalCoefficients project_initial_state(const StateField& z0, const BoundaryEigenStructure& es,
                                        const WeightMatrix& W, const GeometryTables& geom,
                                        long l_max);

}  // namespace hypspec

#endif
