#include "hypspec/eigenfunctions.hpp"

#include <Eigen/LU>
#include <Eigen/QR>
#include <cmath>

#include "hypspec/interpolation.hpp"
#include "hypspec/quadrature.hpp"

namespace hypspec {

ModeFunction::ModeFunction(ModeIndex mode, std::complex<double> mu,
                           std::vector<Eigen::VectorXcd> omegas, const GeometryTables* geom)
    : mode_(mode), mu_(mu), omegas_(std::move(omegas)), geom_(geom) {
    if (omegas_.empty()) fail(Errc::InvalidArgument, "mode function needs omega_1..omega_j");
    lam0_ = geom_->lambda0(0.0);
}

Eigen::VectorXcd ModeFunction::operator()(double zeta) const {
    const int j = order();
    Eigen::VectorXcd bracket = omegas_[static_cast<std::size_t>(j - 1)];
    for (int m = 0; m + 2 <= j; ++m)
        bracket += omegas_[static_cast<std::size_t>(j - 2 - m)] * geom_->omega(m + 1, zeta);
    const std::complex<double> factor =
        lam0_ / geom_->lambda0(zeta) * std::exp(-mu_ * geom_->eta(zeta));
    return factor * bracket;
}

StateField ModeFunction::sample() const {
    const auto& grid = geom_->grid();
    const auto& eta = geom_->eta_nodes();
    StateField out(grid.size());
    const int j = order();
    for (std::size_t i = 0; i < grid.size(); ++i) {
        Eigen::VectorXcd bracket = omegas_[static_cast<std::size_t>(j - 1)];
        for (int m = 0; m + 2 <= j; ++m)
            bracket +=
                omegas_[static_cast<std::size_t>(j - 2 - m)] * geom_->omega_nodes(m + 1)[i];
        out[i] = (lam0_ / geom_->lambda0(grid[i]) * std::exp(-mu_ * eta[i])) * bracket;
    }
    return out;
}

ModeFunction eigenfunction(const BoundaryEigenStructure& es, const GeometryTables& geom, int k,
                           long l) {
    const EigenvalueGroup& g = es.group(k);
    if (g.chains.empty() || g.chains.front().vectors.empty())
        fail(Errc::NoEigenvector, "no eigenvector stored for rho_k");
    Eigen::VectorXcd v = g.chains.front().vectors.back();  // chain end lies in ker(rho - A_d)
    const double nrm = v.norm();
    if (nrm <= es.rank_tol) fail(Errc::NoEigenvector, "stored eigenvector is numerically zero");
    v /= nrm;
    const std::complex<double> mu = mode_eigenvalue(es, geom.eta1(), k, l);
    return ModeFunction({k, l, 1}, mu, {std::move(v)}, &geom);
}

std::vector<Eigen::VectorXcd> jordan_omegas(const std::complex<double>& rho,
                                            const JordanChain& chain, const GeometryTables& geom,
                                            const Eigen::MatrixXcd& A_d, double rank_tol) {
    const int p = chain.length();
    if (p < 1) fail(Errc::InvalidArgument, "empty Jordan chain");
    if (geom.m_max() < p - 1 && p > 1)
        fail(Errc::OutOfRange, "geometry tables hold too few Omega_m for this chain");
    std::vector<Eigen::VectorXcd> omegas;
    omegas.push_back(chain.vectors.back());  // omega_1 = (rho - A_d)^{p-1} v

    for (int m = 2; m <= p; ++m) {
        Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(A_d.rows());
        for (int q = 1; q <= m - 1; ++q)
            rhs += geom.omega_nodes(q).back() * omegas[static_cast<std::size_t>(m - q - 1)];
        rhs = A_d * rhs;
        // rhs = sum_q beta_q (rho-A_d)^{p-q} v; basis columns chain.vectors[p-q], q=1..m-1
        Eigen::MatrixXcd basis(A_d.rows(), m - 1);
        for (int q = 1; q <= m - 1; ++q)
            basis.col(q - 1) = chain.vectors[static_cast<std::size_t>(p - q)];
        Eigen::VectorXcd beta = basis.colPivHouseholderQr().solve(rhs);
        const double resid = (basis * beta - rhs).norm();
        if (resid > rank_tol * std::max(1.0, rhs.norm()))
            fail(Errc::DefectiveChain, "omega recursion left the chain span");
        Eigen::VectorXcd om = Eigen::VectorXcd::Zero(A_d.rows());
        for (int q = 1; q <= m - 1; ++q)
            om += beta(q - 1) * chain.vectors[static_cast<std::size_t>(p - q - 1)];
        if (om.norm() <= rank_tol)
            fail(Errc::DefectiveChain, "omega_m collapsed to zero");
        omegas.push_back(std::move(om));
    }
    return omegas;
}

ModeFunction generalized_eigenfunction(const BoundaryEigenStructure& es,
                                       const GeometryTables& geom, int k, long l, int j,
                                       int chain_index) {
    const EigenvalueGroup& g = es.group(k);
    if (chain_index < 0 || chain_index >= static_cast<int>(g.chains.size()))
        fail(Errc::OutOfRange, "chain index outside the stored chains");
    const JordanChain& chain = g.chains[static_cast<std::size_t>(chain_index)];
    if (j < 1 || j > chain.length())
        fail(Errc::IndexOutOfChain, "chain position j outside 1..p");
    auto omegas = jordan_omegas(g.rho, chain, geom, es.A_d, es.rank_tol);
    omegas.resize(static_cast<std::size_t>(j));
    const std::complex<double> mu = mode_eigenvalue(es, geom.eta1(), k, l);
    return ModeFunction({k, l, j}, mu, std::move(omegas), &geom);
}

StateField apply_mu_minus_generator(std::complex<double> mu, const StateField& f,
                                    const GeometryTables& geom) {
    const auto& grid = geom.grid();
    if (f.size() != grid.size())
        fail(Errc::DimensionMismatch, "field does not match the master grid");
    const Eigen::Index n = f.front().size();
    StateField out(f.size());
    std::vector<std::complex<double>> comp(f.size());
    for (std::size_t i = 0; i < f.size(); ++i)
        out[i] = mu * f[i];
    for (Eigen::Index c = 0; c < n; ++c) {
        for (std::size_t i = 0; i < f.size(); ++i)
            comp[i] = geom.lambda0(grid[i]) * f[i](c);
        const auto d = derivative_6th(comp, geom.h());
        for (std::size_t i = 0; i < f.size(); ++i) out[i](c) += d[i];
    }
    return out;
}

double field_l2_norm(const StateField& f, const GeometryTables& geom) {
    const auto w = boole_weights(geom.N(), geom.h());
    double acc = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) acc += w[i] * f[i].squaredNorm();
    return std::sqrt(acc);
}

ChainResiduals chain_residuals(const ModeFunction& phi, const GeometryTables& geom) {
    const int j = phi.order();
    StateField cur = phi.sample();
    double prev_norm = field_l2_norm(cur, geom);
    for (int step = 0; step < j; ++step) {
        cur = apply_mu_minus_generator(phi.mu(), cur, geom);
        if (step + 1 < j) prev_norm = field_l2_norm(cur, geom);
    }
    return {field_l2_norm(cur, geom), prev_norm};
}

double WeightMatrix::w_scalar(int column, double zeta) const {
    const std::complex<double> rho = col_rho_[static_cast<std::size_t>(column)];
    const double eta1 = geom_->eta1();
    return std::exp(2.0 * std::log(std::abs(rho)) * geom_->eta(zeta) / eta1) /
           (lam0_ * lam0_ * eta1);
}

Eigen::MatrixXcd WeightMatrix::operator()(double zeta) const {
    Eigen::VectorXd w(V_.rows());
    for (int c = 0; c < static_cast<int>(V_.rows()); ++c) w(c) = w_scalar(c, zeta);
    return Vinv_.adjoint() * w.asDiagonal() * Vinv_;
}

WeightMatrix build_weight(const BoundaryEigenStructure& es, const GeometryTables& geom) {
    if (!es.diagonalizable())
        fail(Errc::NotDiagonalizable, "weight matrix needs a basis of eigenvectors");
    const int n = es.n();
    WeightMatrix W;
    W.V_.resize(n, n);
    W.geom_ = &geom;
    W.lam0_ = std::abs(geom.lambda0(0.0));
    int col = 0;
    for (int k = 1; k <= es.n_distinct(); ++k) {
        const auto& g = es.group(k);
        for (const auto& ch : g.chains) {
            W.V_.col(col) = ch.vectors.front();
            W.col_rho_.push_back(g.rho);
            W.col_group_.push_back(k);
            ++col;
        }
    }
    if (col != n) fail(Errc::NotDiagonalizable, "eigenbasis does not fill C^n");
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(W.V_);
    if (!lu.isInvertible())
        fail(Errc::NotDiagonalizable, "eigenbasis is numerically rank-deficient");
    W.Vinv_ = lu.inverse();

    const auto& grid = geom.grid();
    const auto& eta = geom.eta_nodes();
    W.nodes_.resize(grid.size());
    Eigen::VectorXd w(n);
    const double eta1 = geom.eta1();
    for (std::size_t i = 0; i < grid.size(); ++i) {
        for (int c = 0; c < n; ++c) {
            const double lr = std::log(std::abs(W.col_rho_[static_cast<std::size_t>(c)]));
            w(c) = std::exp(2.0 * lr * eta[i] / eta1) / (W.lam0_ * W.lam0_ * eta1);
        }
        W.nodes_[i] = W.Vinv_.adjoint() * w.asDiagonal() * W.Vinv_;
    }
    return W;
}

std::complex<double> weighted_inner_product(const StateField& f, const StateField& g,
                                            const WeightMatrix& W, const GeometryTables& geom) {
    const auto& grid = geom.grid();
    if (f.size() != grid.size() || g.size() != grid.size())
        fail(Errc::DimensionMismatch, "fields do not match the master grid");
    const auto qw = boole_weights(geom.N(), geom.h());
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (f[i].size() != W.at_node(i).cols() || g[i].size() != W.at_node(i).cols())
            fail(Errc::DimensionMismatch, "field component count differs from n");
        acc += qw[i] * geom.lambda0(grid[i]) * (g[i].adjoint() * W.at_node(i) * f[i])(0, 0);
    }
    return acc;
}

ModeFunction column_eigenfunction(const BoundaryEigenStructure& es, const WeightMatrix& W,
                                  const GeometryTables& geom, int column, long l) {
    if (column < 1 || column > W.n()) fail(Errc::OutOfRange, "eigenbasis column outside 1..n");
    const int group = W.column_group()[static_cast<std::size_t>(column - 1)];
    Eigen::VectorXcd v = W.eigenbasis().col(column - 1);
    const std::complex<double> mu = mode_eigenvalue(es, geom.eta1(), group, l);
    return ModeFunction({group, l, 1}, mu, {std::move(v)}, &geom);
}

ModalCoefficients project_initial_state(const StateField& z0, const BoundaryEigenStructure& es,
                                        const WeightMatrix& W, const GeometryTables& geom,
                                        long l_max) {
    if (!es.diagonalizable())
        fail(Errc::NotDiagonalizable, "modal projection needs a basis of eigenvectors");
    if (l_max < 0) fail(Errc::InvalidArgument, "l_max must be >= 0");
    ModalCoefficients mc;
    mc.l_max = l_max;
    mc.n_columns = W.n();
    mc.column_group = W.column_group();
    mc.c.assign(static_cast<std::size_t>(mc.n_columns),
                std::vector<std::complex<double>>(static_cast<std::size_t>(2 * l_max + 1)));
    for (int k = 1; k <= mc.n_columns; ++k) {
        for (long l = -l_max; l <= l_max; ++l) {
            const ModeFunction phi = column_eigenfunction(es, W, geom, k, l);
            mc.c[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(l + l_max)] =
                weighted_inner_product(z0, phi.sample(), W, geom);
        }
    }
    return mc;
}

}  // namespace hypspec
