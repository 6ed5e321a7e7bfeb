#include "hypspec/similarity.hpp"

#include <Eigen/LU>
#include <cmath>

#include "hypspec/ode.hpp"
#include "hypspec/quadrature.hpp"

namespace hypspec {

SimilaritySolution solve_P(const ValidatedSystem& sys, const GeometryTables& geom, double rtol,
                           double atol) {
    if (!(rtol >= 1e-14 && rtol <= 1e-4))
        fail(Errc::InvalidArgument, "solve_P rtol must lie in [1e-14, 1e-4]");
    const Eigen::Index n = sys.n();
    const Eigen::Index nn = n * n;
    const auto& grid = geom.grid();

    // state y = [vec(P); vec(Pinv)], column-major blocks
    Eigen::VectorXcd y0(2 * nn);
    Eigen::MatrixXcd eye = Eigen::MatrixXcd::Identity(n, n);
    y0.head(nn) = Eigen::Map<const Eigen::VectorXcd>(eye.data(), nn);
    y0.tail(nn) = y0.head(nn);

    auto rhs = [&](double zeta, const Eigen::VectorXcd& y, Eigen::VectorXcd& dy) {
        const Eigen::MatrixXcd A = sys.M()(zeta) / sys.lambda0()(zeta);
        Eigen::Map<const Eigen::MatrixXcd> P(y.data(), n, n);
        Eigen::Map<const Eigen::MatrixXcd> Q(y.data() + nn, n, n);
        Eigen::Map<Eigen::MatrixXcd> dP(dy.data(), n, n);
        Eigen::Map<Eigen::MatrixXcd> dQ(dy.data() + nn, n, n);
        dP = A * P;
        dQ = -Q * A;
    };

    SimilaritySolution sol;
    sol.grid = grid;
    sol.P.assign(grid.size(), eye);
    sol.Pinv.assign(grid.size(), eye);

    OdeOptions opt;
    opt.rtol = rtol;
    opt.atol = atol;
    integrate_dopri5(
        [&](double x, const Eigen::VectorXcd& y, Eigen::VectorXcd& dy) {
            if (dy.size() != y.size()) dy.resize(y.size());
            rhs(x, y, dy);
        },
        0.0, 1.0, y0, grid,
        [&](std::size_t i, const Eigen::VectorXcd& y) {
            sol.P[i] = Eigen::Map<const Eigen::MatrixXcd>(y.data(), n, n);
            sol.Pinv[i] = Eigen::Map<const Eigen::MatrixXcd>(y.data() + nn, n, n);
        },
        opt);
    sol.P[0] = eye;     // P(0) = I exactly
    sol.Pinv[0] = eye;
    sol.P1 = sol.P.back();

    // product certificate
    double defect = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i)
        defect = std::max(defect, (sol.P[i] * sol.Pinv[i] - eye).norm());
    sol.product_defect = defect;

    // Liouville check: det P(zeta) = exp(int_0^zeta tr(M/lambda0))
    std::vector<std::complex<double>> tr(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
        tr[i] = (sys.M()(grid[i]) / sys.lambda0()(grid[i])).trace();
    const auto tr_int = cumulative_simpson(tr, geom.h());
    double lio = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const std::complex<double> expected = std::exp(tr_int[i]);
        const std::complex<double> det = Eigen::PartialPivLU<Eigen::MatrixXcd>(sol.P[i]).determinant();
        lio = std::max(lio, std::abs(det - expected) / std::abs(expected));
    }
    sol.liouville_defect = lio;
    return sol;
}

namespace {

StateField apply_pointwise(const std::vector<Eigen::MatrixXcd>& mats, const StateField& field) {
    if (field.size() != mats.size())
        fail(Errc::DimensionMismatch, "state field does not match the master grid");
    StateField out(field.size());
    for (std::size_t i = 0; i < field.size(); ++i) {
        if (field[i].size() != mats[i].cols())
            fail(Errc::DimensionMismatch, "state component count differs from n");
        out[i] = mats[i] * field[i];
    }
    return out;
}

}  // namespace

StateField transform_state(const SimilaritySolution& sim, const StateField& ztilde) {
    return apply_pointwise(sim.Pinv, ztilde);
}

StateField inverse_transform(const SimilaritySolution& sim, const StateField& z) {
    return apply_pointwise(sim.P, z);
}

}  // namespace hypspec
