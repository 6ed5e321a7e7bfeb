#ifndef HYPSPEC_SIMILARITY_HPP
#define HYPSPEC_SIMILARITY_HPP

#include <Eigen/Dense>
#include <vector>

#include "hypspec/geometry.hpp"
#include "hypspec/system.hpp"

namespace hypspec {

/// State samples on the master grid: one n-vector per node.
using StateField = std::vector<Eigen::VectorXcd>;

/// Fundamental matrix P' = M P / lambda0, P(0) = I, sampled on the master
/// grid together with its inverse. P^{-1} is integrated from its own
/// equation (P^{-1})' = -P^{-1} M / lambda0 rather than inverted, so
/// product_defect doubles as an integration certificate.
struct SimilaritySolution {
    std::vector<double> grid;
    std::vector<Eigen::MatrixXcd> P;
    std::vector<Eigen::MatrixXcd> Pinv;
    Eigen::MatrixXcd P1;
    double product_defect = 0.0;   // max_i ||P_i Pinv_i - I||_F
    double liouville_defect = 0.0; // max_i |det P_i - exp(int tr)| / |exp(int tr)|
};

SimilaritySolution solve_P(const ValidatedSystem& sys, const GeometryTables& geom,
                           double rtol = 1e-10, double atol = 1e-12);

/// z = P^{-1} ztilde, node-wise on the master grid.
StateField transform_state(const SimilaritySolution& sim, const StateField& ztilde);

/// ztilde = P z, node-wise on the master grid.
StateField inverse_transform(const SimilaritySolution& sim, const StateField& z);

}  // namespace hypspec

#endif
