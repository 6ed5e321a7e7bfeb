#ifndef HYPSPEC_SYSTEM_HPP
#define HYPSPEC_SYSTEM_HPP

#include <Eigen/Dense>

#include "hypspec/profiles.hpp"

namespace hypspec {

inline constexpr double kDefaultSingularTol = 1e-10;
inline constexpr int kDefaultGridN = 2048;

/// The transport system  dz/dt = -(lambda0 z)' + M z  with boundary coupling
///   lambda0(0) K z(0,t) + lambda0(1) L z(1,t) = 0.
struct SystemSpec {
    Eigen::Index n = 0;
    CoefficientProfile lambda0 = CoefficientProfile::constant(1.0);
    MatrixProfile M = MatrixProfile::constant(Eigen::MatrixXcd::Zero(1, 1));
    Eigen::MatrixXcd K;
    Eigen::MatrixXcd L;
};

/// Spec that passed validate_system; immutable, safe for concurrent reads.
class ValidatedSystem {
public:
    const SystemSpec& spec() const { return spec_; }
    Eigen::Index n() const { return spec_.n; }
    const CoefficientProfile& lambda0() const { return spec_.lambda0; }
    const MatrixProfile& M() const { return spec_.M; }
    const Eigen::MatrixXcd& K() const { return spec_.K; }
    const Eigen::MatrixXcd& L() const { return spec_.L; }
    /// Transport-speed lower bound found during validation (grid estimate).
    double eps() const { return eps_; }

private:
    friend ValidatedSystem validate_system(SystemSpec spec);
    SystemSpec spec_;
    double eps_ = 0.0;
};

/// Checks dimensions and positivity of the speed; records eps.
/// Throws NonPositiveSpeed, DimensionMismatch, or NonIncreasingGrid.
ValidatedSystem validate_system(SystemSpec spec);

enum class SystemClass { NotWellPosed, SemigroupOnly, RieszSpectralGroup };

const char* system_class_name(SystemClass c);

struct SpectralClassification {
    SystemClass tag;
    double rcond_K;
    double rcond_L;
    double singular_tol;
};

/// Invertibility of K decides semigroup generation, of L group generation;
/// both together make the dynamics Riesz-spectral. Judged by reciprocal
/// condition numbers against singular_tol.
SpectralClassification classify(const ValidatedSystem& sys,
                                double singular_tol = kDefaultSingularTol);

/// sigma_min / sigma_max; 0 for the zero matrix.
double reciprocal_condition(const Eigen::MatrixXcd& A);

}  // namespace hypspec

#endif
