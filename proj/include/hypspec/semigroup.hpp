#ifndef HYPSPEC_SEMIGROUP_HPP
#define HYPSPEC_SEMIGROUP_HPP

#include <vector>

#include "hypspec/eigenfunctions.hpp"
#include "hypspec/spectrum.hpp"

namespace hypspec {

enum class SimMethod { Oracle, Modal };

struct SimulationResult {
    std::vector<double> times;
    std::vector<double> grid;
    std::vector<StateField> states;  // one field per time
    SimMethod method = SimMethod::Oracle;
    long l_max = 0;
};

/// Exact evolution of z_t = -(lambda0 z)_zeta with w(0,t) = A_d w(eta1,t):
/// w = lambda0 z transports at unit speed in the travel-time coordinate, so
///   z(zeta,t) = A_d^m w0(eta(zeta) - t + m eta1) / lambda0(zeta),
///   m = ceil((t - eta(zeta))/eta1) clamped to m >= 0.
/// w0 between nodes comes from cubic interpolation in eta.
class CharacteristicsOracle {
public:
    CharacteristicsOracle(const ValidatedSystem& sys, const Eigen::MatrixXcd& A_d,
                          const GeometryTables& geom, const StateField& z0);

    StateField state_at(double t) const;  // throws NegativeTime

private:
    Eigen::VectorXcd w0_at(double eta) const;

    const GeometryTables* geom_;
    Eigen::MatrixXcd A_d_;
    std::vector<double> lambda0_nodes_;
    StateField w0_;
    mutable std::vector<Eigen::MatrixXcd> powers_;  // A_d^m cache
};

/// One-shot oracle evaluation (A_d built from the similarity solution).
StateField characteristics_oracle(const ValidatedSystem& sys, const SimilaritySolution& sim,
                                  const GeometryTables& geom, const StateField& z0, double t);

/// Truncated expansion sum_{k,|l|<=l_max} c_kl e^{mu_kl t} phi_kl(zeta);
/// diagonalizable systems only.
StateField modal_simulate(const SpectrumResult& sr, const WeightMatrix& W,
                          const GeometryTables& geom, const StateField& z0, double t, long l_max);

/// Same, reusing precomputed coefficients.
StateField modal_state(const SpectrumResult& sr, const WeightMatrix& W,
                       const GeometryTables& geom, const ModalCoefficients& coeff, double t,
                       long l_max);

/// Evolve the original variables: ztilde -> z = P^{-1} ztilde, evolve, map back.
StateField simulate_original(const ValidatedSystem& sys, const SimilaritySolution& sim,
                             const SpectrumResult& sr, const GeometryTables& geom,
                             const StateField& ztilde0, double t, SimMethod method, long l_max = 0);

/// sqrt(int lambda0 |f|^2), the state-space norm.
double state_norm(const StateField& f, const GeometryTables& geom);

struct FieldError {
    double abs_l2;
    double rel_l2;  // relative to the first argument's norm
};

FieldError compare_methods(const StateField& reference, const StateField& other,
                           const GeometryTables& geom);

}  // namespace hypspec

#endif
