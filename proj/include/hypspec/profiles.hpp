#ifndef HYPSPEC_PROFILES_HPP
#define HYPSPEC_PROFILES_HPP

#include <Eigen/Dense>
#include <vector>

#include "hypspec/errors.hpp"

namespace hypspec {

/// Scalar coefficient profile on [0,1]. Sampled profiles use shape-preserving
/// cubic interpolation so positive node data stays positive between nodes.
class CoefficientProfile {
public:
    enum class Kind { Constant, Affine, SampledGrid };

    static CoefficientProfile constant(double value);
    static CoefficientProfile affine(double a, double b);
    static CoefficientProfile sampled(std::vector<double> nodes, std::vector<double> values);

    double operator()(double zeta) const;

    Kind kind() const { return kind_; }
    /// Estimated lower bound: min over a 1001-point grid plus the nodes.
    double min_value() const { return min_value_; }

    double constant_value() const { return value_; }
    double affine_a() const { return a_; }
    double affine_b() const { return b_; }
    const std::vector<double>& nodes() const { return nodes_; }
    const std::vector<double>& values() const { return values_; }

private:
    CoefficientProfile() = default;
    void record_min();

    Kind kind_ = Kind::Constant;
    double value_ = 0.0;
    double a_ = 0.0, b_ = 0.0;
    std::vector<double> nodes_, values_, slopes_;
    double min_value_ = 0.0;
};

/// n x n complex matrix profile on [0,1]; sampled profiles interpolate
/// entrywise linearly.
class MatrixProfile {
public:
    enum class Kind { Constant, SampledGrid };

    static MatrixProfile constant(Eigen::MatrixXcd entries);
    static MatrixProfile sampled(std::vector<double> nodes, std::vector<Eigen::MatrixXcd> entries);

    Eigen::MatrixXcd operator()(double zeta) const;

    Kind kind() const { return kind_; }
    Eigen::Index dim() const { return dim_; }
    /// Max entry magnitude over the nodes.
    double bound() const { return bound_; }
    const std::vector<double>& nodes() const { return nodes_; }
    const std::vector<Eigen::MatrixXcd>& entries() const { return entries_; }

private:
    MatrixProfile() = default;

    Kind kind_ = Kind::Constant;
    Eigen::Index dim_ = 0;
    std::vector<double> nodes_;
    std::vector<Eigen::MatrixXcd> entries_;
    double bound_ = 0.0;
};

}  // namespace hypspec

#endif
