#include "hypspec/system.hpp"

#include <Eigen/SVD>

namespace hypspec {

const char* system_class_name(SystemClass c) {
    switch (c) {
        case SystemClass::NotWellPosed: return "NotWellPosed";
        case SystemClass::SemigroupOnly: return "SemigroupOnly";
        case SystemClass::RieszSpectralGroup: return "RieszSpectralGroup";
    }
    return "?";
}

ValidatedSystem validate_system(SystemSpec spec) {
    if (spec.n < 1) fail(Errc::DimensionMismatch, "n must be >= 1");
    if (spec.M.dim() != spec.n) fail(Errc::DimensionMismatch, "M dimension differs from n");
    if (spec.K.rows() != spec.n || spec.K.cols() != spec.n)
        fail(Errc::DimensionMismatch, "K must be n x n");
    if (spec.L.rows() != spec.n || spec.L.cols() != spec.n)
        fail(Errc::DimensionMismatch, "L must be n x n");

    double eps = spec.lambda0.min_value();
    // spot-check a dense grid independently of the profile's own estimate
    for (int i = 0; i <= 1000; ++i) eps = std::min(eps, spec.lambda0(i / 1000.0));
    if (!(eps > 0.0)) fail(Errc::NonPositiveSpeed, "lambda0 must stay positive on [0,1]");

    ValidatedSystem v;
    v.spec_ = std::move(spec);
    v.eps_ = eps;
    return v;
}

double reciprocal_condition(const Eigen::MatrixXcd& A) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(A);
    const auto& s = svd.singularValues();
    if (s.size() == 0 || s(0) <= 0.0) return 0.0;
    return s(s.size() - 1) / s(0);
}

SpectralClassification classify(const ValidatedSystem& sys, double singular_tol) {
    if (!(singular_tol > 0.0)) fail(Errc::InvalidArgument, "singular_tol must be positive");
    const double rk = reciprocal_condition(sys.K());
    const double rl = reciprocal_condition(sys.L());
    SystemClass tag;
    if (rk <= singular_tol)
        tag = SystemClass::NotWellPosed;
    else if (rl <= singular_tol)
        tag = SystemClass::SemigroupOnly;
    else
        tag = SystemClass::RieszSpectralGroup;
    return {tag, rk, rl, singular_tol};
}

}  // namespace hypspec
