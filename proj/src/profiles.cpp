#include "hypspec/profiles.hpp"

#include <algorithm>
#include <cmath>

#include "hypspec/interpolation.hpp"

namespace hypspec {

void CoefficientProfile::record_min() {
    double m = (*this)(0.0);
    for (int i = 1; i <= 1000; ++i) m = std::min(m, (*this)(i / 1000.0));
    for (double z : nodes_) m = std::min(m, (*this)(z));
    min_value_ = m;
}

CoefficientProfile CoefficientProfile::constant(double value) {
    CoefficientProfile p;
    p.kind_ = Kind::Constant;
    p.value_ = value;
    p.min_value_ = value;
    return p;
}

CoefficientProfile CoefficientProfile::affine(double a, double b) {
    CoefficientProfile p;
    p.kind_ = Kind::Affine;
    p.a_ = a;
    p.b_ = b;
    p.min_value_ = std::min(a, a + b);  // affine: extrema at the endpoints
    return p;
}

CoefficientProfile CoefficientProfile::sampled(std::vector<double> nodes,
                                               std::vector<double> values) {
    if (nodes.size() != values.size() || nodes.size() < 2)
        fail(Errc::DimensionMismatch, "sampled profile needs matching nodes/values, >= 2 points");
    if (nodes.front() != 0.0 || nodes.back() != 1.0)
        fail(Errc::NonIncreasingGrid, "profile nodes must start at 0 and end at 1");
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i)
        if (!(nodes[i] < nodes[i + 1]))
            fail(Errc::NonIncreasingGrid, "profile nodes must be strictly increasing");
    CoefficientProfile p;
    p.kind_ = Kind::SampledGrid;
    p.nodes_ = std::move(nodes);
    p.values_ = std::move(values);
    p.slopes_ = pchip_slopes(p.nodes_, p.values_);
    p.record_min();
    return p;
}

double CoefficientProfile::operator()(double zeta) const {
    switch (kind_) {
        case Kind::Constant:
            return value_;
        case Kind::Affine:
            return a_ + b_ * zeta;
        case Kind::SampledGrid: {
            auto it = std::upper_bound(nodes_.begin(), nodes_.end(), zeta);
            std::ptrdiff_t i = it - nodes_.begin() - 1;
            i = std::clamp<std::ptrdiff_t>(i, 0, static_cast<std::ptrdiff_t>(nodes_.size()) - 2);
            const std::size_t s = static_cast<std::size_t>(i);
            if (zeta == nodes_[s]) return values_[s];  // endpoint samples exact
            if (zeta == nodes_[s + 1]) return values_[s + 1];
            return hermite_eval(nodes_[s], nodes_[s + 1], values_[s], values_[s + 1], slopes_[s],
                                slopes_[s + 1], zeta);
        }
    }
    return 0.0;
}

MatrixProfile MatrixProfile::constant(Eigen::MatrixXcd entries) {
    if (entries.rows() != entries.cols() || entries.rows() < 1)
        fail(Errc::DimensionMismatch, "matrix profile must be square");
    MatrixProfile p;
    p.kind_ = Kind::Constant;
    p.dim_ = entries.rows();
    p.bound_ = entries.cwiseAbs().maxCoeff();
    p.entries_.push_back(std::move(entries));
    return p;
}

MatrixProfile MatrixProfile::sampled(std::vector<double> nodes,
                                     std::vector<Eigen::MatrixXcd> entries) {
    if (nodes.size() != entries.size() || nodes.size() < 2)
        fail(Errc::DimensionMismatch, "sampled matrix profile needs matching nodes/entries");
    if (nodes.front() != 0.0 || nodes.back() != 1.0)
        fail(Errc::NonIncreasingGrid, "matrix profile nodes must start at 0 and end at 1");
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i)
        if (!(nodes[i] < nodes[i + 1]))
            fail(Errc::NonIncreasingGrid, "matrix profile nodes must be strictly increasing");
    const Eigen::Index d = entries.front().rows();
    double bound = 0.0;
    for (const auto& e : entries) {
        if (e.rows() != d || e.cols() != d)
            fail(Errc::DimensionMismatch, "matrix profile entries must share one square size");
        bound = std::max(bound, e.cwiseAbs().maxCoeff());
    }
    MatrixProfile p;
    p.kind_ = Kind::SampledGrid;
    p.dim_ = d;
    p.nodes_ = std::move(nodes);
    p.entries_ = std::move(entries);
    p.bound_ = bound;
    return p;
}

Eigen::MatrixXcd MatrixProfile::operator()(double zeta) const {
    if (kind_ == Kind::Constant) return entries_.front();
    auto it = std::upper_bound(nodes_.begin(), nodes_.end(), zeta);
    std::ptrdiff_t i = it - nodes_.begin() - 1;
    i = std::clamp<std::ptrdiff_t>(i, 0, static_cast<std::ptrdiff_t>(nodes_.size()) - 2);
    const std::size_t s = static_cast<std::size_t>(i);
    const double t = (zeta - nodes_[s]) / (nodes_[s + 1] - nodes_[s]);
    return (1.0 - t) * entries_[s] + t * entries_[s + 1];
}

}  // namespace hypspec
