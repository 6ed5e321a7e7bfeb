#include "hypspec/spectrum.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace hypspec {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Unit norm, first component with magnitude > tol rotated to positive real;
/// falls back to the largest-magnitude component.
void normalize_direction(Eigen::VectorXcd& v, double tol) {
    const double nrm = v.norm();
    if (nrm == 0.0) return;
    v /= nrm;
    Eigen::Index pick = -1;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (std::abs(v[i]) > tol) {
            pick = i;
            break;
        }
    }
    if (pick < 0) {
        double best = -1.0;
        for (Eigen::Index i = 0; i < v.size(); ++i)
            if (std::abs(v[i]) > best) {
                best = std::abs(v[i]);
                pick = i;
            }
    }
    const std::complex<double> ph = v[pick] / std::abs(v[pick]);
    v /= ph;
}

/// Columns spanning ker(B) at the given absolute singular-value cutoff.
Eigen::MatrixXcd null_space(const Eigen::MatrixXcd& B, double cutoff) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(B, Eigen::ComputeFullV);
    const auto& s = svd.singularValues();
    int rank = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i)
        if (s(i) > cutoff) ++rank;
    return svd.matrixV().rightCols(B.cols() - rank);
}

/// Component of u orthogonal to the columns of Q (Q orthonormal).
Eigen::VectorXcd deflate(const Eigen::MatrixXcd& Q, const Eigen::VectorXcd& u) {
    if (Q.cols() == 0) return u;
    return u - Q * (Q.adjoint() * u);
}

void append_column(Eigen::MatrixXcd& Q, const Eigen::VectorXcd& u) {
    Q.conservativeResize(u.size(), Q.cols() + 1);
    Q.col(Q.cols() - 1) = u / u.norm();
}

std::vector<JordanChain> build_chains(const Eigen::MatrixXcd& A_d, std::complex<double> rho,
                                      int alg_mult, double rank_tol, int* geom_mult_out) {
    const Eigen::Index n = A_d.rows();
    const Eigen::MatrixXcd B =
        rho * Eigen::MatrixXcd::Identity(n, n) - A_d;

    // null-space dimensions of B^j until the algebraic multiplicity is filled
    std::vector<Eigen::MatrixXcd> powers{Eigen::MatrixXcd::Identity(n, n)};
    std::vector<int> dims{0};
    std::vector<Eigen::MatrixXcd> kernels{Eigen::MatrixXcd(n, 0)};
    int p = 0;
    while (dims.back() < alg_mult && p < alg_mult) {
        ++p;
        powers.push_back(powers.back() * B);
        const double cutoff = rank_tol * std::max(1.0, powers.back().norm());
        Eigen::MatrixXcd ker = null_space(powers.back(), cutoff);
        kernels.push_back(ker);
        dims.push_back(static_cast<int>(ker.cols()));
        if (dims.back() <= dims[dims.size() - 2] && dims.back() < alg_mult)
            fail(Errc::EigDecompFailure, "Jordan structure does not close at the rank tolerance");
    }
    if (geom_mult_out) *geom_mult_out = dims.size() > 1 ? dims[1] : 0;

    std::vector<JordanChain> chains;
    for (int level = p; level >= 1; --level) {
        // vectors already occupying this level: B-images of longer chains
        Eigen::MatrixXcd occupied = kernels[static_cast<std::size_t>(level - 1)];
        // orthonormal basis of ker(B^{level-1}) + images
        Eigen::MatrixXcd Q(n, 0);
        for (Eigen::Index c = 0; c < occupied.cols(); ++c) {
            Eigen::VectorXcd r = deflate(Q, occupied.col(c));
            if (r.norm() > rank_tol) append_column(Q, r);
        }
        int present = 0;
        for (const auto& ch : chains) {
            if (ch.length() > level) {
                Eigen::VectorXcd img = ch.vectors[static_cast<std::size_t>(ch.length() - level)];
                Eigen::VectorXcd r = deflate(Q, img);
                if (r.norm() > rank_tol * img.norm()) append_column(Q, r);
                ++present;
            }
        }
        const int want = dims[static_cast<std::size_t>(level)] -
                         dims[static_cast<std::size_t>(level - 1)] - present;
        const Eigen::MatrixXcd& candidates = kernels[static_cast<std::size_t>(level)];
        for (int added = 0; added < want;) {
            // pick the candidate with the largest deflated residual
            Eigen::VectorXcd best;
            double best_norm = -1.0;
            for (Eigen::Index c = 0; c < candidates.cols(); ++c) {
                Eigen::VectorXcd r = deflate(Q, candidates.col(c));
                if (r.norm() > best_norm) {
                    best_norm = r.norm();
                    best = r;
                }
            }
            if (best_norm <= rank_tol)
                fail(Errc::EigDecompFailure, "failed to complete a Jordan chain basis");
            normalize_direction(best, rank_tol);
            JordanChain ch;
            ch.vectors.push_back(best);
            for (int j = 1; j < level; ++j) ch.vectors.push_back(B * ch.vectors.back());
            chains.push_back(std::move(ch));
            append_column(Q, chains.back().vectors.front());
            ++added;
        }
    }
    // deterministic order: longest chains first
    std::stable_sort(chains.begin(), chains.end(),
                     [](const JordanChain& a, const JordanChain& b) {
                         return a.length() > b.length();
                     });
    return chains;
}

}  // namespace

bool BoundaryEigenStructure::diagonalizable() const {
    for (const auto& g : groups)
        if (g.geom_mult != g.alg_mult) return false;
    return true;
}

const EigenvalueGroup& BoundaryEigenStructure::group(int k) const {
    if (k < 1 || k > n_distinct()) fail(Errc::OutOfRange, "eigenvalue index k outside 1..n_distinct");
    return groups[static_cast<std::size_t>(k - 1)];
}

Eigen::MatrixXcd boundary_matrix(const ValidatedSystem& sys, const Eigen::MatrixXcd& P1) {
    if (P1.rows() != sys.n() || P1.cols() != sys.n())
        fail(Errc::DimensionMismatch, "P(1) must be n x n");
    if (reciprocal_condition(sys.K()) <= kDefaultSingularTol)
        fail(Errc::SingularK, "K is numerically singular; no boundary matrix");
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(sys.K());
    return -(lu.solve(sys.L() * P1));
}

BoundaryEigenStructure eigen_structure(const Eigen::MatrixXcd& A_d, double rank_tol) {
    if (!(rank_tol > 0.0)) fail(Errc::InvalidArgument, "rank_tol must be positive");
    if (A_d.rows() != A_d.cols() || A_d.rows() < 1)
        fail(Errc::DimensionMismatch, "A_d must be square");
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> eig(A_d, true);
    if (eig.info() != Eigen::Success) fail(Errc::EigDecompFailure, "QR iteration failed on A_d");

    const Eigen::Index n = A_d.rows();
    const Eigen::VectorXcd vals = eig.eigenvalues();

    // cluster by |rho_i - rho_j| <= rank_tol * max(1, |rho_i|), transitively
    std::vector<int> label(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<int>> clusters;
    for (Eigen::Index i = 0; i < n; ++i) {
        if (label[static_cast<std::size_t>(i)] >= 0) continue;
        std::vector<int> cl{static_cast<int>(i)};
        label[static_cast<std::size_t>(i)] = static_cast<int>(clusters.size());
        for (std::size_t c = 0; c < cl.size(); ++c) {
            for (Eigen::Index j = 0; j < n; ++j) {
                if (label[static_cast<std::size_t>(j)] >= 0) continue;
                const double gap = std::abs(vals(cl[c]) - vals(j));
                if (gap <= rank_tol * std::max(1.0, std::abs(vals(cl[c])))) {
                    label[static_cast<std::size_t>(j)] = static_cast<int>(clusters.size());
                    cl.push_back(static_cast<int>(j));
                }
            }
        }
        clusters.push_back(std::move(cl));
    }

    BoundaryEigenStructure es;
    es.A_d = A_d;
    es.rank_tol = rank_tol;
    for (const auto& cl : clusters) {
        EigenvalueGroup g;
        std::complex<double> mean(0.0, 0.0);
        for (int idx : cl) mean += vals(idx);
        g.rho = mean / static_cast<double>(cl.size());
        g.abs_rho = std::abs(g.rho);
        g.theta = std::arg(g.rho);
        if (g.theta < 0.0) g.theta += kTwoPi;
        if (g.theta >= kTwoPi) g.theta = 0.0;
        g.alg_mult = static_cast<int>(cl.size());
        if (g.alg_mult == 1) {
            g.geom_mult = 1;
            JordanChain ch;
            Eigen::VectorXcd v = eig.eigenvectors().col(cl.front());
            normalize_direction(v, rank_tol);
            ch.vectors.push_back(std::move(v));
            g.chains.push_back(std::move(ch));
        } else {
            g.chains = build_chains(A_d, g.rho, g.alg_mult, rank_tol, &g.geom_mult);
        }
        es.groups.push_back(std::move(g));
    }
    // deterministic group order: decreasing |rho|, then increasing theta
    std::stable_sort(es.groups.begin(), es.groups.end(),
                     [](const EigenvalueGroup& a, const EigenvalueGroup& b) {
                         if (a.abs_rho != b.abs_rho) return a.abs_rho > b.abs_rho;
                         return a.theta < b.theta;
                     });
    return es;
}

std::complex<double> mode_eigenvalue(const BoundaryEigenStructure& es, double eta1, int k,
                                     long l) {
    const EigenvalueGroup& g = es.group(k);
    if (!(g.abs_rho > 0.0))
        fail(Errc::ZeroEigenvalue, "rho_k = 0 has no finite lattice eigenvalue");
    const double re = std::log(g.abs_rho) / eta1;
    // single-rounding evaluation keeps consecutive lattice points consistent
    const double im = std::fma(kTwoPi / eta1, static_cast<double>(l), g.theta / eta1);
    return {re, im};
}

double growth_bound(const BoundaryEigenStructure& es, double eta1) {
    double m = -std::numeric_limits<double>::infinity();
    for (const auto& g : es.groups) m = std::max(m, std::log(g.abs_rho));
    return m / eta1;
}

bool stability_verdict(const BoundaryEigenStructure& es) {
    for (const auto& g : es.groups)
        if (!(g.abs_rho < 1.0)) return false;
    return true;
}

SpectrumResult analyze_spectrum(const ValidatedSystem& sys, const GeometryTables& geom,
                                const SimilaritySolution& sim, double rank_tol,
                                double singular_tol) {
    SpectrumResult sr;
    sr.classification = classify(sys, singular_tol);
    if (sr.classification.tag == SystemClass::NotWellPosed)
        fail(Errc::SingularK, "K singular: dynamics does not generate a semigroup");
    sr.es = eigen_structure(boundary_matrix(sys, sim.P1), rank_tol);
    sr.eta1 = geom.eta1();
    if (sr.classification.tag == SystemClass::RieszSpectralGroup) {
        sr.growth_bound = growth_bound(sr.es, sr.eta1);
        sr.stable = stability_verdict(sr.es);
    } else {
        // lattice formulas need every rho_k nonzero; only the Riesz case has that
        sr.growth_bound = std::numeric_limits<double>::quiet_NaN();
        sr.stable = false;
    }
    return sr;
}

std::vector<std::pair<ModeIndex, std::complex<double>>> enumerate_modes(const SpectrumResult& sr,
                                                                        long l_max) {
    if (l_max < 0) fail(Errc::InvalidArgument, "l_max must be >= 0");
    std::vector<std::pair<ModeIndex, std::complex<double>>> out;
    for (int k = 1; k <= sr.es.n_distinct(); ++k)
        for (long l = -l_max; l <= l_max; ++l)
            out.emplace_back(ModeIndex{k, l, 1}, sr.lattice(k, l));
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.second.real() != b.second.real()) return a.second.real() > b.second.real();
        const double ia = std::abs(a.second.imag()), ib = std::abs(b.second.imag());
        if (ia != ib) return ia < ib;
        if (a.first.k != b.first.k) return a.first.k < b.first.k;
        return a.first.l < b.first.l;
    });
    return out;
}

}  // namespace hypspec
