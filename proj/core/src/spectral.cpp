#include "signbal/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "signbal/error.hpp"
#include "signbal/matrices.hpp"

namespace signbal {

Spectrum eigendecompose_symmetric(const DenseMatrix& m) {
    if (m.rows() != m.cols()) {
        throw Error(ErrorCode::NotSymmetric, "matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
    const Eigen::Index n = m.rows();
    Spectrum out;
    if (n == 0) return out;
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
    if (asym > kSymmetryTolerance * scale) {
        throw Error(ErrorCode::NotSymmetric, "max |M - M^T| = " + std::to_string(asym));
    }

    Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(m, Eigen::ComputeEigenvectors);
    // The solver returns ascending order.
    out.eigenvalues = solver.eigenvalues().reverse();
    out.eigenvectors = solver.eigenvectors().rowwise().reverse();
    for (Eigen::Index k = 0; k < n; ++k) {
        auto col = out.eigenvectors.col(k);
        const double peak = col.cwiseAbs().maxCoeff();
        Eigen::Index pivot = 0;
        while (std::abs(col(pivot)) < peak - kSignTieTolerance) ++pivot;
        if (col(pivot) < 0) col = -col;
    }
    return out;
}

double SpectralTheoremReport::max_eigenvalue_deviation() const noexcept {
    double out = 0.0;
    for (const auto& c : comparisons) out = std::max(out, c.eigenvalue_deviation);
    return out;
}

double SpectralTheoremReport::max_eigenvector_deviation() const noexcept {
    double out = 0.0;
    for (const auto& c : comparisons) out = std::max(out, c.eigenvector_deviation);
    return out;
}

namespace {

// Signed spectrum (lam, u) against the switched unsigned one, where column k
// of the signed side pairs with column partner(k) of the unsigned side.
SpectralComparison compare(const Spectrum& signed_spec, const Spectrum& unsigned_spec, const Bipartition& b,
                           BalanceTarget target) {
    const Eigen::Index n = signed_spec.eigenvalues.size();
    const double sign = target == BalanceTarget::Balanced ? 1.0 : -1.0;
    auto partner = [&](Eigen::Index k) { return target == BalanceTarget::Balanced ? k : n - 1 - k; };

    SpectralComparison out;
    out.target = target;
    for (Eigen::Index k = 0; k < n; ++k) {
        const double dev = std::abs(signed_spec.eigenvalues(k) - sign * unsigned_spec.eigenvalues(partner(k)));
        out.eigenvalue_deviation = std::max(out.eigenvalue_deviation, dev);
    }

    const Vector s = b.indicator();
    Eigen::Index start = 0;
    while (start < n) {
        Eigen::Index end = start + 1;
        while (end < n && signed_spec.eigenvalues(end - 1) - signed_spec.eigenvalues(end) < kDegeneracyGap) ++end;
        if (end - start == 1) {
            const Vector u = signed_spec.eigenvectors.col(start).cwiseAbs();
            const Vector ubar = unsigned_spec.eigenvectors.col(partner(start)).cwiseAbs();
            out.eigenvector_deviation = std::max(out.eigenvector_deviation, (u - ubar).cwiseAbs().maxCoeff());
        } else {
            DenseMatrix us = signed_spec.eigenvectors.middleCols(start, end - start);
            DenseMatrix ub(n, end - start);
            for (Eigen::Index k = start; k < end; ++k) {
                ub.col(k - start) = s.asDiagonal() * unsigned_spec.eigenvectors.col(partner(k));
            }
            const DenseMatrix diff = us * us.transpose() - ub * ub.transpose();
            out.eigenvector_deviation = std::max(out.eigenvector_deviation, diff.cwiseAbs().maxCoeff());
        }
        start = end;
    }
    return out;
}

Bipartition sign_pattern(const Vector& v) {
    std::vector<int> signs(static_cast<std::size_t>(v.size()));
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        signs[static_cast<std::size_t>(i)] = (std::abs(v(i)) < kEigenvectorSignTolerance || v(i) > 0) ? 1 : -1;
    }
    return Bipartition(std::move(signs)).normalized();
}

double half_total_degree(const SignedGraph& g) { return degree_vector(g).total / 2.0; }

}  // namespace

SpectralTheoremReport verify_spectral_theorem(const SignedGraph& g, const BalanceClassification& c) {
    if (!c.balanced() && !c.antibalanced()) {
        throw Error(ErrorCode::WrongVerdict, "graph is strictly unbalanced");
    }
    const Spectrum signed_spec = eigendecompose_symmetric(g.weights());
    const Spectrum unsigned_spec = eigendecompose_symmetric(g.weights().cwiseAbs());
    SpectralTheoremReport report;
    if (c.balanced()) {
        report.comparisons.push_back(compare(signed_spec, unsigned_spec, *c.balanced_partition, BalanceTarget::Balanced));
    }
    if (c.antibalanced()) {
        report.comparisons.push_back(
            compare(signed_spec, unsigned_spec, *c.antibalanced_partition, BalanceTarget::Antibalanced));
    }
    return report;
}

Bipartition leading_eigenpair_pattern(const SignedGraph& g, const BalanceClassification& c) {
    if (!c.balanced() && !c.antibalanced()) {
        throw Error(ErrorCode::WrongVerdict, "graph is strictly unbalanced");
    }
    if (two_coloring(g)) {
        throw Error(ErrorCode::Bipartite, "|W| is bipartite, so +rho and -rho are both eigenvalues of W");
    }
    const Spectrum eig = eigendecompose_symmetric(g.weights());
    const Eigen::Index col = c.balanced() ? 0 : eig.eigenvalues.size() - 1;
    return sign_pattern(eig.eigenvectors.col(col));
}

BipartitePatterns bipartite_eigenpair_patterns(const SignedGraph& g) {
    const auto coloring = two_coloring(g);
    if (!coloring) throw Error(ErrorCode::NotBipartite, "graph has an odd cycle");
    if (!balance_certificate(g)) throw Error(ErrorCode::WrongVerdict, "bipartite graph is not balanced");
    const Spectrum eig = eigendecompose_symmetric(g.weights());
    const Eigen::Index n = eig.eigenvalues.size();
    const Bipartition balanced = sign_pattern(eig.eigenvectors.col(0));
    return BipartitePatterns{*coloring, balanced, coloring->product(balanced).normalized(), eig.eigenvalues(0),
                             std::abs(eig.eigenvalues(0) + eig.eigenvalues(n - 1))};
}

BalanceMeasures strict_unbalance_contraction(const SignedGraph& g) {
    const Spectrum p = eigendecompose_symmetric(symmetrized_transition(g));
    const Eigen::Index n = p.eigenvalues.size();
    const Vector w = eigendecompose_symmetric(g.weights()).eigenvalues;
    const Vector wbar = eigendecompose_symmetric(g.weights().cwiseAbs()).eigenvalues;

    BalanceMeasures out;
    // Spectrum of L_rw is {1 - lambda : lambda in the spectrum of P_sym}.
    out.d_b = 1.0 - p.eigenvalues(0);
    out.d_a = 1.0 + p.eigenvalues(n - 1);
    out.rho_signed = std::max(std::abs(w(0)), std::abs(w(n - 1)));
    out.rho_unsigned = std::max(std::abs(wbar(0)), std::abs(wbar(n - 1)));
    out.contraction = out.rho_unsigned - out.rho_signed;
    return out;
}

PerronVectors perron_vectors_balanced(const SignedGraph& g, const Bipartition& b) {
    if (b.size() != g.node_count() || !satisfies_balance(g, b)) {
        throw Error(ErrorCode::NotBalanced, "the given partition does not certify balance");
    }
    const Vector s = b.indicator();
    return PerronVectors{s, s.cwiseProduct(degree_vector(g).d)};
}

PerturbationEstimate perturbation_estimate(const SignedGraph& g, std::span<const Edge> flips) {
    if (!balance_certificate(g)) throw Error(ErrorCode::NotBalanced, "graph is not balanced");
    const SignedGraph flipped = flip_edges(g, flips);

    PerturbationEstimate out;
    out.target = BalanceTarget::Balanced;
    for (const auto& f : flips) out.flipped_weight += std::abs(g.weights()(static_cast<Eigen::Index>(f.i), static_cast<Eigen::Index>(f.j)));
    out.m = half_total_degree(g);
    out.predicted = -2.0 * out.flipped_weight / out.m;
    out.realized = eigendecompose_symmetric(symmetrized_transition(flipped)).eigenvalues(0) - 1.0;
    return out;
}

PerturbationEstimate antibalanced_perturbation_estimate(const SignedGraph& g, std::span<const Edge> flips) {
    const SignedGraph negated = negate(g);
    if (!balance_certificate(negated)) throw Error(ErrorCode::NotBalanced, "graph is not antibalanced");
    PerturbationEstimate out = perturbation_estimate(negated, flips);
    // P(-G) = -P(G), so lambda_min(P') + 1 = -(lambda_max(P(-G')) - 1).
    out.target = BalanceTarget::Antibalanced;
    out.predicted = -out.predicted;
    out.realized = -out.realized;
    return out;
}

}  // namespace signbal
