#pragma once

#include <span>
#include <vector>

#include "signbal/balance.hpp"
#include "signbal/graph.hpp"

namespace signbal {

/// Eigenvalues in descending order; column k of `eigenvectors` pairs with
/// eigenvalues(k). Each eigenvector has its largest-magnitude entry positive
/// (ties within kSignTieTolerance go to the lowest index).
struct Spectrum {
    Vector eigenvalues;
    DenseMatrix eigenvectors;
};

inline constexpr double kSymmetryTolerance = 1e-12;
inline constexpr double kSignTieTolerance = 1e-12;

/// Eigenvalues closer than this are treated as one eigenspace when comparing
/// eigenvectors.
inline constexpr double kDegeneracyGap = 1e-8;

/// Throws NotSymmetric if |M - M^T| exceeds kSymmetryTolerance (relative to
/// max(1, max |M_ij|)).
[[nodiscard]] Spectrum eigendecompose_symmetric(const DenseMatrix& m);

struct SpectralComparison {
    BalanceTarget target = BalanceTarget::Balanced;
    double eigenvalue_deviation = 0.0;   // max_k |lambda_k(W) -/+ lambda_bar_k'|
    double eigenvector_deviation = 0.0;  // max entrywise gap of |u_k| vs |u_bar_k'|, or of projectors on degenerate blocks
};

struct SpectralTheoremReport {
    std::vector<SpectralComparison> comparisons;  // one per structure present in the classification

    [[nodiscard]] double max_eigenvalue_deviation() const noexcept;
    [[nodiscard]] double max_eigenvector_deviation() const noexcept;
};

/// Compares the spectrum of W with that of |W|: equal for balanced graphs,
/// negated and reversed for antibalanced graphs, eigenvectors related by the
/// switching matrix of the certificate. Throws WrongVerdict when neither
/// structure is present.
[[nodiscard]] SpectralTheoremReport verify_spectral_theorem(const SignedGraph& g, const BalanceClassification& c);

/// Sign pattern of u_1 (balanced) or u_n (antibalanced), normalized to s_0 = +1.
/// Throws Bipartite when |W| is bipartite (use bipartite_eigenpair_patterns)
/// and WrongVerdict for strictly unbalanced graphs.
[[nodiscard]] Bipartition leading_eigenpair_pattern(const SignedGraph& g, const BalanceClassification& c);

/// For a bipartite graph that is balanced (hence also antibalanced) the
/// eigenvalues +rho and -rho of W are both simple. The sign pattern of u_1 is
/// the balance certificate and the product with the two-colouring is the
/// antibalance certificate.
struct BipartitePatterns {
    Bipartition coloring;
    Bipartition balanced;
    Bipartition antibalanced;
    double rho = 0.0;
    double pair_deviation = 0.0;  // |lambda_1 + lambda_n|, zero up to rounding
};

/// Throws NotBipartite for non-bipartite input and WrongVerdict if the graph is
/// not balanced.
[[nodiscard]] BipartitePatterns bipartite_eigenpair_patterns(const SignedGraph& g);

struct BalanceMeasures {
    double d_b = 0.0;  // smallest eigenvalue of L_rw
    double d_a = 0.0;  // 2 - largest eigenvalue of L_rw
    double rho_signed = 0.0;
    double rho_unsigned = 0.0;
    double contraction = 0.0;  // rho_unsigned - rho_signed
};

/// Distance measures and spectral radii. L_rw is handled through I - P_sym.
[[nodiscard]] BalanceMeasures strict_unbalance_contraction(const SignedGraph& g);

struct PerronVectors {
    Vector right;  // u_b = s
    Vector left;   // w_b = s (.) d
};

/// Eigenvectors of P at eigenvalue 1 for a balanced graph. Throws NotBalanced
/// if b does not certify g.
[[nodiscard]] PerronVectors perron_vectors_balanced(const SignedGraph& g, const Bipartition& b);

/// First-order shift of the extreme eigenvalue of P after flipping edges of a
/// balanced (target Balanced) or antibalanced (target Antibalanced) graph,
/// next to the shift actually realized by the flipped graph.
///
/// Balanced: predicted = -2 * flipped_weight / m, realized = lambda_max(P') - 1.
/// Antibalanced: predicted = +2 * flipped_weight / m, realized = lambda_min(P') + 1.
struct PerturbationEstimate {
    BalanceTarget target = BalanceTarget::Balanced;
    double predicted = 0.0;
    double realized = 0.0;
    double flipped_weight = 0.0;
    double m = 0.0;  // half the total degree
};

/// Throws NotBalanced if g is not balanced and EdgeNotPresent for a flip that
/// is not an edge.
[[nodiscard]] PerturbationEstimate perturbation_estimate(const SignedGraph& g, std::span<const Edge> flips);

/// The antibalanced dual, computed on the negated graph. Throws NotBalanced if
/// g is not antibalanced.
[[nodiscard]] PerturbationEstimate antibalanced_perturbation_estimate(const SignedGraph& g, std::span<const Edge> flips);

}  // namespace signbal
