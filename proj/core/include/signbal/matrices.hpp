#pragma once

#include "signbal/graph.hpp"

namespace signbal {

/// A_ij = sign(W_ij) in {-1, 0, 1}.
[[nodiscard]] DenseMatrix sign_adjacency(const SignedGraph& g);

/// W+ and W-: entrywise nonnegative, disjoint supports, W = W+ - W-.
[[nodiscard]] DenseMatrix positive_part(const SignedGraph& g);
[[nodiscard]] DenseMatrix negative_part(const SignedGraph& g);

/// L = D - W.
[[nodiscard]] DenseMatrix signed_laplacian(const SignedGraph& g);

/// L_rw = I - D^-1 W.
[[nodiscard]] DenseMatrix random_walk_laplacian(const SignedGraph& g);

/// P = D^-1 W. Each row has absolute sum 1.
[[nodiscard]] DenseMatrix transition_matrix(const SignedGraph& g);

/// P_sym = D^-1/2 W D^-1/2, symmetric and similar to P.
[[nodiscard]] DenseMatrix symmetrized_transition(const SignedGraph& g);

/// W(2) = [W+, W-; W-, W+], the adjacency of the two-species graph.
[[nodiscard]] DenseMatrix doubled_adjacency(const SignedGraph& g);

/// P(2) = D(2)^-1 W(2). Nonnegative with unit row sums; a row vector
/// [x+, x-] evolves as [x+, x-] P(2).
[[nodiscard]] DenseMatrix doubled_transition(const SignedGraph& g);

/// D(2)^-1/2 W(2) D(2)^-1/2, the symmetric form of P(2).
[[nodiscard]] DenseMatrix symmetrized_doubled_transition(const SignedGraph& g);

}  // namespace signbal
