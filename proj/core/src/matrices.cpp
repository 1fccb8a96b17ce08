#include "signbal/matrices.hpp"

namespace signbal {

namespace {

Eigen::Index dim(const SignedGraph& g) { return static_cast<Eigen::Index>(g.node_count()); }

}  // namespace

DenseMatrix sign_adjacency(const SignedGraph& g) {
    return g.weights().unaryExpr([](double w) { return w > 0 ? 1.0 : (w < 0 ? -1.0 : 0.0); });
}

DenseMatrix positive_part(const SignedGraph& g) {
    return g.weights().cwiseMax(0.0);
}

DenseMatrix negative_part(const SignedGraph& g) {
    return (-g.weights()).cwiseMax(0.0);
}

DenseMatrix signed_laplacian(const SignedGraph& g) {
    const auto deg = degree_vector(g);
    DenseMatrix l = -g.weights();
    l.diagonal() += deg.d;
    return l;
}

DenseMatrix random_walk_laplacian(const SignedGraph& g) {
    return DenseMatrix::Identity(dim(g), dim(g)) - transition_matrix(g);
}

DenseMatrix transition_matrix(const SignedGraph& g) {
    const auto deg = degree_vector(g);
    return deg.d.cwiseInverse().asDiagonal() * g.weights();
}

DenseMatrix symmetrized_transition(const SignedGraph& g) {
    const auto deg = degree_vector(g);
    const Vector s = deg.d.cwiseSqrt().cwiseInverse();
    return s.asDiagonal() * g.weights() * s.asDiagonal();
}

DenseMatrix doubled_adjacency(const SignedGraph& g) {
    const Eigen::Index n = dim(g);
    const DenseMatrix wp = positive_part(g);
    const DenseMatrix wm = negative_part(g);
    DenseMatrix out(2 * n, 2 * n);
    out.topLeftCorner(n, n) = wp;
    out.topRightCorner(n, n) = wm;
    out.bottomLeftCorner(n, n) = wm;
    out.bottomRightCorner(n, n) = wp;
    return out;
}

DenseMatrix doubled_transition(const SignedGraph& g) {
    const auto deg = degree_vector(g);
    Vector d2(2 * dim(g));
    d2 << deg.d, deg.d;
    return d2.cwiseInverse().asDiagonal() * doubled_adjacency(g);
}

DenseMatrix symmetrized_doubled_transition(const SignedGraph& g) {
    const auto deg = degree_vector(g);
    Vector d2(2 * dim(g));
    d2 << deg.d, deg.d;
    const Vector s = d2.cwiseSqrt().cwiseInverse();
    return s.asDiagonal() * doubled_adjacency(g) * s.asDiagonal();
}

}  // namespace signbal
