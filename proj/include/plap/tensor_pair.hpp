#ifndef PLAP_TENSOR_PAIR_HPP
#define PLAP_TENSOR_PAIR_HPP

#include <span>
#include <vector>

#include "plap/graph.hpp"

namespace plap {

/// The symmetric tensor pair (T^(p), B^(p)) equivalent to the p-Laplacian
/// eigenproblem for even p. Storage is factored by support: a per-vertex
/// diagonal d_i = sum_{j~i} w_ij + kappa_i and per-edge coefficients; entries
/// with three or more distinct indices are zero, so nothing dense is ever
/// materialized.
class SparseSymmetricTensorPair {
public:
    int order() const { return p_; }
    int dim() const { return n_; }

    /// Entry oracle for T^(p). Takes exactly p indices in [0, n).
    ///   - 0 when the index multiset has >= 3 distinct values;
    ///   - 0 for pattern {i^(l), j^(p-l)} with i not adjacent to j;
    ///   - (-sigma_ij)^{p-l} w_ij for pattern {i^(l), j^(p-l)} with i ~ j;
    ///   - sum_{j~i} w_ij + kappa_i on the all-i diagonal.
    double entry_T(std::span<const int> indices) const;

    /// Entry oracle for B^(p): mu_i on the all-i diagonal, 0 elsewhere.
    double entry_B(std::span<const int> indices) const;

    /// (Tf)_i by the binomial expansion
    ///   (kappa_i + sum_{j~i} w_ij) f_i^{p-1}
    ///   + sum_{j~i} sum_{l=1}^{p-1} C(p-1,l) (-sigma_ij)^l w_ij f_i^{p-1-l} f_j^l.
    /// Independent of apply_p_laplacian; equals mu_i (Delta_p f)_i.
    VertexFunction tensor_apply(const VertexFunction& f) const;

    /// Brute-force contraction sum over all n^{p-1} index tuples through the
    /// entry oracle. Testing oracle; throws TooLarge when n^{p-1} > 10^6.
    VertexFunction tensor_apply_naive(const VertexFunction& f) const;

    /// (Bf)_i = mu_i f_i^{p-1}.
    VertexFunction b_apply(const VertexFunction& f) const;

    friend SparseSymmetricTensorPair build_tensor_pair(const SignedGraph& g, int p);

private:
    SparseSymmetricTensorPair() = default;

    // w and sigma of the edge {i,j}, or nullptr when i and j are not adjacent
    const HalfEdge* find_edge(int i, int j) const;

    int p_ = 0;
    int n_ = 0;
    std::vector<double> diag_;    // d_i = sum_{j~i} w_ij + kappa_i
    std::vector<double> b_diag_;  // mu_i
    std::vector<double> binom_;   // C(p-1, l), l = 0..p-1, exact
    std::vector<int> adj_start_;  // neighbor lists sorted by vertex
    std::vector<HalfEdge> adj_;
};

/// Builds (T^(p), B^(p)) per the even-p equivalence. Throws OddP for odd p,
/// BadParams for p < 2 or p > 30 (binomials are kept exact in 64-bit).
SparseSymmetricTensorPair build_tensor_pair(const SignedGraph& g, int p);

}  // namespace plap

#endif
