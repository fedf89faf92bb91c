#ifndef PLAP_GENERATORS_HPP
#define PLAP_GENERATORS_HPP

#include <cstdint>

#include "plap/graph.hpp"

namespace plap {

// Named graph families. All generators produce w == 1, mu == 1, kappa == 0
// and the given signature (default -1, the signless convention the largest-
// eigenpair solver needs).

SignedGraph make_path(int n, int sigma = -1);
SignedGraph make_cycle(int n, int sigma = -1);
SignedGraph make_complete(int n, int sigma = -1);
SignedGraph make_empty(int n);

/// Star K_{1,d}: d+1 vertices, center is vertex 0.
SignedGraph make_star(int d, int sigma = -1);

/// Hypercube Q_k on 2^k vertices; edges join vertices differing in one bit.
SignedGraph make_hypercube(int k, int sigma = -1);

/// G(n, m): m distinct non-loop pairs drawn uniformly with the given seed.
/// Deterministic for a fixed seed; the edge list is sorted lexicographically.
SignedGraph make_gnm(int n, long long m, std::uint64_t seed, int sigma = -1);

/// Join G v H: disjoint union (H's vertices relabeled after G's) plus all
/// cross edges with weight 1 and the given signature.
SignedGraph make_join(const SignedGraph& a, const SignedGraph& b, int cross_sigma = -1);

}  // namespace plap

#endif
