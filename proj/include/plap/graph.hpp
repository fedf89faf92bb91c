#ifndef PLAP_GRAPH_HPP
#define PLAP_GRAPH_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "plap/errors.hpp"

namespace plap {

/// A real function on the vertex set, identified with R^n. Vertices are
/// 0-based throughout the library; the file format and CLI use 1-based labels.
using VertexFunction = std::vector<double>;

struct Edge {
    int i = 0;
    int j = 0;
    double w = 1.0;
    int sigma = -1;  // +1 or -1
};

struct HalfEdge {
    int to;
    double w;
    int sigma;
};

struct ValidationIssue {
    Errc code;
    std::string detail;
};

/// Checks the SignedGraph invariants on raw parts: simple undirected (no
/// self-loops, no duplicate pairs), w > 0, mu > 0, endpoints in [0, n).
/// Empty mu/kappa stand for the defaults (1 and 0). Returns nullopt when ok.
std::optional<ValidationIssue> validate(int n, std::span<const Edge> edges,
                                        std::span<const double> mu,
                                        std::span<const double> kappa);

/// Signed weighted graph: vertex measure mu > 0, potential kappa, undirected
/// edges carrying a weight w > 0 and a signature sigma in {+1,-1}.
/// Immutable after construction; construction validates all invariants.
class SignedGraph {
public:
    /// mu/kappa may be empty, meaning mu==1 and kappa==0 everywhere.
    SignedGraph(int n, std::vector<Edge> edges, std::vector<double> mu = {},
                std::vector<double> kappa = {});

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<double>& mu() const { return mu_; }
    const std::vector<double>& kappa() const { return kappa_; }

    std::span<const HalfEdge> neighbors(int v) const {
        return {adj_.data() + adj_start_[v], adj_.data() + adj_start_[v + 1]};
    }
    int degree(int v) const { return adj_start_[v + 1] - adj_start_[v]; }
    int max_degree() const;

    bool signless() const;      // sigma == -1 on every edge
    bool unit_weights() const;  // w == 1 on every edge
    bool plain() const;         // w == 1, mu == 1, kappa == 0

    /// Same structure and attributes with every signature replaced by sigma.
    SignedGraph with_signature(int sigma) const;
    /// Same structure with the potential replaced by kappa.
    SignedGraph with_kappa(std::vector<double> kappa) const;

    bool operator==(const SignedGraph& other) const;

private:
    int n_;
    std::vector<Edge> edges_;
    std::vector<double> mu_;
    std::vector<double> kappa_;
    std::vector<int> adj_start_;
    std::vector<HalfEdge> adj_;
};

/// True iff the underlying unsigned graph is connected (BFS). The one-vertex
/// graph is connected; the empty graph (n == 0) is not a valid input.
bool is_connected(const SignedGraph& g);

/// Vertex sets of the connected components, each sorted ascending.
std::vector<std::vector<int>> connected_components(const SignedGraph& g);

/// The subgraph induced by keeping exactly the given vertices and the given
/// edges (indices into g.edges()); vertices are relabeled in sorted order.
SignedGraph subgraph_of(const SignedGraph& g, std::span<const int> vertices,
                        std::span<const int> edge_indices);

/// Weighted subgraph containment: true iff some injection (or the given one,
/// mapping[v of gp] = v of g) carries every edge of gp onto an edge of g with
/// equal weight and matches mu and kappa on mapped vertices. Signatures are
/// ignored. Without a mapping both graphs must have at most
/// subgraph_search_limit vertices (exhaustive injection search).
inline constexpr int subgraph_search_limit = 12;
bool is_subgraph(const SignedGraph& gp, const SignedGraph& g,
                 std::optional<std::span<const int>> mapping = std::nullopt);

}  // namespace plap

#endif
