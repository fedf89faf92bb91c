#include "plap/graph.hpp"

#include <algorithm>
#include <queue>
#include <unordered_set>

namespace plap {

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::duplicate_edge: return "DuplicateEdge";
        case Errc::self_loop: return "SelfLoop";
        case Errc::nonpositive_weight: return "NonpositiveWeight";
        case Errc::nonpositive_measure: return "NonpositiveMeasure";
        case Errc::bad_label: return "BadLabel";
        case Errc::bad_params: return "BadParams";
        case Errc::too_large_for_search: return "TooLargeForSearch";
        case Errc::not_connected: return "NotConnected";
        case Errc::not_signless: return "NotSignless";
        case Errc::bad_initial: return "BadInitial";
        case Errc::max_iter_exceeded: return "MaxIterExceeded";
        case Errc::zero_function: return "ZeroFunction";
        case Errc::odd_p: return "OddP";
        case Errc::too_large: return "TooLarge";
        case Errc::no_convergence: return "NoConvergence";
        case Errc::empty_graph: return "EmptyGraph";
        case Errc::parse_error: return "ParseError";
        case Errc::version_mismatch: return "VersionMismatch";
    }
    return "UnknownError";
}

std::optional<ValidationIssue> validate(int n, std::span<const Edge> edges,
                                        std::span<const double> mu,
                                        std::span<const double> kappa) {
    if (n < 0) return ValidationIssue{Errc::bad_params, "vertex count is negative"};
    if (!mu.empty() && static_cast<int>(mu.size()) != n)
        return ValidationIssue{Errc::bad_params, "mu length does not match vertex count"};
    if (!kappa.empty() && static_cast<int>(kappa.size()) != n)
        return ValidationIssue{Errc::bad_params, "kappa length does not match vertex count"};
    for (int v = 0; v < static_cast<int>(mu.size()); ++v) {
        if (!(mu[v] > 0.0))
            return ValidationIssue{Errc::nonpositive_measure,
                                   "mu of vertex " + std::to_string(v + 1)};
    }
    std::unordered_set<long long> seen;
    seen.reserve(edges.size() * 2);
    for (std::size_t k = 0; k < edges.size(); ++k) {
        const Edge& e = edges[k];
        if (e.i < 0 || e.i >= n || e.j < 0 || e.j >= n)
            return ValidationIssue{Errc::bad_label,
                                   "edge " + std::to_string(k + 1) + " endpoint out of range"};
        if (e.i == e.j)
            return ValidationIssue{Errc::self_loop,
                                   "edge at vertex " + std::to_string(e.i + 1)};
        if (!(e.w > 0.0))
            return ValidationIssue{Errc::nonpositive_weight,
                                   "edge {" + std::to_string(e.i + 1) + "," +
                                       std::to_string(e.j + 1) + "}"};
        if (e.sigma != 1 && e.sigma != -1)
            return ValidationIssue{Errc::bad_params,
                                   "sigma of edge {" + std::to_string(e.i + 1) + "," +
                                       std::to_string(e.j + 1) + "} must be +1 or -1"};
        const long long lo = std::min(e.i, e.j), hi = std::max(e.i, e.j);
        if (!seen.insert(lo * static_cast<long long>(n) + hi).second)
            return ValidationIssue{Errc::duplicate_edge,
                                   "edge {" + std::to_string(e.i + 1) + "," +
                                       std::to_string(e.j + 1) + "}"};
    }
    return std::nullopt;
}

SignedGraph::SignedGraph(int n, std::vector<Edge> edges, std::vector<double> mu,
                         std::vector<double> kappa)
    : n_(n), edges_(std::move(edges)), mu_(std::move(mu)), kappa_(std::move(kappa)) {
    if (auto issue = validate(n_, edges_, mu_, kappa_)) throw Error(issue->code, issue->detail);
    if (mu_.empty()) mu_.assign(n_, 1.0);
    if (kappa_.empty()) kappa_.assign(n_, 0.0);
    for (Edge& e : edges_)
        if (e.i > e.j) std::swap(e.i, e.j);

    adj_start_.assign(n_ + 2, 0);
    for (const Edge& e : edges_) {
        ++adj_start_[e.i + 1];
        ++adj_start_[e.j + 1];
    }
    for (int v = 0; v < n_ + 1; ++v) adj_start_[v + 1] += adj_start_[v];
    adj_.resize(edges_.size() * 2);
    std::vector<int> cursor(adj_start_.begin(), adj_start_.begin() + n_);
    for (const Edge& e : edges_) {
        adj_[cursor[e.i]++] = HalfEdge{e.j, e.w, e.sigma};
        adj_[cursor[e.j]++] = HalfEdge{e.i, e.w, e.sigma};
    }
    adj_start_.pop_back();
}

int SignedGraph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

bool SignedGraph::signless() const {
    return std::all_of(edges_.begin(), edges_.end(),
                       [](const Edge& e) { return e.sigma == -1; });
}

bool SignedGraph::unit_weights() const {
    return std::all_of(edges_.begin(), edges_.end(),
                       [](const Edge& e) { return e.w == 1.0; });
}

bool SignedGraph::plain() const {
    return unit_weights() &&
           std::all_of(mu_.begin(), mu_.end(), [](double m) { return m == 1.0; }) &&
           std::all_of(kappa_.begin(), kappa_.end(), [](double k) { return k == 0.0; });
}

SignedGraph SignedGraph::with_signature(int sigma) const {
    std::vector<Edge> es = edges_;
    for (Edge& e : es) e.sigma = sigma;
    return SignedGraph(n_, std::move(es), mu_, kappa_);
}

SignedGraph SignedGraph::with_kappa(std::vector<double> kappa) const {
    return SignedGraph(n_, edges_, mu_, std::move(kappa));
}

bool SignedGraph::operator==(const SignedGraph& other) const {
    if (n_ != other.n_ || mu_ != other.mu_ || kappa_ != other.kappa_) return false;
    if (edges_.size() != other.edges_.size()) return false;
    for (std::size_t k = 0; k < edges_.size(); ++k) {
        const Edge &a = edges_[k], &b = other.edges_[k];
        if (a.i != b.i || a.j != b.j || a.w != b.w || a.sigma != b.sigma) return false;
    }
    return true;
}

bool is_connected(const SignedGraph& g) {
    const int n = g.vertex_count();
    if (n == 0) return false;
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int count = 1;
    while (!q.empty()) {
        const int v = q.front();
        q.pop();
        for (const HalfEdge& h : g.neighbors(v)) {
            if (!seen[h.to]) {
                seen[h.to] = 1;
                ++count;
                q.push(h.to);
            }
        }
    }
    return count == n;
}

std::vector<std::vector<int>> connected_components(const SignedGraph& g) {
    const int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        const int id = static_cast<int>(out.size());
        out.emplace_back();
        std::queue<int> q;
        q.push(s);
        comp[s] = id;
        while (!q.empty()) {
            const int v = q.front();
            q.pop();
            out[id].push_back(v);
            for (const HalfEdge& h : g.neighbors(v)) {
                if (comp[h.to] < 0) {
                    comp[h.to] = id;
                    q.push(h.to);
                }
            }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

SignedGraph subgraph_of(const SignedGraph& g, std::span<const int> vertices,
                        std::span<const int> edge_indices) {
    std::vector<int> verts(vertices.begin(), vertices.end());
    std::sort(verts.begin(), verts.end());
    std::vector<int> relabel(g.vertex_count(), -1);
    std::vector<double> mu, kappa;
    for (std::size_t k = 0; k < verts.size(); ++k) {
        relabel[verts[k]] = static_cast<int>(k);
        mu.push_back(g.mu()[verts[k]]);
        kappa.push_back(g.kappa()[verts[k]]);
    }
    std::vector<Edge> edges;
    for (int idx : edge_indices) {
        Edge e = g.edges().at(idx);
        if (relabel[e.i] < 0 || relabel[e.j] < 0)
            throw Error(Errc::bad_params, "subgraph edge endpoint not in vertex list");
        e.i = relabel[e.i];
        e.j = relabel[e.j];
        edges.push_back(e);
    }
    return SignedGraph(static_cast<int>(verts.size()), std::move(edges), std::move(mu),
                       std::move(kappa));
}

namespace {

bool mapping_works(const SignedGraph& gp, const SignedGraph& g, std::span<const int> map) {
    for (int v = 0; v < gp.vertex_count(); ++v) {
        if (gp.mu()[v] != g.mu()[map[v]] || gp.kappa()[v] != g.kappa()[map[v]]) return false;
    }
    for (const Edge& e : gp.edges()) {
        const int a = map[e.i], b = map[e.j];
        bool found = false;
        for (const HalfEdge& h : g.neighbors(a)) {
            if (h.to == b && h.w == e.w) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

// backtracking injection search, vertices of gp assigned in order
bool extend(const SignedGraph& gp, const SignedGraph& g, std::vector<int>& map,
            std::vector<char>& used, int v) {
    if (v == gp.vertex_count()) return true;
    for (int target = 0; target < g.vertex_count(); ++target) {
        if (used[target]) continue;
        if (gp.mu()[v] != g.mu()[target] || gp.kappa()[v] != g.kappa()[target]) continue;
        bool ok = true;
        for (const HalfEdge& h : gp.neighbors(v)) {
            if (h.to >= v) continue;  // only check already-assigned endpoints
            bool found = false;
            for (const HalfEdge& hg : g.neighbors(target)) {
                if (hg.to == map[h.to] && hg.w == h.w) {
                    found = true;
                    break;
                }
            }
            if (!found) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        map[v] = target;
        used[target] = 1;
        if (extend(gp, g, map, used, v + 1)) return true;
        used[target] = 0;
    }
    return false;
}

}  // namespace

bool is_subgraph(const SignedGraph& gp, const SignedGraph& g,
                 std::optional<std::span<const int>> mapping) {
    if (mapping) {
        const auto& map = *mapping;
        if (static_cast<int>(map.size()) != gp.vertex_count())
            throw Error(Errc::bad_params, "mapping length does not match subgraph order");
        std::vector<char> used(g.vertex_count(), 0);
        for (int t : map) {
            if (t < 0 || t >= g.vertex_count())
                throw Error(Errc::bad_params, "mapping target out of range");
            if (used[t]) throw Error(Errc::bad_params, "mapping is not injective");
            used[t] = 1;
        }
        return mapping_works(gp, g, map);
    }
    if (gp.vertex_count() > subgraph_search_limit || g.vertex_count() > subgraph_search_limit)
        throw Error(Errc::too_large_for_search,
                    "exhaustive injection search is capped at " +
                        std::to_string(subgraph_search_limit) + " vertices");
    if (gp.vertex_count() > g.vertex_count()) return false;
    std::vector<int> map(gp.vertex_count(), -1);
    std::vector<char> used(g.vertex_count(), 0);
    return extend(gp, g, map, used, 0);
}

}  // namespace plap
