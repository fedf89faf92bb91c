#include "plap/generators.hpp"

#include <algorithm>
#include <unordered_set>

#include "plap/rng.hpp"

namespace plap {

namespace {

void check_sigma(int sigma) {
    if (sigma != 1 && sigma != -1) throw Error(Errc::bad_params, "sigma must be +1 or -1");
}

}  // namespace

SignedGraph make_path(int n, int sigma) {
    check_sigma(sigma);
    if (n < 1) throw Error(Errc::bad_params, "path needs n >= 1");
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1, 1.0, sigma});
    return SignedGraph(n, std::move(edges));
}

SignedGraph make_cycle(int n, int sigma) {
    check_sigma(sigma);
    if (n < 3) throw Error(Errc::bad_params, "cycle needs n >= 3");
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1, 1.0, sigma});
    edges.push_back({0, n - 1, 1.0, sigma});
    return SignedGraph(n, std::move(edges));
}

SignedGraph make_complete(int n, int sigma) {
    check_sigma(sigma);
    if (n < 1) throw Error(Errc::bad_params, "complete graph needs n >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j, 1.0, sigma});
    return SignedGraph(n, std::move(edges));
}

SignedGraph make_empty(int n) {
    if (n < 1) throw Error(Errc::bad_params, "empty graph needs n >= 1");
    return SignedGraph(n, {});
}

SignedGraph make_star(int d, int sigma) {
    check_sigma(sigma);
    if (d < 1) throw Error(Errc::bad_params, "star needs d >= 1 leaves");
    std::vector<Edge> edges;
    for (int leaf = 1; leaf <= d; ++leaf) edges.push_back({0, leaf, 1.0, sigma});
    return SignedGraph(d + 1, std::move(edges));
}

SignedGraph make_hypercube(int k, int sigma) {
    check_sigma(sigma);
    if (k < 1 || k > 20) throw Error(Errc::bad_params, "hypercube dimension must be in [1,20]");
    const int n = 1 << k;
    std::vector<Edge> edges;
    for (int a = 0; a < n; ++a) {
        for (int bit = 0; bit < k; ++bit) {
            const int b = a ^ (1 << bit);
            if (b > a) edges.push_back({a, b, 1.0, sigma});
        }
    }
    return SignedGraph(n, std::move(edges));
}

SignedGraph make_gnm(int n, long long m, std::uint64_t seed, int sigma) {
    check_sigma(sigma);
    if (n < 1) throw Error(Errc::bad_params, "gnm needs n >= 1");
    const long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
    if (m < 0 || m > max_edges)
        throw Error(Errc::bad_params, "gnm edge count must be in [0, n(n-1)/2]");
    auto rng = seeded_engine(seed);
    std::unordered_set<long long> chosen;
    chosen.reserve(static_cast<std::size_t>(m) * 2);
    while (static_cast<long long>(chosen.size()) < m) {
        const int a = static_cast<int>(uniform_below(rng, n));
        const int b = static_cast<int>(uniform_below(rng, n));
        if (a == b) continue;
        const long long lo = std::min(a, b), hi = std::max(a, b);
        chosen.insert(lo * static_cast<long long>(n) + hi);
    }
    std::vector<long long> keys(chosen.begin(), chosen.end());
    std::sort(keys.begin(), keys.end());
    std::vector<Edge> edges;
    edges.reserve(keys.size());
    for (long long key : keys)
        edges.push_back({static_cast<int>(key / n), static_cast<int>(key % n), 1.0, sigma});
    return SignedGraph(n, std::move(edges));
}

SignedGraph make_join(const SignedGraph& a, const SignedGraph& b, int cross_sigma) {
    check_sigma(cross_sigma);
    const int na = a.vertex_count(), nb = b.vertex_count();
    std::vector<Edge> edges = a.edges();
    for (Edge e : b.edges()) {
        e.i += na;
        e.j += na;
        edges.push_back(e);
    }
    for (int u = 0; u < na; ++u)
        for (int v = 0; v < nb; ++v) edges.push_back({u, na + v, 1.0, cross_sigma});
    std::vector<double> mu = a.mu(), kappa = a.kappa();
    mu.insert(mu.end(), b.mu().begin(), b.mu().end());
    kappa.insert(kappa.end(), b.kappa().begin(), b.kappa().end());
    return SignedGraph(na + nb, std::move(edges), std::move(mu), std::move(kappa));
}

}  // namespace plap
