#ifndef PLAP_TESTS_SUPPORT_HPP
#define PLAP_TESTS_SUPPORT_HPP

// Test-only oracles, kept independent of the solver code paths they check.

#include <algorithm>
#include <cmath>
#include <vector>

#include "plap/generators.hpp"
#include "plap/graph.hpp"
#include "plap/plaplacian.hpp"
#include "plap/rng.hpp"

namespace plap_test {

// The signed C4 fixture: mu = (2,1,1,1), kappa = (1,1,1,2), three +1 edges of
// weight 1 and one -1 edge of weight 2.
inline plap::SignedGraph signed_c4() {
    return plap::SignedGraph(
        4, {{0, 1, 1.0, +1}, {1, 2, 1.0, +1}, {2, 3, 1.0, +1}, {0, 3, 2.0, -1}},
        {2.0, 1.0, 1.0, 1.0}, {1.0, 1.0, 1.0, 2.0});
}

// Published eigenpairs of Delta_4 on the signed C4 (4 significant figures).
struct TablePair {
    double lambda;
    plap::VertexFunction f;
};

inline const std::vector<TablePair>& c4_eigenpairs() {
    static const std::vector<TablePair> table = {
        {16.86, {5.568e-1, 4.556e-1, -6.894e-1, 8.567e-1}},
        {16.68, {6.186e-1, -4.107e-1, -5.780e-1, 8.678e-1}},
        {16.31, {5.952e-1, -1.066e-2, -6.164e-1, 8.818e-1}},
        {14.63, {6.693e-1, -6.355e-1, 4.493e-1, 7.927e-1}},
        {14.48, {6.796e-1, -5.469e-1, 1.644e-1, 8.337e-1}},
        {13.69, {-3.717e-1, 7.471e-1, -8.258e-1, 6.560e-1}},
        {13.44, {-1.032e-1, 6.907e-1, -8.416e-1, 7.211e-1}},
        {11.62, {5.070e-1, -8.595e-1, 7.533e-1, 5.107e-2}},
        {1.608, {-5.715e-1, 1.737e-1, 9.169e-1, 5.296e-1}},
        {1.364, {2.339e-1, 8.174e-1, 8.588e-1, 2.459e-1}},
        {1.301, {2.953e-3, 5.181e-1, 9.742e-1, 4.060e-1}},
        {0.7047, {8.298e-1, 3.946e-1, -6.080e-3, -4.067e-1}},
    };
    return table;
}

// Dense signless Laplacian Q = D + A of a w==1, mu==1, kappa==0 graph.
inline std::vector<double> dense_signless_matrix(const plap::SignedGraph& g) {
    const int n = g.vertex_count();
    std::vector<double> q(n * n, 0.0);
    for (const plap::Edge& e : g.edges()) {
        q[e.i * n + e.j] += e.w;
        q[e.j * n + e.i] += e.w;
        q[e.i * n + e.i] += e.w;
        q[e.j * n + e.j] += e.w;
    }
    return q;
}

// Largest eigenvalue of a dense symmetric matrix by plain power iteration on
// M + shift*I (Gershgorin shift keeps the dominant eigenvalue the largest).
inline double power_iteration_max(const std::vector<double>& m, int n,
                                  std::uint64_t seed = 2024) {
    if (n == 1) return m[0];
    double shift = 0.0;
    for (int r = 0; r < n; ++r) {
        double radius = 0.0;
        for (int c = 0; c < n; ++c) radius += std::abs(m[r * n + c]);
        shift = std::max(shift, radius);
    }
    auto rng = plap::seeded_engine(seed);
    std::vector<double> v(n), mv(n);
    for (double& x : v) x = plap::uniform_range(rng, 0.1, 1.0);
    double lambda = 0.0;
    for (int it = 0; it < 500000; ++it) {
        for (int r = 0; r < n; ++r) {
            double acc = shift * v[r];
            for (int c = 0; c < n; ++c) acc += m[r * n + c] * v[c];
            mv[r] = acc;
        }
        double vv = 0.0, rayleigh = 0.0;
        for (int r = 0; r < n; ++r) {
            vv += v[r] * v[r];
            rayleigh += mv[r] * v[r];
        }
        rayleigh /= vv;
        double res = 0.0;
        for (int r = 0; r < n; ++r) {
            const double d = mv[r] - rayleigh * v[r];
            res += d * d;
        }
        lambda = rayleigh - shift;
        if (std::sqrt(res / vv) <= 1e-12 * std::max(1.0, rayleigh)) break;
        double nrm = 0.0;
        for (double x : mv) nrm += x * x;
        nrm = std::sqrt(nrm);
        for (int r = 0; r < n; ++r) v[r] = mv[r] / nrm;
    }
    return lambda;
}

// Connected G(n, m): advances the seed until the draw is connected.
inline plap::SignedGraph random_connected_gnm(int n, long long m, std::uint64_t seed) {
    for (std::uint64_t attempt = 0;; ++attempt) {
        plap::SignedGraph g = plap::make_gnm(n, m, seed + attempt * 7919);
        if (plap::is_connected(g)) return g;
    }
}

// Random signed graph with nontrivial w, mu, kappa and mixed signatures,
// connected, for the tensor and verification tests.
inline plap::SignedGraph random_signed_graph(int n, std::uint64_t seed) {
    auto rng = plap::seeded_engine(seed);
    for (;;) {
        std::vector<plap::Edge> edges;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                if (plap::uniform_double(rng) < 0.6) {
                    plap::Edge e;
                    e.i = i;
                    e.j = j;
                    e.w = plap::uniform_range(rng, 0.5, 2.0);
                    e.sigma = plap::uniform_double(rng) < 0.5 ? 1 : -1;
                    edges.push_back(e);
                }
            }
        }
        std::vector<double> mu(n), kappa(n);
        for (double& x : mu) x = plap::uniform_range(rng, 0.5, 2.0);
        for (double& x : kappa) x = plap::uniform_range(rng, -1.0, 1.0);
        plap::SignedGraph g(n, std::move(edges), std::move(mu), std::move(kappa));
        if (plap::is_connected(g)) return g;
    }
}

// Random strictly positive vector.
inline plap::VertexFunction random_positive(int n, std::uint64_t seed) {
    auto rng = plap::seeded_engine(seed);
    plap::VertexFunction f(n);
    for (double& x : f) x = plap::uniform_range(rng, 0.05, 1.0);
    return f;
}

inline plap::VertexFunction random_vector(int n, std::uint64_t seed) {
    auto rng = plap::seeded_engine(seed);
    plap::VertexFunction f(n);
    for (double& x : f) x = plap::uniform_range(rng, -1.0, 1.0);
    return f;
}

// Brute-force maximization of the Rayleigh quotient over random directions
// followed by coordinate-wise pattern refinement. Independent of solve_max.
inline double rayleigh_max_brute(const plap::SignedGraph& g, double p, int samples,
                                 std::uint64_t seed) {
    auto rng = plap::seeded_engine(seed);
    const int n = g.vertex_count();
    plap::VertexFunction best(n, 1.0);
    double best_val = plap::rayleigh_quotient(g, p, best);
    for (int s = 0; s < samples; ++s) {
        plap::VertexFunction f(n);
        for (double& x : f) x = plap::uniform_range(rng, 1e-3, 1.0);
        const double val = plap::rayleigh_quotient(g, p, f);
        if (val > best_val) {
            best_val = val;
            best = f;
        }
    }
    double step = 0.25;
    while (step > 1e-9) {
        bool moved = false;
        for (int v = 0; v < n; ++v) {
            for (double dir : {+1.0, -1.0}) {
                plap::VertexFunction f = best;
                f[v] = std::max(1e-12, f[v] + dir * step);
                const double val = plap::rayleigh_quotient(g, p, f);
                if (val > best_val) {
                    best_val = val;
                    best = f;
                    moved = true;
                }
            }
        }
        if (!moved) step *= 0.5;
    }
    return best_val;
}

}  // namespace plap_test

#endif
