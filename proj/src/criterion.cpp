#include "plap/criterion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "plap/power_solver.hpp"
#include "plap/rng.hpp"

namespace plap {

double star_lambda(int d, PParam p) {
    if (d < 1) throw Error(Errc::bad_params, "star needs d >= 1");
    return std::pow(1.0 + std::pow(static_cast<double>(d), 1.0 / (p.value - 1.0)),
                    p.value - 1.0);
}

double lambda_max_signless(const SignedGraph& g, PParam p) {
    if (g.vertex_count() == 0) throw Error(Errc::empty_graph, "graph has no vertices");
    const SignedGraph work = g.signless() ? g : g.with_signature(-1);
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& comp : connected_components(work)) {
        if (comp.size() == 1) {
            // no edges: the eigen-equation collapses to kappa/mu
            best = std::max(best, work.kappa()[comp[0]] / work.mu()[comp[0]]);
            continue;
        }
        std::vector<int> edge_idx;
        std::vector<char> in_comp(work.vertex_count(), 0);
        for (int v : comp) in_comp[v] = 1;
        const auto& edges = work.edges();
        for (int k = 0; k < static_cast<int>(edges.size()); ++k)
            if (in_comp[edges[k].i]) edge_idx.push_back(k);
        const SignedGraph sub = subgraph_of(work, comp, edge_idx);
        best = std::max(best, solve_max(sub, p).pair.lambda);
    }
    return best;
}

namespace {

// largest eigenvalue of a dense symmetric matrix by power iteration shifted
// PSD (Gershgorin), seeded random start, residual-based stop
double dominant_eigenvalue(const std::vector<double>& m, int n) {
    if (n == 1) return m[0];
    double shift = 0.0;
    for (int r = 0; r < n; ++r) {
        double radius = 0.0;
        for (int c = 0; c < n; ++c) radius += std::abs(m[r * n + c]);
        shift = std::max(shift, radius);
    }
    auto rng = seeded_engine(0x9d5ab1c2u);
    std::vector<double> v(n), mv(n);
    for (double& x : v) x = uniform_range(rng, 0.1, 1.0);
    double nrm = 0.0;
    for (double x : v) nrm += x * x;
    nrm = std::sqrt(nrm);
    for (double& x : v) x /= nrm;

    double lambda = 0.0;
    for (int it = 0; it < 300000; ++it) {
        for (int r = 0; r < n; ++r) {
            double acc = shift * v[r];
            for (int c = 0; c < n; ++c) acc += m[r * n + c] * v[c];
            mv[r] = acc;
        }
        double ray = 0.0;
        for (int r = 0; r < n; ++r) ray += mv[r] * v[r];
        double res = 0.0;
        for (int r = 0; r < n; ++r) {
            const double d = mv[r] - ray * v[r];
            res += d * d;
        }
        lambda = ray - shift;
        if (std::sqrt(res) <= 1e-12 * std::max(1.0, std::abs(ray))) break;
        double n2 = 0.0;
        for (double x : mv) n2 += x * x;
        n2 = std::sqrt(n2);
        for (int r = 0; r < n; ++r) v[r] = mv[r] / n2;
    }
    return lambda;
}

}  // namespace

LinearBaselines linear_baselines(const SignedGraph& g) {
    const int n = g.vertex_count();
    if (n == 0) throw Error(Errc::empty_graph, "graph has no vertices");
    std::vector<double> adj(n * n, 0.0), lap(n * n, 0.0), signless(n * n, 0.0);
    for (const Edge& e : g.edges()) {
        adj[e.i * n + e.j] += e.w;
        adj[e.j * n + e.i] += e.w;
    }
    for (int r = 0; r < n; ++r) {
        double deg = 0.0;
        for (int c = 0; c < n; ++c) deg += adj[r * n + c];
        for (int c = 0; c < n; ++c) {
            lap[r * n + c] = -adj[r * n + c];
            signless[r * n + c] = adj[r * n + c];
        }
        lap[r * n + r] += deg;
        signless[r * n + r] += deg;
    }
    return {dominant_eigenvalue(adj, n), dominant_eigenvalue(lap, n),
            dominant_eigenvalue(signless, n)};
}

CriterionReport criterion_sweep(const SignedGraph& g, const SignedGraph& gprime,
                                std::span<const double> p_grid, double tol_strict) {
    if (g.vertex_count() == 0 || gprime.vertex_count() == 0)
        throw Error(Errc::empty_graph, "criterion needs nonempty graphs");
    CriterionReport report;
    report.p_grid.assign(p_grid.begin(), p_grid.end());
    std::sort(report.p_grid.begin(), report.p_grid.end());
    for (double p : report.p_grid) {
        report.lambda_g.push_back(lambda_max_signless(g, p));
        report.lambda_gp.push_back(lambda_max_signless(gprime, p));
        if (report.lambda_gp.back() > report.lambda_g.back() + tol_strict)
            report.witnesses.push_back(p);
    }
    report.verdict = report.witnesses.empty() ? Verdict::inconclusive : Verdict::not_subgraph;
    report.baselines_g = linear_baselines(g);
    report.baselines_gp = linear_baselines(gprime);
    return report;
}

std::vector<std::pair<double, double>> scaled_curve(const SignedGraph& g,
                                                    std::span<const double> p_grid) {
    std::vector<std::pair<double, double>> out;
    for (double p : p_grid)
        out.emplace_back(p, lambda_max_signless(g, p) / std::pow(2.0, p));
    return out;
}

}  // namespace plap
