#ifndef PLAP_CRITERION_HPP
#define PLAP_CRITERION_HPP

#include <span>
#include <utility>
#include <vector>

#include "plap/plaplacian.hpp"

namespace plap {

/// Closed form for the largest signless p-Laplacian eigenvalue of the star
/// K_{1,d}: (1 + d^{1/(p-1)})^{p-1}.
double star_lambda(int d, PParam p);

/// Largest signless p-Laplacian eigenvalue of a graph taken as a plain graph:
/// the signature is forced to -1 and each connected component is solved
/// separately (the maximum over components; an isolated vertex contributes
/// kappa/mu). Throws EmptyGraph when n == 0.
double lambda_max_signless(const SignedGraph& g, PParam p);

struct LinearBaselines {
    double adjacency;  // largest eigenvalue of A
    double laplacian;  // largest eigenvalue of L = D - A
    double signless;   // largest eigenvalue of Q = D + A
};

/// Largest eigenvalues of the three classical matrices by dense shifted
/// power iteration. Intended for w == 1 graphs (weights are honored as-is).
LinearBaselines linear_baselines(const SignedGraph& g);

enum class Verdict { inconclusive, not_subgraph };

struct CriterionReport {
    std::vector<double> p_grid;
    std::vector<double> lambda_g;   // host G, per grid point
    std::vector<double> lambda_gp;  // candidate G', per grid point
    std::vector<double> witnesses;  // p with lambda(G') > lambda(G) + tol
    Verdict verdict = Verdict::inconclusive;
    LinearBaselines baselines_g;
    LinearBaselines baselines_gp;
};

/// Forbidden-subgraph screening: if lambda^(p)(G') > lambda^(p)(G) at any
/// grid point, G' cannot be a subgraph of G. A witness must beat the host
/// value by tol_strict to be trusted over solver error.
CriterionReport criterion_sweep(const SignedGraph& g, const SignedGraph& gprime,
                                std::span<const double> p_grid,
                                double tol_strict = 1e-9);

/// The diagnostic curve (p, lambda^(p) / 2^p). No limit or convexity is
/// asserted; downstream plotting decides what to make of it.
std::vector<std::pair<double, double>> scaled_curve(const SignedGraph& g,
                                                    std::span<const double> p_grid);

}  // namespace plap

#endif
