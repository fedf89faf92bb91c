#include "plap/power_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace plap {

namespace {

double norm_for(const SignedGraph& g, const VertexFunction& f, SolverConfig::Norm which) {
    double scale = 0.0;
    for (double x : f) scale = std::max(scale, std::abs(x));
    if (scale == 0.0) return 0.0;
    double acc = 0.0;
    if (which == SolverConfig::Norm::mu_weighted_2) {
        const auto& mu = g.mu();
        for (std::size_t i = 0; i < f.size(); ++i) {
            const double r = f[i] / scale;
            acc += mu[i] * r * r;
        }
    } else {
        for (double x : f) {
            const double r = x / scale;
            acc += r * r;
        }
    }
    return scale * std::sqrt(acc);
}

// g_i / f_i^{p-1} for strictly positive g_i, f_i; falls back to log space
// when the plain power under- or overflows
double positive_ratio(double gi, double fi, double pm1) {
    const double denom = std::pow(fi, pm1);
    if (denom > 0.0 && std::isfinite(denom)) {
        const double r = gi / denom;
        if (std::isfinite(r)) return r;
    }
    return std::exp(std::log(gi) - pm1 * std::log(fi));
}

}  // namespace

MaxEigenResult solve_max(const SignedGraph& g, PParam p, const SolverConfig& cfg) {
    const int n = g.vertex_count();
    if (n < 2) throw Error(Errc::bad_params, "solve_max needs at least 2 vertices");
    if (!g.signless()) throw Error(Errc::not_signless, "some edge has sigma = +1");
    if (!is_connected(g)) throw Error(Errc::not_connected, "underlying graph is not connected");
    if (!(cfg.eps > 0.0 && cfg.eps < 1.0))
        throw Error(Errc::bad_params, "eps must lie in (0,1)");
    if (cfg.max_iter < 1) throw Error(Errc::bad_params, "max_iter must be positive");

    VertexFunction f = cfg.f0.value_or(VertexFunction(n, 1.0));
    if (static_cast<int>(f.size()) != n)
        throw Error(Errc::bad_initial, "initial vector length does not match vertex count");
    for (int v = 0; v < n; ++v)
        if (!(f[v] > 0.0) || !std::isfinite(f[v]))
            throw Error(Errc::bad_initial,
                        "initial vector must be strictly positive (vertex " +
                            std::to_string(v + 1) + ")");

    auto [work, c] = shift_potential(g);
    const double pm1 = p.value - 1.0;
    const double inv_pm1 = 1.0 / pm1;

    MaxEigenResult result;
    result.shift = c;

    VertexFunction iter_g = apply_p_laplacian(work, p, f);
    for (int k = 1; k <= cfg.max_iter; ++k) {
        // f <- (g)^{1/(p-1)} normalized; g is entrywise positive, rescale
        // first when its magnitude would stress the fractional power
        double gmax = 0.0;
        for (double x : iter_g) gmax = std::max(gmax, x);
        const double rescale = (gmax > 1e100 || (gmax > 0.0 && gmax < 1e-100)) ? gmax : 1.0;
        for (int v = 0; v < n; ++v) f[v] = std::pow(iter_g[v] / rescale, inv_pm1);
        const double nf = norm_for(work, f, cfg.norm);
        for (int v = 0; v < n; ++v) f[v] /= nf;

        iter_g = apply_p_laplacian(work, p, f);
        double lower = std::numeric_limits<double>::infinity();
        double upper = 0.0;
        for (int v = 0; v < n; ++v) {
            const double r = positive_ratio(iter_g[v], f[v], pm1);
            lower = std::min(lower, r);
            upper = std::max(upper, r);
        }
        const double rel_gap = (upper - lower) / (upper + lower);
        if (cfg.record_trace) result.trace.push_back({lower, upper, rel_gap});
        result.iterations = k;

        if (rel_gap < cfg.eps) {
            result.pair.lambda = 0.5 * (upper + lower) - c;
            result.pair.f = f;
            for (int v = 0; v < n; ++v)
                if (!(f[v] > 0.0))
                    throw Error(Errc::no_convergence,
                                "iterate lost positivity; this indicates a defect");
            result.pair.residual = verify_eigenpair(g, p, result.pair.lambda, f);
            return result;
        }
        if (k == cfg.max_iter)
            throw MaxIterError(lower, upper, k,
                               "bracket gap " + std::to_string(rel_gap) + " after " +
                                   std::to_string(k) + " iterations");
    }
    throw MaxIterError(0.0, 0.0, 0, "max_iter was zero");  // unreachable
}

double verify_eigenpair(const SignedGraph& g, PParam p, double lambda,
                        const VertexFunction& f) {
    bool nonzero = false;
    for (double x : f)
        if (x != 0.0) nonzero = true;
    if (!nonzero) throw Error(Errc::zero_function, "eigenfunction must be nonzero");
    const VertexFunction lhs = apply_p_laplacian(g, p, f);
    double worst = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i)
        worst = std::max(worst, std::abs(lhs[i] - lambda * phi_p(f[i], p)));
    return worst / std::max(1.0, std::abs(lambda));
}

}  // namespace plap
