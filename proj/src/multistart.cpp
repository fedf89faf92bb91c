#include "plap/multistart.hpp"

#include <algorithm>
#include <cmath>

#include "plap/rng.hpp"

namespace plap {

namespace {

// t^k for integer k >= 0; p is even so Phi_p and the Jacobian use odd/even
// integer powers only
double ipow(double t, int k) {
    double acc = 1.0;
    for (int e = 0; e < k; ++e) acc *= t;
    return acc;
}

// F(f, lambda) = (mu.Delta_p f - lambda mu.Phi_p f ; ||f||_p^p - 1)
void eval_residual(const SignedGraph& g, int p, const std::vector<double>& x,
                   std::vector<double>& out) {
    const int n = g.vertex_count();
    const double lambda = x[n];
    std::fill(out.begin(), out.end(), 0.0);
    for (const Edge& e : g.edges()) {
        const double d = e.sigma > 0 ? x[e.i] - x[e.j] : x[e.i] + x[e.j];
        const double t = ipow(d, p - 1);
        out[e.i] += e.w * t;
        out[e.j] += e.sigma > 0 ? -e.w * t : e.w * t;
    }
    double norm_p = 0.0;
    for (int v = 0; v < n; ++v) {
        const double fp1 = ipow(x[v], p - 1);
        out[v] += g.kappa()[v] * fp1 - lambda * g.mu()[v] * fp1;
        norm_p += g.mu()[v] * fp1 * x[v];  // mu |f|^p, p even
    }
    out[n] = norm_p - 1.0;
}

void eval_jacobian(const SignedGraph& g, int p, const std::vector<double>& x,
                   std::vector<double>& jac) {
    const int n = g.vertex_count();
    const int dim = n + 1;
    const double lambda = x[n];
    std::fill(jac.begin(), jac.end(), 0.0);
    for (const Edge& e : g.edges()) {
        const double d = e.sigma > 0 ? x[e.i] - x[e.j] : x[e.i] + x[e.j];
        const double t = (p - 1) * e.w * ipow(d, p - 2);
        jac[e.i * dim + e.i] += t;
        jac[e.j * dim + e.j] += t;
        const double cross = e.sigma > 0 ? -t : t;
        jac[e.i * dim + e.j] += cross;
        jac[e.j * dim + e.i] += cross;
    }
    for (int v = 0; v < n; ++v) {
        const double fp2 = ipow(x[v], p - 2);
        const double fp1 = fp2 * x[v];
        jac[v * dim + v] += (p - 1) * (g.kappa()[v] - lambda * g.mu()[v]) * fp2;
        jac[v * dim + n] = -g.mu()[v] * fp1;
        jac[n * dim + v] = p * g.mu()[v] * fp1;
    }
}

// in-place LU solve with partial pivoting; returns false on a singular pivot
bool solve_dense(std::vector<double>& a, std::vector<double>& b, int dim) {
    for (int col = 0; col < dim; ++col) {
        int pivot = col;
        for (int r = col + 1; r < dim; ++r)
            if (std::abs(a[r * dim + col]) > std::abs(a[pivot * dim + col])) pivot = r;
        if (std::abs(a[pivot * dim + col]) < 1e-300) return false;
        if (pivot != col) {
            for (int c = col; c < dim; ++c) std::swap(a[col * dim + c], a[pivot * dim + c]);
            std::swap(b[col], b[pivot]);
        }
        const double inv = 1.0 / a[col * dim + col];
        for (int r = col + 1; r < dim; ++r) {
            const double factor = a[r * dim + col] * inv;
            if (factor == 0.0) continue;
            for (int c = col; c < dim; ++c) a[r * dim + c] -= factor * a[col * dim + c];
            b[r] -= factor * b[col];
        }
    }
    for (int r = dim - 1; r >= 0; --r) {
        double acc = b[r];
        for (int c = r + 1; c < dim; ++c) acc -= a[r * dim + c] * b[c];
        b[r] = acc / a[r * dim + r];
    }
    return true;
}

double inf_norm(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

struct Root {
    double lambda;
    VertexFunction f;
    double fnorm;  // ||F||_inf at the root
};

// canonical sign: the entry of largest magnitude is positive
void canonicalize(VertexFunction& f) {
    int arg = 0;
    for (std::size_t i = 1; i < f.size(); ++i)
        if (std::abs(f[i]) > std::abs(f[arg])) arg = static_cast<int>(i);
    if (f[arg] < 0.0)
        for (double& x : f) x = -x;
}

}  // namespace

EigenpairList find_eigenpairs(const SignedGraph& g, int p, const MultistartConfig& cfg) {
    if (p % 2 != 0) throw Error(Errc::odd_p, "multistart solver needs even p");
    if (p < 2) throw Error(Errc::bad_params, "p must be >= 2");
    const int n = g.vertex_count();
    if (n < 1 || n > 12)
        throw Error(Errc::bad_params, "multistart solver is desk scale (1 <= n <= 12)");
    if (cfg.n_starts < 1) throw Error(Errc::bad_params, "n_starts must be >= 1");

    const int dim = n + 1;
    std::vector<Root> roots;
    std::vector<double> x(dim), trial(dim), resid(dim), trial_resid(dim), step(dim),
        jac(dim * dim);

    int converged = 0;
    for (int start = 0; start < cfg.n_starts; ++start) {
        auto rng = seeded_engine(cfg.seed, static_cast<std::uint64_t>(start));
        // start on the mu-weighted p-sphere with independent signs
        for (int v = 0; v < n; ++v) x[v] = normal(rng);
        double norm_p = 0.0;
        for (int v = 0; v < n; ++v) norm_p += g.mu()[v] * std::pow(std::abs(x[v]), p);
        if (norm_p == 0.0) continue;
        const double scale = std::pow(norm_p, -1.0 / p);
        for (int v = 0; v < n; ++v) x[v] *= scale;
        x[n] = rayleigh_quotient(g, static_cast<double>(p),
                                 VertexFunction(x.begin(), x.begin() + n));

        eval_residual(g, p, x, resid);
        double fnorm = inf_norm(resid);
        bool ok = false;
        for (int it = 0; it < cfg.max_newton_steps; ++it) {
            if (fnorm <= cfg.newton_tol) {
                ok = true;
                break;
            }
            eval_jacobian(g, p, x, jac);
            step = resid;
            for (double& s : step) s = -s;
            if (!solve_dense(jac, step, dim)) break;
            double t = 1.0;
            bool improved = false;
            for (int h = 0; h < cfg.max_halvings; ++h) {
                for (int c = 0; c < dim; ++c) trial[c] = x[c] + t * step[c];
                eval_residual(g, p, trial, trial_resid);
                const double tn = inf_norm(trial_resid);
                if (tn < fnorm) {
                    x = trial;
                    resid = trial_resid;
                    fnorm = tn;
                    improved = true;
                    break;
                }
                t *= 0.5;
            }
            if (!improved) break;
        }
        if (!(ok || fnorm <= cfg.newton_tol)) continue;
        ++converged;
        Root r;
        r.lambda = x[n];
        r.f.assign(x.begin(), x.begin() + n);
        r.fnorm = fnorm;
        canonicalize(r.f);
        roots.push_back(std::move(r));
    }

    // canonical order, then greedy merge: independent of start execution order
    std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) {
        if (a.lambda != b.lambda) return a.lambda > b.lambda;
        return std::lexicographical_compare(a.f.begin(), a.f.end(), b.f.begin(), b.f.end());
    });
    std::vector<Root> kept;
    const double ftol = std::sqrt(cfg.dedupe_tol);
    for (const Root& r : roots) {
        bool duplicate = false;
        for (const Root& k : kept) {
            if (std::abs(r.lambda - k.lambda) > cfg.dedupe_tol * std::max(1.0, std::abs(r.lambda)))
                continue;
            double dm = 0.0, dp = 0.0;
            for (std::size_t i = 0; i < r.f.size(); ++i) {
                dm += (r.f[i] - k.f[i]) * (r.f[i] - k.f[i]);
                dp += (r.f[i] + k.f[i]) * (r.f[i] + k.f[i]);
            }
            if (std::min(std::sqrt(dm), std::sqrt(dp)) <= ftol) {
                duplicate = true;
                break;
            }
        }
        if (!duplicate) kept.push_back(r);
    }

    EigenpairList out;
    out.starts_used = cfg.n_starts;
    out.converged_count = converged;
    for (const Root& r : kept) {
        Eigenpair pair;
        pair.lambda = r.lambda;
        pair.f = r.f;
        pair.residual = verify_eigenpair(g, static_cast<double>(p), r.lambda, r.f);
        out.pairs.push_back(std::move(pair));
    }
    return out;
}

}  // namespace plap
