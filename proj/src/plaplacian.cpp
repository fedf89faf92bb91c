#include "plap/plaplacian.hpp"

#include <cmath>

namespace plap {

namespace {

// t^k for integer k >= 0 by repeated squaring
double int_pow(double t, long long k) {
    double acc = 1.0, base = t;
    while (k > 0) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

}  // namespace

double signed_pow(double t, double q) {
    if (t == 0.0) return 0.0;
    const double a = std::abs(t);
    double mag;
    if (q >= 0.0 && q <= 64.0 && q == std::floor(q)) {
        mag = int_pow(a, static_cast<long long>(q));
    } else {
        mag = std::pow(a, q);
    }
    return t > 0.0 ? mag : -mag;
}

VertexFunction signed_power(const VertexFunction& f, double t) {
    VertexFunction out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = signed_pow(f[i], t);
    return out;
}

VertexFunction apply_p_laplacian(const SignedGraph& g, PParam p, const VertexFunction& f) {
    const int n = g.vertex_count();
    if (static_cast<int>(f.size()) != n)
        throw Error(Errc::bad_params, "function length does not match vertex count");
    const double pm1 = p.value - 1.0;
    VertexFunction out(n, 0.0);
    for (const Edge& e : g.edges()) {
        if (e.sigma > 0) {
            // Phi_p is odd, so the j-side term is the exact negation
            const double s = signed_pow(f[e.i] - f[e.j], pm1);
            out[e.i] += e.w * s;
            out[e.j] -= e.w * s;
        } else {
            const double s = signed_pow(f[e.i] + f[e.j], pm1);
            out[e.i] += e.w * s;
            out[e.j] += e.w * s;
        }
    }
    const auto& mu = g.mu();
    const auto& kappa = g.kappa();
    for (int v = 0; v < n; ++v) {
        if (kappa[v] != 0.0) out[v] += kappa[v] * signed_pow(f[v], pm1);
        out[v] /= mu[v];
    }
    return out;
}

double p_norm(const SignedGraph& g, const VertexFunction& f, double q) {
    const int n = g.vertex_count();
    if (static_cast<int>(f.size()) != n)
        throw Error(Errc::bad_params, "function length does not match vertex count");
    if (!(q >= 1.0)) throw Error(Errc::bad_params, "norm exponent must be >= 1");
    double scale = 0.0;
    for (double x : f) scale = std::max(scale, std::abs(x));
    if (scale == 0.0) return 0.0;
    const auto& mu = g.mu();
    double acc = 0.0;
    for (int v = 0; v < n; ++v) acc += mu[v] * std::pow(std::abs(f[v]) / scale, q);
    return scale * std::pow(acc, 1.0 / q);
}

double rayleigh_quotient(const SignedGraph& g, PParam p, const VertexFunction& f) {
    const int n = g.vertex_count();
    if (static_cast<int>(f.size()) != n)
        throw Error(Errc::bad_params, "function length does not match vertex count");
    const auto& mu = g.mu();
    const auto& kappa = g.kappa();
    double denom = 0.0;
    for (int v = 0; v < n; ++v) denom += mu[v] * std::pow(std::abs(f[v]), p.value);
    if (denom == 0.0) throw Error(Errc::zero_function, "Rayleigh quotient of the zero function");
    double num = 0.0;
    for (const Edge& e : g.edges()) {
        const double d = e.sigma > 0 ? f[e.i] - f[e.j] : f[e.i] + f[e.j];
        num += e.w * std::pow(std::abs(d), p.value);
    }
    for (int v = 0; v < n; ++v)
        if (kappa[v] != 0.0) num += kappa[v] * std::pow(std::abs(f[v]), p.value);
    return num / denom;
}

ShiftedGraph shift_potential(const SignedGraph& g) {
    const auto& kappa = g.kappa();
    const auto& mu = g.mu();
    bool negative = false;
    for (double k : kappa)
        if (k < 0.0) negative = true;
    if (!negative) return {g, 0.0};
    double c = 0.0;
    for (int v = 0; v < g.vertex_count(); ++v) c = std::max(c, std::abs(kappa[v] / mu[v]));
    std::vector<double> shifted(kappa);
    for (int v = 0; v < g.vertex_count(); ++v) {
        shifted[v] += c * mu[v];
        if (shifted[v] < 0.0) shifted[v] = 0.0;  // guard roundoff
    }
    return {g.with_kappa(std::move(shifted)), c};
}

}  // namespace plap
