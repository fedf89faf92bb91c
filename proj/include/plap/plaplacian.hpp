#ifndef PLAP_PLAPLACIAN_HPP
#define PLAP_PLAPLACIAN_HPP

#include "plap/graph.hpp"

namespace plap {

/// The exponent of the p-Laplacian; strictly greater than 1.
struct PParam {
    PParam(double v) : value(v) {
        if (!(v > 1.0)) throw Error(Errc::bad_params, "p must be > 1");
    }
    double value;
};

/// |t|^q * sign(t), with the t == 0 branch returning exactly 0. Integer
/// exponents take a repeated-squaring fast path.
double signed_pow(double t, double q);

/// Phi_p(t) = |t|^{p-2} t, i.e. signed_pow(t, p-1); Phi_p(0) = 0.
inline double phi_p(double t, PParam p) { return signed_pow(t, p.value - 1.0); }

/// Entrywise |f_i|^t sign(f_i).
VertexFunction signed_power(const VertexFunction& f, double t);

/// (Delta_p f)_i = (1/mu_i) (sum_{j~i} w_ij Phi_p(f_i - sigma_ij f_j)
///                 + kappa_i Phi_p(f_i)). One pass over the edge list.
VertexFunction apply_p_laplacian(const SignedGraph& g, PParam p, const VertexFunction& f);

/// (sum_i mu_i |f_i|^q)^{1/q}, q >= 1. Scaled internally to avoid overflow.
double p_norm(const SignedGraph& g, const VertexFunction& f, double q);

/// Rayleigh quotient R_p(f): p-energy over the mu-weighted p-norm.
/// Scale invariant; throws ZeroFunction for f == 0.
double rayleigh_quotient(const SignedGraph& g, PParam p, const VertexFunction& f);

struct ShiftedGraph {
    SignedGraph graph;
    double c;  // lambda_max(original) == lambda_max(shifted) - c
};

/// If kappa >= 0 returns (g, 0); otherwise kappa'_i = kappa_i + c mu_i with
/// c = max_i |kappa_i / mu_i|, which makes kappa' >= 0 entrywise.
ShiftedGraph shift_potential(const SignedGraph& g);

}  // namespace plap

#endif
