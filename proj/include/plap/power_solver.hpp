#ifndef PLAP_POWER_SOLVER_HPP
#define PLAP_POWER_SOLVER_HPP

#include <optional>
#include <vector>

#include "plap/plaplacian.hpp"

namespace plap {

struct SolverConfig {
    double eps = 1e-10;  // relative-gap tolerance, in (0,1)
    int max_iter = 100000;
    std::optional<VertexFunction> f0;  // strictly positive; default all-ones
    bool record_trace = false;

    // Normalization norm for the iterates. The brackets are scale-free, so
    // this only affects the returned eigenfunction's scaling.
    enum class Norm { mu_weighted_2, unweighted_2 };
    Norm norm = Norm::mu_weighted_2;
};

struct Eigenpair {
    double lambda = 0.0;
    VertexFunction f;
    double residual = 0.0;  // max_i |(Delta_p f)_i - lambda Phi_p(f_i)| / max(1,|lambda|)
};

/// One row per iteration k = 1, 2, ...: the two-sided eigenvalue enclosure
/// and its relative gap (upper - lower) / (upper + lower).
struct TraceRow {
    double lower;
    double upper;
    double rel_gap;
};
using IterationTrace = std::vector<TraceRow>;

struct MaxEigenResult {
    Eigenpair pair;
    IterationTrace trace;  // filled only when record_trace
    int iterations = 0;
    double shift = 0.0;  // the potential shift c applied internally
};

/// Largest eigenpair of the signless (sigma == -1) p-Laplacian by the
/// monotone power iteration: f <- normalize((Delta_p f)^{1/(p-1)}), with the
/// brackets lower_k = min_i (Delta_p f)_i / f_i^{p-1} and upper_k = max_i,
/// stopping when their relative gap drops below eps. Returns
/// lambda = (upper + lower)/2 - c after shifting the potential nonnegative.
/// Requires a connected graph with n >= 2. Throws NotConnected, NotSignless,
/// BadInitial, BadParams (n < 2), MaxIterError.
MaxEigenResult solve_max(const SignedGraph& g, PParam p, const SolverConfig& cfg = {});

/// max_i |(Delta_p f)_i - lambda Phi_p(f_i)| / max(1, |lambda|), for any
/// signature. Throws ZeroFunction.
double verify_eigenpair(const SignedGraph& g, PParam p, double lambda,
                        const VertexFunction& f);

}  // namespace plap

#endif
