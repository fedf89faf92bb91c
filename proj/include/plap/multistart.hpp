#ifndef PLAP_MULTISTART_HPP
#define PLAP_MULTISTART_HPP

#include <cstdint>

#include "plap/power_solver.hpp"

namespace plap {

struct MultistartConfig {
    int n_starts = 2000;
    std::uint64_t seed = 1;
    double newton_tol = 1e-10;
    double dedupe_tol = 1e-6;
    int max_newton_steps = 200;
    int max_halvings = 40;
};

struct EigenpairList {
    std::vector<Eigenpair> pairs;  // distinct under dedupe, lambda descending
    int starts_used = 0;
    int converged_count = 0;
};

/// All eigenpairs reachable by damped Newton from n_starts random points on
/// the mu-weighted p-sphere, for even p at desk scale (n <= 12). Each start
/// solves F(f, lambda) = (mu.Delta_p f - lambda mu.Phi_p(f); ||f||_p^p - 1)
/// with the analytic Jacobian and backtracking line search. Converged roots
/// (||F||_inf <= newton_tol) are deduplicated up to sign: (lambda, f) and
/// (lambda', f') coincide iff |lambda - lambda'| <= dedupe_tol max(1,|lambda|)
/// and min(||f - f'||, ||f + f'||) <= sqrt(dedupe_tol).
/// The list reports what was found; no completeness claim is made.
/// Throws OddP for odd p, BadParams for n > 12 or n_starts < 1.
EigenpairList find_eigenpairs(const SignedGraph& g, int p, const MultistartConfig& cfg = {});

}  // namespace plap

#endif
