#ifndef PLAP_BENCH_HPP
#define PLAP_BENCH_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace plap {

struct BenchRecord {
    int n = 0;
    long long m = 0;
    double p = 0.0;
    int iters = 0;
    double wall_time = 0.0;  // seconds around the solve only
    double lambda = 0.0;
    std::uint64_t seed = 0;
};

struct BenchPlan {
    int n = 1000;
    long long m_from = 10000;
    long long m_to = 250000;
    int steps = 20;
    double p = 20.0;
    std::uint64_t seed = 7;
    double eps = 1e-10;
    bool concurrent = false;  // solve grid points in parallel (timings noisy)
};

/// Generates gnm(n, m_k, seed_k) across the edge sweep and solves each with
/// the power iteration, timing the solve call only. Graph k uses the
/// deterministic sub-seed mix(seed, k).
std::vector<BenchRecord> run_bench(const BenchPlan& plan);

/// CSV: n,m,p,iters,wall_time,lambda,seed. A '# concurrent' comment line is
/// appended when the plan ran concurrently.
void write_bench_csv(std::span<const BenchRecord> records, bool concurrent,
                     std::ostream& out);

}  // namespace plap

#endif
