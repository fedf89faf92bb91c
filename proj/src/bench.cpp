#include "plap/bench.hpp"

#include <chrono>
#include <cmath>
#include <future>
#include <ostream>

#include "plap/generators.hpp"
#include "plap/graph_io.hpp"
#include "plap/power_solver.hpp"
#include "plap/rng.hpp"

namespace plap {

namespace {

BenchRecord run_one(int n, long long m, double p, std::uint64_t seed, double eps) {
    const SignedGraph g = make_gnm(n, m, seed);
    SolverConfig cfg;
    cfg.eps = eps;
    const auto t0 = std::chrono::steady_clock::now();
    const MaxEigenResult res = solve_max(g, p, cfg);
    const auto t1 = std::chrono::steady_clock::now();
    BenchRecord rec;
    rec.n = n;
    rec.m = m;
    rec.p = p;
    rec.iters = res.iterations;
    rec.wall_time = std::chrono::duration<double>(t1 - t0).count();
    rec.lambda = res.pair.lambda;
    rec.seed = seed;
    return rec;
}

}  // namespace

std::vector<BenchRecord> run_bench(const BenchPlan& plan) {
    if (plan.steps < 1) throw Error(Errc::bad_params, "bench needs steps >= 1");
    if (plan.m_from < 0 || plan.m_to < plan.m_from)
        throw Error(Errc::bad_params, "bench edge range must satisfy 0 <= from <= to");
    std::vector<long long> ms;
    for (int k = 0; k < plan.steps; ++k) {
        const double t = plan.steps == 1 ? 0.0 : static_cast<double>(k) / (plan.steps - 1);
        ms.push_back(plan.m_from +
                     static_cast<long long>(std::llround(t * (plan.m_to - plan.m_from))));
    }
    std::vector<BenchRecord> records(ms.size());
    if (plan.concurrent) {
        std::vector<std::future<BenchRecord>> futs;
        for (std::size_t k = 0; k < ms.size(); ++k)
            futs.push_back(std::async(std::launch::async, run_one, plan.n, ms[k], plan.p,
                                      mix_seed(plan.seed, k), plan.eps));
        for (std::size_t k = 0; k < ms.size(); ++k) records[k] = futs[k].get();
    } else {
        for (std::size_t k = 0; k < ms.size(); ++k)
            records[k] = run_one(plan.n, ms[k], plan.p, mix_seed(plan.seed, k), plan.eps);
    }
    return records;
}

void write_bench_csv(std::span<const BenchRecord> records, bool concurrent,
                     std::ostream& out) {
    out << "n,m,p,iters,wall_time,lambda,seed\n";
    for (const BenchRecord& r : records)
        out << r.n << "," << r.m << "," << format_double(r.p) << "," << r.iters << ","
            << format_double(r.wall_time) << "," << format_double(r.lambda) << "," << r.seed
            << "\n";
    if (concurrent) out << "# concurrent\n";
}

}  // namespace plap
