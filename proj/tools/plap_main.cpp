#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "plap/bench.hpp"
#include "plap/criterion.hpp"
#include "plap/generators.hpp"
#include "plap/graph_io.hpp"
#include "plap/multistart.hpp"
#include "plap/power_solver.hpp"
#include "plap/rng.hpp"
#include "plap/tensor_pair.hpp"

namespace {

plap::SignedGraph generate_named(const std::string& type, int n, int d, long long m,
                                 std::uint64_t seed, int sigma, const std::string& g1,
                                 const std::string& g2) {
    using namespace plap;
    if (type == "path") return make_path(n, sigma);
    if (type == "cycle") return make_cycle(n, sigma);
    if (type == "complete") return make_complete(n, sigma);
    if (type == "empty") return make_empty(n);
    if (type == "star") return make_star(d, sigma);
    if (type == "hypercube") return make_hypercube(d, sigma);
    if (type == "gnm") return make_gnm(n, m, seed, sigma);
    if (type == "join") {
        if (g1.empty() || g2.empty())
            throw Error(Errc::bad_params, "join needs --g1 and --g2 graph files");
        return make_join(load_graph(g1), load_graph(g2), sigma);
    }
    throw Error(Errc::bad_params, "unknown graph type '" + type + "'");
}

std::vector<double> parse_vector(const std::string& csv) {
    std::vector<double> out;
    std::istringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t pos = 0;
        double v = 0.0;
        try {
            v = std::stod(tok, &pos);
        } catch (const std::exception&) {
            throw plap::Error(plap::Errc::bad_params, "bad vector entry '" + tok + "'");
        }
        if (pos != tok.size() || !std::isfinite(v))
            throw plap::Error(plap::Errc::bad_params, "bad vector entry '" + tok + "'");
        out.push_back(v);
    }
    if (out.empty()) throw plap::Error(plap::Errc::bad_params, "empty vector");
    return out;
}

std::vector<double> read_vector_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw plap::Error(plap::Errc::parse_error, "cannot open '" + path + "'");
    std::vector<double> out;
    double v;
    while (in >> v) out.push_back(v);
    if (out.empty()) throw plap::Error(plap::Errc::bad_params, "no values in '" + path + "'");
    return out;
}

void write_to(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw plap::Error(plap::Errc::parse_error, "cannot write '" + path + "'");
    out << content;
}

// "a:b:steps" for the bench edge sweep
void parse_edge_range(const std::string& spec, long long& from, long long& to, int& steps) {
    char c1 = 0, c2 = 0;
    std::istringstream ss(spec);
    if (!(ss >> from >> c1 >> to >> c2 >> steps) || c1 != ':' || c2 != ':' ||
        (ss >> std::ws, !ss.eof()))
        throw plap::Error(plap::Errc::bad_params,
                          "edge range must be 'from:to:steps', got '" + spec + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Eigenpairs of the p-Laplacian of signed weighted graphs"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a named graph and write it");
    std::string gen_type, gen_out, gen_g1, gen_g2;
    int gen_n = 0, gen_d = 0, gen_sigma = -1;
    long long gen_m = 0;
    std::uint64_t gen_seed = 0;
    gen->add_option("--type", gen_type,
                    "path|cycle|complete|empty|star|hypercube|gnm|join")->required();
    gen->add_option("--n", gen_n, "vertex count");
    gen->add_option("--d", gen_d, "star leaves / hypercube dimension");
    gen->add_option("--m", gen_m, "gnm edge count");
    gen->add_option("--seed", gen_seed, "gnm seed");
    gen->add_option("--sigma", gen_sigma, "edge signature, +1 or -1")
        ->check(CLI::IsMember({1, -1}));
    gen->add_option("--g1", gen_g1, "join: first graph file");
    gen->add_option("--g2", gen_g2, "join: second graph file");
    gen->add_option("--out", gen_out, "output pgraph file")->required();

    // solve-max
    auto* solve = app.add_subcommand("solve-max", "largest signless eigenpair (Perron iteration)");
    std::string solve_graph, solve_f0 = "ones", solve_trace;
    double solve_p = 2.0, solve_eps = 1e-10;
    int solve_max_iter = 100000;
    solve->add_option("--graph", solve_graph)->required();
    solve->add_option("--p", solve_p)->required();
    solve->add_option("--eps", solve_eps, "relative bracket-gap tolerance");
    solve->add_option("--max-iter", solve_max_iter);
    solve->add_option("--f0", solve_f0, "'ones' or a file of n positive values");
    solve->add_option("--trace", solve_trace, "write per-iteration bracket CSV here");

    // verify
    auto* verify = app.add_subcommand("verify", "residual of a claimed eigenpair");
    std::string verify_graph, verify_f;
    double verify_p = 2.0, verify_lambda = 0.0;
    verify->add_option("--graph", verify_graph)->required();
    verify->add_option("--p", verify_p)->required();
    verify->add_option("--lambda", verify_lambda)->required();
    verify->add_option("--f", verify_f, "comma-separated eigenfunction values")->required();

    // find-all
    auto* findall = app.add_subcommand("find-all", "multistart Newton eigenpair search (even p)");
    std::string findall_graph;
    int findall_p = 4, findall_starts = 2000;
    std::uint64_t findall_seed = 1;
    double findall_newton_tol = 1e-10, findall_dedupe_tol = 1e-6;
    findall->add_option("--graph", findall_graph)->required();
    findall->add_option("--p", findall_p)->required();
    findall->add_option("--starts", findall_starts)->required();
    findall->add_option("--seed", findall_seed)->required();
    findall->add_option("--newton-tol", findall_newton_tol);
    findall->add_option("--dedupe-tol", findall_dedupe_tol);

    // tensor-check
    auto* tcheck = app.add_subcommand("tensor-check", "cross-check the tensor contraction paths");
    std::string tcheck_graph;
    int tcheck_p = 4, tcheck_trials = 100;
    std::uint64_t tcheck_seed = 1;
    tcheck->add_option("--graph", tcheck_graph)->required();
    tcheck->add_option("--p", tcheck_p)->required();
    tcheck->add_option("--trials", tcheck_trials)->required();
    tcheck->add_option("--seed", tcheck_seed)->required();

    // criterion
    auto* crit = app.add_subcommand("criterion", "forbidden-subgraph screening by p-sweep");
    std::string crit_g, crit_gp, crit_grid = "1.05:5:0.05", crit_out;
    crit->add_option("--g", crit_g, "host graph G")->required();
    crit->add_option("--gprime", crit_gp, "candidate subgraph G'")->required();
    crit->add_option("--p-grid", crit_grid, "start:stop:step");
    crit->add_option("--out", crit_out, "report file (default stdout)");

    // sweep-p
    auto* sweep = app.add_subcommand("sweep-p", "lambda_max across a p grid");
    std::string sweep_graph, sweep_grid, sweep_out;
    bool sweep_scaled = false;
    sweep->add_option("--graph", sweep_graph)->required();
    sweep->add_option("--p-grid", sweep_grid, "start:stop:step")->required();
    sweep->add_flag("--scaled", sweep_scaled, "also emit lambda / 2^p");
    sweep->add_option("--out", sweep_out, "CSV file (default stdout)");

    // bench
    auto* bench = app.add_subcommand("bench", "gnm edge sweep timing the solver");
    std::string bench_edges, bench_out;
    int bench_n = 1000;
    double bench_p = 20.0, bench_eps = 1e-10;
    std::uint64_t bench_seed = 7;
    bool bench_concurrent = false;
    bench->add_option("--n", bench_n)->required();
    bench->add_option("--edges", bench_edges, "from:to:steps")->required();
    bench->add_option("--p", bench_p)->required();
    bench->add_option("--seed", bench_seed)->required();
    bench->add_option("--eps", bench_eps);
    bench->add_flag("--concurrent", bench_concurrent, "solve grid points in parallel");
    bench->add_option("--out", bench_out, "CSV file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (*gen) {
            plap::save_graph(
                generate_named(gen_type, gen_n, gen_d, gen_m, gen_seed, gen_sigma, gen_g1, gen_g2),
                gen_out);
        } else if (*solve) {
            plap::SolverConfig cfg;
            cfg.eps = solve_eps;
            cfg.max_iter = solve_max_iter;
            cfg.record_trace = !solve_trace.empty();
            if (solve_f0 != "ones") cfg.f0 = read_vector_file(solve_f0);
            const auto res = plap::solve_max(plap::load_graph(solve_graph), solve_p, cfg);
            std::cout << "lambda " << plap::format_double(res.pair.lambda) << "\n";
            std::cout << "residual " << plap::format_double(res.pair.residual) << "\n";
            if (!solve_trace.empty()) {
                std::ostringstream csv;
                plap::write_trace_csv(res.trace, csv);
                write_to(solve_trace, csv.str());
            }
        } else if (*verify) {
            const auto g = plap::load_graph(verify_graph);
            const double res =
                plap::verify_eigenpair(g, verify_p, verify_lambda, parse_vector(verify_f));
            std::cout << plap::format_double(res) << "\n";
        } else if (*findall) {
            plap::MultistartConfig cfg;
            cfg.n_starts = findall_starts;
            cfg.seed = findall_seed;
            cfg.newton_tol = findall_newton_tol;
            cfg.dedupe_tol = findall_dedupe_tol;
            const auto list = plap::find_eigenpairs(plap::load_graph(findall_graph), findall_p, cfg);
            if (list.pairs.empty())
                throw plap::Error(plap::Errc::no_convergence,
                                  "no start converged; diagnostics: starts=" +
                                      std::to_string(list.starts_used));
            plap::write_eigenpair_table(list, std::cout);
            std::cerr << "found " << list.pairs.size() << " distinct eigenpairs ("
                      << list.converged_count << "/" << list.starts_used
                      << " starts converged)\n";
        } else if (*tcheck) {
            const auto g = plap::load_graph(tcheck_graph);
            const auto pair = plap::build_tensor_pair(g, tcheck_p);
            auto rng = plap::seeded_engine(tcheck_seed);
            double dev_naive = 0.0, dev_plap = 0.0;
            for (int t = 0; t < tcheck_trials; ++t) {
                plap::VertexFunction f(g.vertex_count());
                for (double& x : f) x = plap::uniform_range(rng, -1.0, 1.0);
                const auto a = pair.tensor_apply(f);
                const auto b = pair.tensor_apply_naive(f);
                const auto d = plap::apply_p_laplacian(g, static_cast<double>(tcheck_p), f);
                double scale = 1.0;
                for (double x : a) scale = std::max(scale, std::abs(x));
                for (int v = 0; v < g.vertex_count(); ++v) {
                    dev_naive = std::max(dev_naive, std::abs(a[v] - b[v]) / scale);
                    dev_plap = std::max(dev_plap, std::abs(a[v] - g.mu()[v] * d[v]) / scale);
                }
            }
            std::cout << "tensor_vs_naive " << plap::format_double(dev_naive) << "\n";
            std::cout << "tensor_vs_plap " << plap::format_double(dev_plap) << "\n";
        } else if (*crit) {
            const auto grid = plap::parse_grid(crit_grid);
            const auto report = plap::criterion_sweep(plap::load_graph(crit_g),
                                                      plap::load_graph(crit_gp), grid);
            std::ostringstream csv;
            plap::write_criterion_report(report, csv);
            write_to(crit_out, csv.str());
            if (report.verdict == plap::Verdict::not_subgraph) return 3;
        } else if (*sweep) {
            const auto g = plap::load_graph(sweep_graph);
            const auto grid = plap::parse_grid(sweep_grid);
            std::vector<double> lambdas;
            for (double p : grid) lambdas.push_back(plap::lambda_max_signless(g, p));
            std::ostringstream csv;
            plap::write_sweep_csv(grid, lambdas, sweep_scaled, csv);
            write_to(sweep_out, csv.str());
        } else if (*bench) {
            plap::BenchPlan plan;
            plan.n = bench_n;
            parse_edge_range(bench_edges, plan.m_from, plan.m_to, plan.steps);
            plan.p = bench_p;
            plan.seed = bench_seed;
            plan.eps = bench_eps;
            plan.concurrent = bench_concurrent;
            const auto records = plap::run_bench(plan);
            std::ostringstream csv;
            plap::write_bench_csv(records, plan.concurrent, csv);
            write_to(bench_out, csv.str());
        }
    } catch (const plap::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
