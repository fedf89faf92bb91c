#include "plap/graph_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <unordered_set>

namespace plap {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
    throw Error(Errc::parse_error, "line " + std::to_string(line) + ": " + what);
}

double parse_number(const std::string& tok, int line, const char* what) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(tok, &pos);
    } catch (const std::exception&) {
        parse_fail(line, std::string("bad ") + what + " '" + tok + "'");
    }
    if (pos != tok.size() || !std::isfinite(v))
        parse_fail(line, std::string("bad ") + what + " '" + tok + "'");
    return v;
}

int parse_label(const std::string& tok, int line, int n) {
    std::size_t pos = 0;
    long v = 0;
    try {
        v = std::stol(tok, &pos);
    } catch (const std::exception&) {
        parse_fail(line, "bad vertex label '" + tok + "'");
    }
    if (pos != tok.size()) parse_fail(line, "bad vertex label '" + tok + "'");
    if (v < 1 || v > n)
        parse_fail(line, "BadLabel: vertex " + tok + " outside 1.." + std::to_string(n));
    return static_cast<int>(v - 1);
}

}  // namespace

SignedGraph parse_graph(std::istream& in) {
    std::string raw;
    int line = 0;
    bool have_magic = false, have_n = false;
    int n = 0;
    std::vector<Edge> edges;
    std::vector<double> mu, kappa;
    std::unordered_set<long long> seen_pairs;

    while (std::getline(in, raw)) {
        ++line;
        const std::size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream ss(raw);
        std::string tag;
        if (!(ss >> tag)) continue;  // blank or comment-only line

        if (!have_magic) {
            if (tag != "pgraph") parse_fail(line, "expected 'pgraph <version>' header");
            std::string ver;
            if (!(ss >> ver)) parse_fail(line, "missing format version");
            if (ver != "1")
                throw Error(Errc::version_mismatch, "pgraph version " + ver + " (expected 1)");
            have_magic = true;
            continue;
        }
        if (tag == "n") {
            if (have_n) parse_fail(line, "duplicate n record");
            std::string tok;
            if (!(ss >> tok)) parse_fail(line, "missing vertex count");
            std::size_t pos = 0;
            long count = -1;
            try {
                count = std::stol(tok, &pos);
            } catch (const std::exception&) {
                parse_fail(line, "bad vertex count '" + tok + "'");
            }
            if (pos != tok.size() || count < 0 || count > 100000000)
                parse_fail(line, "bad vertex count '" + tok + "'");
            n = static_cast<int>(count);
            mu.assign(n, 1.0);
            kappa.assign(n, 0.0);
            have_n = true;
            continue;
        }
        if (!have_n) parse_fail(line, "record before 'n <count>'");
        if (tag == "v") {
            std::string ltok, mtok, ktok;
            if (!(ss >> ltok >> mtok >> ktok)) parse_fail(line, "v record needs label, mu, kappa");
            const int v = parse_label(ltok, line, n);
            const double m = parse_number(mtok, line, "mu");
            if (!(m > 0.0)) parse_fail(line, "NonpositiveMeasure: vertex " + ltok);
            mu[v] = m;
            kappa[v] = parse_number(ktok, line, "kappa");
        } else if (tag == "e") {
            std::string itok, jtok, wtok, stok;
            if (!(ss >> itok >> jtok >> wtok >> stok))
                parse_fail(line, "e record needs i, j, w, sigma");
            Edge e;
            e.i = parse_label(itok, line, n);
            e.j = parse_label(jtok, line, n);
            if (e.i == e.j) parse_fail(line, "SelfLoop: edge at vertex " + itok);
            e.w = parse_number(wtok, line, "weight");
            if (!(e.w > 0.0)) parse_fail(line, "NonpositiveWeight: edge " + itok + " " + jtok);
            if (stok == "+1" || stok == "1") {
                e.sigma = 1;
            } else if (stok == "-1") {
                e.sigma = -1;
            } else {
                parse_fail(line, "sigma must be +1 or -1, got '" + stok + "'");
            }
            const long long lo = std::min(e.i, e.j), hi = std::max(e.i, e.j);
            const long long key = lo * static_cast<long long>(n) + hi;
            if (!seen_pairs.insert(key).second)
                parse_fail(line, "DuplicateEdge: edge " + itok + " " + jtok);
            edges.push_back(e);
        } else {
            parse_fail(line, "unknown record '" + tag + "'");
        }
        std::string extra;
        if (ss >> extra) parse_fail(line, "trailing token '" + extra + "'");
    }
    if (!have_magic) throw Error(Errc::parse_error, "empty input: missing pgraph header");
    if (!have_n) throw Error(Errc::parse_error, "missing 'n <count>' record");
    return SignedGraph(n, std::move(edges), std::move(mu), std::move(kappa));
}

SignedGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::parse_error, "cannot open '" + path + "'");
    return parse_graph(in);
}

void write_graph(const SignedGraph& g, std::ostream& out) {
    out << "pgraph 1\n";
    out << "n " << g.vertex_count() << "\n";
    for (int v = 0; v < g.vertex_count(); ++v)
        out << "v " << (v + 1) << " " << format_double(g.mu()[v]) << " "
            << format_double(g.kappa()[v]) << "\n";
    for (const Edge& e : g.edges())
        out << "e " << (e.i + 1) << " " << (e.j + 1) << " " << format_double(e.w) << " "
            << (e.sigma > 0 ? "+1" : "-1") << "\n";
}

void save_graph(const SignedGraph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error(Errc::parse_error, "cannot write '" + path + "'");
    write_graph(g, out);
}

void write_trace_csv(const IterationTrace& trace, std::ostream& out) {
    out << "k,lower,upper,rel_gap\n";
    for (std::size_t k = 0; k < trace.size(); ++k)
        out << (k + 1) << "," << format_double(trace[k].lower) << ","
            << format_double(trace[k].upper) << "," << format_double(trace[k].rel_gap) << "\n";
}

void write_eigenpair_table(const EigenpairList& list, std::ostream& out) {
    const std::size_t n = list.pairs.empty() ? 0 : list.pairs.front().f.size();
    out << "lambda,residual";
    for (std::size_t i = 1; i <= n; ++i) out << ",f_" << i;
    out << "\n";
    for (const Eigenpair& pair : list.pairs) {
        out << format_double(pair.lambda) << "," << format_double(pair.residual);
        for (double x : pair.f) out << "," << format_double(x);
        out << "\n";
    }
}

void write_criterion_report(const CriterionReport& report, std::ostream& out) {
    out << "p,lambda_G,lambda_Gprime,witness\n";
    for (std::size_t k = 0; k < report.p_grid.size(); ++k) {
        const bool witness =
            std::find(report.witnesses.begin(), report.witnesses.end(), report.p_grid[k]) !=
            report.witnesses.end();
        out << format_double(report.p_grid[k]) << "," << format_double(report.lambda_g[k])
            << "," << format_double(report.lambda_gp[k]) << "," << (witness ? 1 : 0) << "\n";
    }
    out << "# baselines_G adjacency=" << format_double(report.baselines_g.adjacency)
        << " laplacian=" << format_double(report.baselines_g.laplacian)
        << " signless=" << format_double(report.baselines_g.signless) << "\n";
    out << "# baselines_Gprime adjacency=" << format_double(report.baselines_gp.adjacency)
        << " laplacian=" << format_double(report.baselines_gp.laplacian)
        << " signless=" << format_double(report.baselines_gp.signless) << "\n";
    out << "# verdict "
        << (report.verdict == Verdict::not_subgraph ? "NotSubgraph" : "Inconclusive") << "\n";
}

void write_sweep_csv(std::span<const double> p_grid, std::span<const double> lambdas,
                     bool scaled, std::ostream& out) {
    out << (scaled ? "p,lambda,lambda_over_2p\n" : "p,lambda\n");
    for (std::size_t k = 0; k < p_grid.size(); ++k) {
        out << format_double(p_grid[k]) << "," << format_double(lambdas[k]);
        if (scaled) out << "," << format_double(lambdas[k] / std::pow(2.0, p_grid[k]));
        out << "\n";
    }
}

std::vector<double> parse_grid(const std::string& spec) {
    double a = 0.0, b = 0.0, h = 0.0;
    char c1 = 0, c2 = 0;
    std::istringstream ss(spec);
    if (!(ss >> a >> c1 >> b >> c2 >> h) || c1 != ':' || c2 != ':' || (ss >> std::ws, !ss.eof()))
        throw Error(Errc::bad_params, "grid must be 'start:stop:step', got '" + spec + "'");
    if (!(a > 1.0)) throw Error(Errc::bad_params, "grid start must be > 1");
    if (!(h > 0.0)) throw Error(Errc::bad_params, "grid step must be > 0");
    if (b < a) throw Error(Errc::bad_params, "grid stop must be >= start");
    std::vector<double> grid;
    for (int k = 0;; ++k) {
        const double p = a + k * h;
        if (p > b + 1e-12 * std::max(1.0, std::abs(b))) break;
        grid.push_back(p);
    }
    return grid;
}

}  // namespace plap
