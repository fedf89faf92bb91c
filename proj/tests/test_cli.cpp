#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

// End-to-end checks through the installed binary.

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string dir = "cli_scratch";
    if (std::system(("mkdir -p " + dir).c_str()) != 0) return {-1, ""};
    const std::string out_file = dir + "/stdout.txt";
    const std::string cmd =
        std::string(PLAP_CLI_PATH) + " " + args + " > " + out_file + " 2>" + dir + "/stderr.txt";
    const int status = std::system(cmd.c_str());
    std::ifstream in(out_file);
    std::stringstream ss;
    ss << in.rdbuf();
    int code = -1;
    if (WIFEXITED(status)) code = WEXITSTATUS(status);
    return {code, ss.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("gen then solve-max on a 4-cycle") {
    auto gen = run_cli("gen --type cycle --n 4 --out cli_scratch/c4.pg");
    REQUIRE(gen.exit_code == 0);
    auto solve = run_cli("solve-max --graph cli_scratch/c4.pg --p 3");
    REQUIRE(solve.exit_code == 0);
    std::istringstream out(solve.output);
    std::string key;
    double lambda = 0.0;
    out >> key >> lambda;
    CHECK(key == "lambda");
    CHECK(lambda == doctest::Approx(8.0).epsilon(1e-9));
    double residual = -1.0;
    out >> key >> residual;
    CHECK(key == "residual");
    CHECK(residual >= 0.0);
    CHECK(residual <= 1e-8);
}

TEST_CASE("verify a published eigenpair from the example file") {
    std::ofstream f("cli_scratch/signed_c4.pg");
    f << "pgraph 1\nn 4\nv 1 2.0 1.0\nv 2 1.0 1.0\nv 3 1.0 1.0\nv 4 1.0 2.0\n"
         "e 1 2 1.0 +1\ne 2 3 1.0 +1\ne 3 4 1.0 +1\ne 1 4 2.0 -1\n";
    f.close();
    auto res = run_cli(
        "verify --graph cli_scratch/signed_c4.pg --p 4 --lambda 14.48 "
        "--f 0.6796,-0.5469,0.1644,0.8337");
    REQUIRE(res.exit_code == 0);
    CHECK(std::stod(res.output) <= 2e-3);
}

TEST_CASE("exit codes: usage, solver error, criterion verdict") {
    CHECK(run_cli("definitely-not-a-command").exit_code == 1);
    CHECK(run_cli("solve-max --graph cli_scratch/c4.pg").exit_code == 1);  // missing --p

    run_cli("gen --type path --n 2 --out cli_scratch/p2.pg");
    run_cli("gen --type empty --n 3 --out cli_scratch/e3.pg");
    auto disconnected = run_cli("solve-max --graph cli_scratch/e3.pg --p 2");
    CHECK(disconnected.exit_code == 2);
    CHECK(run_cli("solve-max --graph cli_scratch/no_such_file.pg --p 2").exit_code == 2);

    run_cli("gen --type star --d 4 --out cli_scratch/k14.pg");
    run_cli("gen --type hypercube --d 3 --out cli_scratch/q3.pg");
    auto crit = run_cli(
        "criterion --g cli_scratch/q3.pg --gprime cli_scratch/k14.pg --p-grid 1.1:3:0.4");
    CHECK(crit.exit_code == 3);
    CHECK(crit.output.find("# verdict NotSubgraph") != std::string::npos);

    auto fine = run_cli(
        "criterion --g cli_scratch/q3.pg --gprime cli_scratch/p2.pg --p-grid 1.1:3:0.4");
    CHECK(fine.exit_code == 0);
    CHECK(fine.output.find("# verdict Inconclusive") != std::string::npos);
}

TEST_CASE("find-all output is deterministic for a fixed seed") {
    const std::string args =
        "find-all --graph cli_scratch/signed_c4.pg --p 4 --starts 120 --seed 6";
    auto a = run_cli(args);
    auto b = run_cli(args);
    REQUIRE(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(a.output.rfind("lambda,residual,f_1,f_2,f_3,f_4\n", 0) == 0);
}

TEST_CASE("tensor-check reports tiny deviations") {
    auto res = run_cli("tensor-check --graph cli_scratch/signed_c4.pg --p 4 --trials 50 --seed 2");
    REQUIRE(res.exit_code == 0);
    std::istringstream out(res.output);
    std::string key;
    double naive_dev = 1.0, plap_dev = 1.0;
    out >> key >> naive_dev;
    CHECK(key == "tensor_vs_naive");
    out >> key >> plap_dev;
    CHECK(key == "tensor_vs_plap");
    CHECK(naive_dev <= 1e-12);
    CHECK(plap_dev <= 1e-10);
}

TEST_CASE("sweep-p emits the scaled column on request") {
    auto res = run_cli("sweep-p --graph cli_scratch/c4.pg --p-grid 2:4:1 --scaled");
    REQUIRE(res.exit_code == 0);
    std::istringstream out(res.output);
    std::string header;
    std::getline(out, header);
    CHECK(header == "p,lambda,lambda_over_2p");
    std::string row;
    std::getline(out, row);
    CHECK(row.substr(0, 2) == "2,");
    // cycle: lambda = 2^p so the scaled column is exactly 1
    CHECK(row.find(",1") != std::string::npos);
}

TEST_CASE("solve-max writes a trace CSV when asked") {
    run_cli("gen --type star --d 3 --out cli_scratch/s3.pg");
    auto res =
        run_cli("solve-max --graph cli_scratch/s3.pg --p 2.5 --trace cli_scratch/trace.csv");
    REQUIRE(res.exit_code == 0);
    const std::string trace = slurp("cli_scratch/trace.csv");
    CHECK(trace.rfind("k,lower,upper,rel_gap\n", 0) == 0);
    CHECK(trace.find("\n1,") != std::string::npos);
}

namespace {

// bench output with the wall_time column blanked, for determinism checks
std::string strip_time_column(const std::string& csv) {
    std::istringstream in(csv);
    std::string line, out;
    while (std::getline(in, line)) {
        int commas = 0;
        std::string kept;
        for (char c : line) {
            if (c == ',') ++commas;
            if (commas == 4 && c != '\n') {
                if (c == ',') kept += c;  // keep the delimiter, drop the value
                continue;
            }
            kept += c;
        }
        out += kept + "\n";
    }
    return out;
}

}  // namespace

TEST_CASE("bench writes one row per step and is deterministic up to timing") {
    auto res = run_cli(
        "bench --n 40 --edges 150:300:3 --p 4 --seed 7 --out cli_scratch/bench.csv");
    REQUIRE(res.exit_code == 0);
    const std::string csv = slurp("cli_scratch/bench.csv");
    CHECK(csv.rfind("n,m,p,iters,wall_time,lambda,seed\n", 0) == 0);
    int rows = 0;
    for (char c : csv)
        if (c == '\n') ++rows;
    CHECK(rows == 4);  // header + 3 records

    auto rerun = run_cli(
        "bench --n 40 --edges 150:300:3 --p 4 --seed 7 --out cli_scratch/bench2.csv");
    REQUIRE(rerun.exit_code == 0);
    CHECK(strip_time_column(csv) == strip_time_column(slurp("cli_scratch/bench2.csv")));

    auto conc = run_cli(
        "bench --n 40 --edges 150:300:3 --p 4 --seed 7 --concurrent "
        "--out cli_scratch/bench3.csv");
    REQUIRE(conc.exit_code == 0);
    const std::string csv3 = slurp("cli_scratch/bench3.csv");
    CHECK(csv3.find("# concurrent") != std::string::npos);
    CHECK(strip_time_column(csv).substr(0, 40) == strip_time_column(csv3).substr(0, 40));
}

TEST_CASE("solve-max reads a starting vector from a file") {
    run_cli("gen --type cycle --n 4 --out cli_scratch/c4b.pg");
    std::ofstream f0("cli_scratch/f0.txt");
    f0 << "0.4 1.0 0.7 0.2\n";
    f0.close();
    auto res = run_cli("solve-max --graph cli_scratch/c4b.pg --p 3 --f0 cli_scratch/f0.txt");
    REQUIRE(res.exit_code == 0);
    std::istringstream out(res.output);
    std::string key;
    double lambda = 0.0;
    out >> key >> lambda;
    CHECK(lambda == doctest::Approx(8.0).epsilon(1e-9));

    std::ofstream bad("cli_scratch/f0bad.txt");
    bad << "0.4 -1.0 0.7 0.2\n";
    bad.close();
    auto fail = run_cli("solve-max --graph cli_scratch/c4b.pg --p 3 --f0 cli_scratch/f0bad.txt");
    CHECK(fail.exit_code == 2);
}
