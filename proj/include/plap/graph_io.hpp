#ifndef PLAP_GRAPH_IO_HPP
#define PLAP_GRAPH_IO_HPP

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "plap/criterion.hpp"
#include "plap/graph.hpp"
#include "plap/multistart.hpp"
#include "plap/power_solver.hpp"

namespace plap {

// pgraph text format, one record per line, '#' starts a comment:
//   pgraph 1
//   n 4
//   v 1 2.0 1.0        # v <label> <mu> <kappa>   (missing v: mu=1, kappa=0)
//   e 1 2 1.0 +1       # e <i> <j> <w> <sigma>
// Labels are 1-based in the file, 0-based in SignedGraph.

SignedGraph parse_graph(std::istream& in);
SignedGraph load_graph(const std::string& path);
void write_graph(const SignedGraph& g, std::ostream& out);
void save_graph(const SignedGraph& g, const std::string& path);

/// Shortest string that round-trips the double, capped at 17 significant digits.
std::string format_double(double x);

void write_trace_csv(const IterationTrace& trace, std::ostream& out);
void write_eigenpair_table(const EigenpairList& list, std::ostream& out);
void write_criterion_report(const CriterionReport& report, std::ostream& out);
void write_sweep_csv(std::span<const double> p_grid, std::span<const double> lambdas,
                     bool scaled, std::ostream& out);

/// "a:b:h" -> {a, a+h, ..., b}, inclusive of b when h divides the span
/// (within rounding). Values must satisfy a > 1, h > 0.
std::vector<double> parse_grid(const std::string& spec);

}  // namespace plap

#endif
