#ifndef PLAP_ERRORS_HPP
#define PLAP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace plap {

// Every failure mode exposed by the library. The CLI maps these to exit
// code 2 and prints the case name on stderr.
enum class Errc {
    duplicate_edge,
    self_loop,
    nonpositive_weight,
    nonpositive_measure,
    bad_label,
    bad_params,
    too_large_for_search,
    not_connected,
    not_signless,
    bad_initial,
    max_iter_exceeded,
    zero_function,
    odd_p,
    too_large,
    no_convergence,
    empty_graph,
    parse_error,
    version_mismatch,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& detail)
        : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

// Thrown by solve_max when the bracket gap has not closed within max_iter;
// carries the best enclosure reached so callers can loosen the tolerance.
class MaxIterError : public Error {
public:
    MaxIterError(double lower, double upper, int iterations, const std::string& detail)
        : Error(Errc::max_iter_exceeded, detail),
          lower(lower), upper(upper), iterations(iterations) {}

    double lower;
    double upper;
    int iterations;
};

}  // namespace plap

#endif
