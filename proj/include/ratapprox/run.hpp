#pragma once

/**
 * @file run.hpp
 * @brief Command dispatch shared by the CLI binary and the test suites.
 *
 * Exit codes: 0 success, 1 domain/config errors, 2 NotFound (theorem mode).
 */

#include "ratapprox/decompose.hpp"
#include "ratapprox/moments.hpp"
#include "ratapprox/oracle.hpp"
#include "ratapprox/sweep.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ratapprox {

struct RunConfig {
    enum class Command { Decompose, Oracle, Moments, Sweep, Verify };

    Command command = Command::Decompose;

    // decompose / oracle
    Int a{0};
    Int q{1};
    Int Q{1};
    int n = 3;
    Fraction c{Int(2)};
    Mode mode = Mode::Auto;
    Fraction epsilon{Int(1), Int(10)};
    Int D{1};

    // moments
    std::vector<Int> q_list;
    std::optional<std::vector<Int>> x_set;  // explicit X; default rule when absent
    std::optional<Int> Y;                   // default rule when absent
    Int Z{0};

    // sweep
    std::uint64_t seed = 1;
    std::uint64_t count = 0;
    Int q_min{2};
    Int q_max{2};
    Fraction exponent{Int(11), Int(5)};

    std::string format;  // "json" or "csv"; empty picks the command default
    std::string out;     // output path; empty writes to stdout
    std::string in;      // verify input path; empty reads stdin
};

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNotFound = 2;

/// Dispatches the command; serialized output goes to config.out (or stdout),
/// diagnostics to `diag`.
int run(const RunConfig& config, std::ostream& diag);

}  // namespace ratapprox
