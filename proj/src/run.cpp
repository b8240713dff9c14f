#include "ratapprox/run.hpp"

#include "ratapprox/json_io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace ratapprox {

namespace {

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file)
        throw std::runtime_error("cannot open output file '" + out_path + "'");
    file << text;
}

std::string format_or(const RunConfig& config, const char* fallback) {
    return config.format.empty() ? fallback : config.format;
}

/// One-line CSV rendering of a decomposition, same shape as a sweep row.
std::string decomposition_csv(const ProblemSpec& spec, const Decomposition& d) {
    SweepRow row;
    row.spec = spec;
    row.R = floor_scaled_root(spec.Q, spec.n, spec.c);
    for (const DenominatorFamily& fam : build_families(spec.n, row.R, spec.q))
        row.family_sizes.push_back(fam.members.size());
    row.result = d;
    row.verify_pass = verify(d, spec).all_ok();
    SweepSummary summary{1, 1};
    return sweep_csv({row}, summary, spec.n);
}

int run_decompose(const RunConfig& config) {
    ProblemSpec spec =
        make_problem(config.a, config.q, config.Q, config.n, config.c, config.mode,
                     config.epsilon);
    std::optional<Decomposition> result = decompose(spec);
    if (!result)
        return kExitNotFound;

    std::string fmt = format_or(config, "json");
    if (fmt == "json")
        write_output(decomposition_json(spec, *result).dump(2) + "\n", config.out);
    else if (fmt == "csv")
        write_output(decomposition_csv(spec, *result), config.out);
    else
        throw std::domain_error("decompose: unknown format '" + fmt + "'");
    return kExitOk;
}

int run_oracle(const RunConfig& config) {
    auto [a, q] = normalize(config.a, config.q);
    OracleResult result = best_approx(a, q, config.n, config.D);
    if (format_or(config, "json") != "json")
        throw std::domain_error("oracle: only json output is supported");
    write_output(oracle_json(a, q, config.n, config.D, result).dump(2) + "\n", config.out);
    return kExitOk;
}

int run_moments(const RunConfig& config) {
    if (format_or(config, "csv") != "csv")
        throw std::domain_error("moments: only csv output is supported");
    XRule x_rule = config.x_set ? XRule([set = explicit_x_set(*config.x_set)](const Int&) {
        return set;
    })
                                : default_x_rule();
    YRule y_rule = config.Y ? YRule([y = *config.Y](const Int&) { return y; })
                            : default_y_rule();
    std::vector<MomentReport> reports = moment_sweep(config.q_list, x_rule, y_rule, config.Z);
    write_output(moments_csv(reports), config.out);
    return kExitOk;
}

int run_sweep(const RunConfig& config) {
    if (format_or(config, "csv") != "csv")
        throw std::domain_error("sweep: only csv output is supported");
    SweepConfig sweep;
    sweep.seed = config.seed;
    sweep.count = config.count;
    sweep.q_min = config.q_min;
    sweep.q_max = config.q_max;
    sweep.exponent = config.exponent;
    sweep.n = config.n;
    sweep.c = config.c;
    sweep.mode = Mode::Theorem;
    sweep.epsilon = config.epsilon;
    auto [rows, summary] = sweep_decompose(sweep);
    write_output(sweep_csv(rows, summary, sweep.n), config.out);
    return kExitOk;
}

int run_verify(const RunConfig& config) {
    std::string text;
    if (config.in.empty()) {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        text = buffer.str();
    } else {
        std::ifstream file(config.in, std::ios::binary);
        if (!file)
            throw std::runtime_error("cannot open input file '" + config.in + "'");
        std::ostringstream buffer;
        buffer << file.rdbuf();
        text = buffer.str();
    }
    ParsedDecomposition parsed = decomposition_from_json(text);
    VerificationReport report = verify(parsed.decomposition, parsed.spec);
    write_output(verification_json(report).dump(2) + "\n", config.out);
    return kExitOk;
}

}  // namespace

int run(const RunConfig& config, std::ostream& diag) {
    try {
        switch (config.command) {
            case RunConfig::Command::Decompose: {
                int code = run_decompose(config);
                if (code == kExitNotFound)
                    diag << "no decomposition found (theorem mode)\n";
                return code;
            }
            case RunConfig::Command::Oracle:
                return run_oracle(config);
            case RunConfig::Command::Moments:
                return run_moments(config);
            case RunConfig::Command::Sweep:
                return run_sweep(config);
            case RunConfig::Command::Verify:
                return run_verify(config);
        }
        diag << "unknown command\n";
        return kExitError;
    } catch (const CapExceededError& e) {
        diag << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        diag << "error: " << e.what() << "\n";
        return kExitError;
    }
}

}  // namespace ratapprox
