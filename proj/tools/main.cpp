// Command-line front end. Subcommands: decompose, oracle, moments, sweep,
// verify. Big integers are passed and printed as decimal strings; rationals
// as "u/v" (or a bare integer).

#include "ratapprox/run.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

namespace {

using ratapprox::Fraction;
using ratapprox::Int;
using ratapprox::RunConfig;

Int parse_big(const std::string& text, const std::string& flag) {
    try {
        return Int(text);
    } catch (const std::invalid_argument&) {
        throw CLI::ValidationError(flag, "not a decimal integer: '" + text + "'");
    }
}

Fraction parse_rational(const std::string& text, const std::string& flag) {
    try {
        return Fraction::parse(text);
    } catch (const std::domain_error&) {
        throw CLI::ValidationError(flag, "not a rational 'u/v' or integer: '" + text + "'");
    }
}

std::vector<Int> parse_big_list(const std::string& text, const std::string& flag) {
    std::vector<Int> values;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string item = text.substr(start, comma == std::string::npos ? std::string::npos
                                                                         : comma - start);
        if (!item.empty())
            values.push_back(parse_big(item, flag));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    if (values.empty())
        throw CLI::ValidationError(flag, "empty list");
    return values;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"decompose a rational a/q into a sum of three or four fractions with "
                 "small denominators; includes a brute-force oracle and a product "
                 "equidistribution experiment harness"};
    app.require_subcommand(1);

    RunConfig config;
    std::string a_str, q_str, Q_str = "1", c_str = "2", eps_str = "1/10", mode_str = "auto";
    std::string D_str = "1", q_list_str, x_str, y_str, z_str = "0";
    std::string q_min_str = "2", q_max_str = "2", exponent_str = "11/5";

    auto add_io = [&](CLI::App* cmd) {
        cmd->add_option("--format", config.format, "output format: json or csv");
        cmd->add_option("--out", config.out, "output path (default stdout)");
    };

    CLI::App* dec = app.add_subcommand("decompose", "run the search engine on one instance");
    dec->add_option("--a", a_str, "numerator of the target fraction")->required();
    dec->add_option("--q", q_str, "denominator of the target fraction")->required();
    dec->add_option("--Q", Q_str, "denominator budget")->required();
    dec->add_option("--n", config.n, "number of terms (3 or 4)");
    dec->add_option("--c", c_str, "denominator scale constant, rational > 1");
    dec->add_option("--mode", mode_str, "theorem | auto | oracle-fallback");
    dec->add_option("--epsilon", eps_str, "hypothesis exponent margin (report-only)");
    add_io(dec);

    CLI::App* ora = app.add_subcommand("oracle", "best n-term approximation, denominators <= D");
    ora->add_option("--a", a_str, "numerator of the target fraction")->required();
    ora->add_option("--q", q_str, "denominator of the target fraction")->required();
    ora->add_option("--n", config.n, "number of terms (2 to 5)");
    ora->add_option("--D", D_str, "denominator cap")->required();
    add_io(ora);

    CLI::App* mom = app.add_subcommand("moments", "product-congruence second-moment reports");
    mom->add_option("--q", q_list_str, "modulus or comma-separated list")->required();
    mom->add_option("--X", x_str, "explicit X set, comma-separated (default: coprime "
                                  "integers in [1, floor(q^(2/3))])");
    mom->add_option("--Y", y_str, "window length (default floor(q^(2/3)))");
    mom->add_option("--Z", z_str, "window offset; y ranges over [Z+1, Z+Y]");
    add_io(mom);

    CLI::App* swp = app.add_subcommand("sweep", "seeded random instances through the engine");
    swp->add_option("--seed", config.seed, "PRNG seed (SplitMix64)");
    swp->add_option("--count", config.count, "number of instances")->required();
    swp->add_option("--q-min", q_min_str, "lower end of the prime range for q");
    swp->add_option("--q-max", q_max_str, "upper end of the prime range for q");
    swp->add_option("--exponent", exponent_str, "Q = ceil(q^exponent), exponent rational");
    swp->add_option("--n", config.n, "number of terms (3 or 4)");
    swp->add_option("--c", c_str, "denominator scale constant");
    swp->add_option("--epsilon", eps_str, "hypothesis exponent margin (report-only)");
    add_io(swp);

    CLI::App* ver = app.add_subcommand("verify", "recheck a decomposition JSON document");
    ver->add_option("input", config.in, "path to decomposition JSON (default stdin)");
    add_io(ver);

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(dec)) {
            config.command = RunConfig::Command::Decompose;
            config.a = parse_big(a_str, "--a");
            config.q = parse_big(q_str, "--q");
            config.Q = parse_big(Q_str, "--Q");
            config.c = parse_rational(c_str, "--c");
            config.epsilon = parse_rational(eps_str, "--epsilon");
            config.mode = ratapprox::parse_mode(mode_str);
        } else if (app.got_subcommand(ora)) {
            config.command = RunConfig::Command::Oracle;
            config.a = parse_big(a_str, "--a");
            config.q = parse_big(q_str, "--q");
            config.D = parse_big(D_str, "--D");
        } else if (app.got_subcommand(mom)) {
            config.command = RunConfig::Command::Moments;
            config.q_list = parse_big_list(q_list_str, "--q");
            if (!x_str.empty())
                config.x_set = parse_big_list(x_str, "--X");
            if (!y_str.empty())
                config.Y = parse_big(y_str, "--Y");
            config.Z = parse_big(z_str, "--Z");
        } else if (app.got_subcommand(swp)) {
            config.command = RunConfig::Command::Sweep;
            config.q_min = parse_big(q_min_str, "--q-min");
            config.q_max = parse_big(q_max_str, "--q-max");
            config.exponent = parse_rational(exponent_str, "--exponent");
            config.c = parse_rational(c_str, "--c");
            config.epsilon = parse_rational(eps_str, "--epsilon");
        } else if (app.got_subcommand(ver)) {
            config.command = RunConfig::Command::Verify;
        }
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return ratapprox::kExitError;
    }

    return ratapprox::run(config, std::cerr);
}
