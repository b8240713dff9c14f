#include "ratapprox/sweep.hpp"

#include "ratapprox/sieve.hpp"

#include <sstream>
#include <stdexcept>

namespace ratapprox {

std::uint64_t SplitMix64::below(std::uint64_t n) {
    if (n == 0)
        throw std::domain_error("SplitMix64::below: empty range");
    std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
    for (;;) {
        std::uint64_t x = next();
        if (x >= threshold)
            return x % n;
    }
}

std::pair<std::vector<SweepRow>, SweepSummary> sweep_decompose(const SweepConfig& config) {
    if (config.q_min < 2 || config.q_max < config.q_min)
        throw std::domain_error("sweep_decompose: need 2 <= q_min <= q_max");
    if (config.n != 3 && config.n != 4)
        throw std::domain_error("sweep_decompose: n must be 3 or 4");

    std::vector<std::uint64_t> primes =
        primes_in(IntervalSpec::closed(Fraction(config.q_min), Fraction(config.q_max)), Int(1));
    if (primes.empty() && config.count > 0)
        throw std::domain_error("sweep_decompose: no primes in [" + config.q_min.get_str() +
                                ", " + config.q_max.get_str() + "]");

    SplitMix64 rng(config.seed);
    std::vector<SweepRow> rows;
    rows.reserve(config.count);
    SweepSummary summary;
    summary.instances = config.count;

    for (std::uint64_t i = 0; i < config.count; ++i) {
        std::uint64_t q_u = primes[rng.below(primes.size())];
        std::uint64_t a_u = 1 + rng.below(q_u - 1);

        SweepRow row;
        row.spec = make_problem(Int(static_cast<unsigned long>(a_u)),
                                Int(static_cast<unsigned long>(q_u)),
                                ceil_rational_power(Int(static_cast<unsigned long>(q_u)),
                                                    config.exponent),
                                config.n, config.c, config.mode, config.epsilon);
        row.R = floor_scaled_root(row.spec.Q, row.spec.n, row.spec.c);
        for (const DenominatorFamily& fam : build_families(config.n, row.R, row.spec.q))
            row.family_sizes.push_back(fam.members.size());

        row.result = decompose(row.spec);
        if (row.result) {
            ++summary.found;
            row.verify_pass = verify(*row.result, row.spec).all_ok();
        }
        rows.push_back(std::move(row));
    }
    return {std::move(rows), summary};
}

std::string sweep_csv(const std::vector<SweepRow>& rows, const SweepSummary& summary, int n) {
    std::ostringstream out;
    out << "q,a,Q,R,S_size,P_size,L_size";
    if (n == 4)
        out << ",R4_size";
    out << ",found,product,verify_pass\n";
    for (const SweepRow& row : rows) {
        out << row.spec.q.get_str() << ',' << row.spec.a.get_str() << ','
            << row.spec.Q.get_str() << ',' << row.R.get_str();
        for (std::size_t size : row.family_sizes)
            out << ',' << size;
        if (row.result) {
            out << ",true," << row.result->product.get_str() << ','
                << (row.verify_pass ? "true" : "false");
        } else {
            out << ",false,,";
        }
        out << '\n';
    }
    out << "# summary: instances=" << summary.instances << " found=" << summary.found
        << " success_rate=" << summary.found << "/" << summary.instances << "\n";
    return out.str();
}

}  // namespace ratapprox
