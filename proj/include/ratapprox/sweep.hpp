#pragma once

/**
 * @file sweep.hpp
 * @brief Seeded randomized instance sweeps over the decomposition engine.
 *
 * The generator is SplitMix64 (Steele-Lea-Flood finalizer); the seed fully
 * determines the instance list, so sweep output is byte-reproducible. Per
 * instance the draw order is fixed: first the prime q (uniform over primes
 * in [q_min, q_max]), then a (uniform in [1, q-1]).
 */

#include "ratapprox/arith.hpp"
#include "ratapprox/decompose.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ratapprox {

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, n); unbiased by rejection. n must be positive.
    std::uint64_t below(std::uint64_t n);

private:
    std::uint64_t state_;
};

struct SweepConfig {
    std::uint64_t seed = 1;
    std::uint64_t count = 0;
    Int q_min{2};
    Int q_max{2};
    Fraction exponent{Int(11), Int(5)};  // Q = ceil(q^exponent), exactly
    int n = 3;
    Fraction c{Int(2)};
    Mode mode = Mode::Theorem;
    Fraction epsilon{Int(1), Int(10)};
};

struct SweepRow {
    ProblemSpec spec;
    Int R;
    std::vector<std::size_t> family_sizes;  // |S|, |P|, |L| (, |R4|)
    std::optional<Decomposition> result;
    bool verify_pass = false;
};

struct SweepSummary {
    std::uint64_t instances = 0;
    std::uint64_t found = 0;
};

std::pair<std::vector<SweepRow>, SweepSummary> sweep_decompose(const SweepConfig& config);

/// CSV rows q,a,Q,R,S_size,P_size,L_size[,R4_size],found,product,verify_pass
/// followed by a `# summary:` comment line with the success rate.
std::string sweep_csv(const std::vector<SweepRow>& rows, const SweepSummary& summary, int n);

}  // namespace ratapprox
