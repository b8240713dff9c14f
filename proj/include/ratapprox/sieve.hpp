#pragma once

/**
 * @file sieve.hpp
 * @brief Primes and integers inside rational-endpoint intervals, filtered to
 *        be coprime to a modulus.
 *
 * primes_in runs a segmented sieve of Eratosthenes over the integer span of
 * the interval. Values are returned ascending and duplicate-free; every
 * returned m satisfies gcd(m, q) = 1.
 */

#include "ratapprox/arith.hpp"
#include "ratapprox/interval.hpp"

#include <cstdint>
#include <vector>

namespace ratapprox {

/// Primes p in the interval with gcd(p, coprime_to) == 1, ascending.
std::vector<std::uint64_t> primes_in(const IntervalSpec& interval, const Int& coprime_to);

/// Integers s in the interval with gcd(s, coprime_to) == 1, ascending.
std::vector<std::uint64_t> integers_in(const IntervalSpec& interval, const Int& coprime_to);

}  // namespace ratapprox
