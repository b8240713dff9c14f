#pragma once

/**
 * @file oracle.hpp
 * @brief Brute-force references: exhaustive congruence search (ground truth
 *        for the meet-in-the-middle solver) and the best achievable n-term
 *        approximation under a denominator cap.
 *
 * Enumeration caps are hard refusals. A truncated oracle is not an oracle.
 */

#include "ratapprox/arith.hpp"
#include "ratapprox/decompose.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace ratapprox {

constexpr std::uint64_t kDefaultOracleCap = 10'000'000;

/// Instance too large for exhaustive treatment.
class CapExceededError : public std::runtime_error {
public:
    explicit CapExceededError(const std::string& what) : std::runtime_error(what) {}
};

/// Full scan in the declared order (l, then p, then s); first triple that
/// satisfies the congruence and has product >= min_product.
std::optional<Triple> exhaustive_congruence3(const Int& a, const Int& q,
                                             const DenominatorFamily& S,
                                             const DenominatorFamily& P,
                                             const DenominatorFamily& L,
                                             std::uint64_t cap = kDefaultOracleCap,
                                             const Int& min_product = Int(0));

/// Scan order (l, r) lexicographic, then p, then s.
std::optional<Quad> exhaustive_congruence4(const Int& a, const Int& q,
                                           const DenominatorFamily& S,
                                           const DenominatorFamily& P,
                                           const DenominatorFamily& L,
                                           const DenominatorFamily& R4,
                                           std::uint64_t cap = kDefaultOracleCap,
                                           const Int& min_product = Int(0));

struct OracleResult {
    Fraction best_error;        // min |a/q - sum| over all denominator tuples
    std::vector<Term> witness;  // terms attaining best_error exactly
    std::uint64_t enumerated = 0;  // denominator tuples examined
};

/**
 * Best n-term approximation of a/q with denominators in [1, D].
 *
 * Denominator tuples are enumerated nondecreasing (sums are permutation
 * invariant). For a tuple with L = lcm(q_i) and g = gcd_i(L / q_i), the
 * representable sums are exactly the integer multiples of g/L, so the
 * optimal numerators need no search: the best error is the distance from
 * a/q to the nearest multiple of g/L, and witness numerators fall out of
 * the Bezout identity. Supports n in {2, 3, 4, 5}.
 */
OracleResult best_approx(const Int& a, const Int& q, int n, const Int& D,
                         std::uint64_t cap = kDefaultOracleCap);

}  // namespace ratapprox
