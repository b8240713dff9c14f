#pragma once

/**
 * @file decompose.hpp
 * @brief Decompose a/q into a sum of n in {3,4} fractions with small
 *        denominators.
 *
 * The search works on a denominator budget Q and a scale constant c > 1.
 * With R = floor(c * Q^(1/n)), candidate denominators are drawn from
 * disjoint subintervals of [1, R]: a block of plain integers (S) and blocks
 * of primes (P, L and, for n = 4, R4), all coprime to q. Disjointness makes
 * any cross-family selection pairwise coprime.
 *
 * A selection whose product is congruent to a^{-1} mod q yields
 * a*q1*...*qn = 1 + b*q; splitting b into partial fractions over the qi
 * gives terms whose error against a/q is exactly 1/(q*q1*...*qn), which is
 * within the 1/(qQ) budget exactly when q1*...*qn >= Q. Family membership
 * alone does not force that (the interval minima multiply out below Q), so
 * the engine also applies the product threshold during the search.
 *
 * When R >= q the fraction a/q itself fits the budget (trivial path,
 * error 0). When the congruence has no solution over the families the
 * engine reports NotFound (theorem mode) or falls back to the brute-force
 * oracle (auto mode); at small q no solution is a perfectly normal outcome.
 */

#include "ratapprox/arith.hpp"
#include "ratapprox/interval.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ratapprox {

enum class Mode { Theorem, Auto, OracleFallback };
enum class Path { TheoremSearch, Trivial, OracleFallback };

std::string to_string(Mode mode);
std::string to_string(Path path);
Mode parse_mode(std::string_view text);    // throws std::domain_error
Path parse_path(std::string_view text);    // throws std::domain_error

struct ProblemSpec {
    Int a;                    // gcd(a, q) == 1
    Int q;                    // >= 1
    Int Q;                    // denominator budget, >= 1
    int n = 3;                // 3 or 4
    Fraction c{Int(2)};       // denominator scale constant, > 1
    Mode mode = Mode::Auto;
    Fraction epsilon{Int(1), Int(10)};  // hypothesis flag Q >= q^(2+eps); report-only
};

/// Reduce a_raw/q_raw to lowest terms, sign on the numerator. q_raw == 0 throws.
std::pair<Int, Int> normalize(const Int& a_raw, const Int& q_raw);

/// Normalizes and validates; throws std::domain_error on bad parameters.
ProblemSpec make_problem(const Int& a_raw, const Int& q_raw, Int Q, int n,
                         Fraction c = Fraction(Int(2)), Mode mode = Mode::Auto,
                         Fraction epsilon = Fraction(Int(1), Int(10)));

/// Exact check of the report-only hypothesis Q >= q^(2+epsilon).
bool hypothesis_holds(const Int& q, const Int& Q, const Fraction& epsilon);

enum class FamilyLabel { S, P, L, R4 };

std::string to_string(FamilyLabel label);

struct DenominatorFamily {
    FamilyLabel label;
    IntervalSpec interval;
    std::vector<std::uint64_t> members;  // ascending, all coprime to q
};

/// Families for n = 3: S = integers in [R/3, R/2), P = primes in [R/2, 3R/4),
/// L = primes in [3R/4, R]. For n = 4: S = integers in [R/4, R/3), P = primes
/// in [R/3, 2R/3), L = primes in [2R/3, 3R/4), R4 = primes in [3R/4, R].
/// Every member is coprime to q. Any family may come out empty.
std::vector<DenominatorFamily> build_families(int n, const Int& R, const Int& q);

struct Triple {
    std::uint64_t s, p, l;
};
struct Quad {
    std::uint64_t s, p, l, r;
};

/**
 * First (s, p, l) with a*s*p*l == 1 (mod q) and s*p*l >= min_product, under
 * the scan order l ascending, then p, then s. Meet-in-the-middle: a table
 * keyed by s*p mod q holds the (p, s) witnesses per residue in scan order;
 * each l costs one inverse and one lookup against the key a^{-1} * l^{-1}
 * mod q, plus a walk of the matching witnesses until one clears the product
 * threshold (with min_product == 0 the first witness always does).
 * Requires gcd(a, q) == 1.
 */
std::optional<Triple> solve_congruence3(const Int& a, const Int& q,
                                        const DenominatorFamily& S,
                                        const DenominatorFamily& P,
                                        const DenominatorFamily& L,
                                        const Int& min_product = Int(0));

/// Four-factor analogue; (l, r) pairs are scanned in ascending lexicographic
/// order and probed with the key a^{-1} * (l*r)^{-1} mod q.
std::optional<Quad> solve_congruence4(const Int& a, const Int& q,
                                      const DenominatorFamily& S,
                                      const DenominatorFamily& P,
                                      const DenominatorFamily& L,
                                      const DenominatorFamily& R4,
                                      const Int& min_product = Int(0));

/**
 * Numerators a_i with sum(a_i * prod_{j != i} q_j) == b, for pairwise
 * coprime q_i >= 1. The first n-1 numerators are canonical residues
 * a_i = b * (prod_{j != i} q_j)^{-1} mod q_i; the last absorbs the exact
 * remainder and may be negative.
 */
std::vector<Int> split_numerators(const Int& b, std::span<const Int> q_list);

struct Term {
    Int num;
    Int den;  // >= 1
};

struct Decomposition {
    std::vector<Term> terms;  // length n
    Int b;                    // a * product == 1 + b*q on the theorem path, else 0
    Int product;              // product of the term denominators
    Fraction error;           // |a/q - sum terms|, exact
    Path path = Path::TheoremSearch;
    bool hypothesis_ok = false;  // Q >= q^(2+epsilon) held (report-only)
};

/// Runs the full pipeline. Empty result means NotFound in theorem mode.
/// In auto mode NotFound falls back to the brute-force oracle.
std::optional<Decomposition> decompose(const ProblemSpec& spec);

/// Every check recomputed from scratch; nothing is trusted from the engine.
struct VerificationReport {
    bool denominator_bound_ok = false;  // n terms, each 1 <= q_i <= floor(c*Q^(1/n))
    bool pairwise_coprime_ok = false;   // gcd(q_i, q_j) == 1 (theorem/trivial paths)
    bool error_identity_ok = false;     // recomputed error matches the exact identity
    bool error_budget_ok = false;       // error <= 1/(qQ)
    bool product_min_ok = false;        // product >= Q (theorem path)
    bool congruence_ok = false;         // a*product == 1 + b*q (theorem path)

    bool all_ok() const {
        return denominator_bound_ok && pairwise_coprime_ok && error_identity_ok &&
               error_budget_ok && product_min_ok && congruence_ok;
    }
};

VerificationReport verify(const Decomposition& d, const ProblemSpec& spec);

}  // namespace ratapprox
