#pragma once

/**
 * @file interval.hpp
 * @brief Intervals with exact rational endpoints, lower bound always inclusive.
 *
 * Membership of an integer is decided by cross multiplication on the exact
 * endpoints; no floating point is involved anywhere.
 */

#include "ratapprox/arith.hpp"

#include <optional>
#include <string>

namespace ratapprox {

struct IntervalSpec {
    Fraction lo;        // inclusive
    Fraction hi;        // inclusive iff closed_hi
    bool closed_hi = false;

    static IntervalSpec half_open(Fraction lo, Fraction hi) { return {std::move(lo), std::move(hi), false}; }
    static IntervalSpec closed(Fraction lo, Fraction hi) { return {std::move(lo), std::move(hi), true}; }

    bool contains(const Int& s) const;

    /// Smallest integer >= lo.
    Int first_integer() const;

    /// Largest integer in the interval, or nothing when empty of integers.
    std::optional<Int> last_integer() const;

    /// "[lo, hi)" or "[lo, hi]" with endpoints as num/den.
    std::string str() const;
};

}  // namespace ratapprox
