#pragma once

/**
 * @file arith.hpp
 * @brief Exact arbitrary-precision integer and rational primitives.
 *
 * Everything downstream (family construction, congruence search, numerator
 * splitting, error accounting) runs on these. No floating point: the final
 * error identities are exact rational equalities and must stay bit-exact.
 */

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ratapprox {

using Int = mpz_class;

/// gcd of |x| and |y|; gcd(0, 0) = 0.
Int gcd(const Int& x, const Int& y);

struct ExtGcdResult {
    Int g;  // gcd(x, y), nonnegative
    Int u;  // Bezout coefficient of x
    Int v;  // Bezout coefficient of y: u*x + v*y == g
};

/// Extended Euclid. Throws std::domain_error when both inputs are zero.
ExtGcdResult ext_gcd(const Int& x, const Int& y);

/// Thrown by mod_inv when gcd(x, m) > 1; carries the offending gcd.
class NotInvertibleError : public std::domain_error {
public:
    NotInvertibleError(const Int& x, const Int& m, const Int& g);
    const Int& common_factor() const { return gcd_; }

private:
    Int gcd_;
};

/// Inverse of x modulo m >= 1, canonical residue in [0, m).  m == 1 yields 0.
Int mod_inv(const Int& x, const Int& m);

/**
 * Exact rational with invariants: den >= 1 and gcd(|num|, den) == 1.
 * The sign lives on the numerator; zero is stored as 0/1.
 */
class Fraction {
public:
    Fraction() : num_(0), den_(1) {}
    Fraction(Int n) : num_(std::move(n)), den_(1) {}
    Fraction(Int n, Int d);  // throws std::domain_error if d == 0

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }

    Fraction operator-() const;
    Fraction operator+(const Fraction& o) const;
    Fraction operator-(const Fraction& o) const;
    Fraction operator*(const Fraction& o) const;

    bool operator==(const Fraction& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator<(const Fraction& o) const;
    bool operator<=(const Fraction& o) const;
    bool operator>(const Fraction& o) const { return o < *this; }
    bool operator>=(const Fraction& o) const { return o <= *this; }

    /// "num/den", e.g. "-43/47", "0/1".
    std::string str() const;

    /// Accepts "n" or "n/d" in base 10. Throws std::domain_error on bad input.
    static Fraction parse(std::string_view text);

private:
    void reduce();

    Int num_;
    Int den_;
};

Fraction abs(const Fraction& f);

/// Exact reduced sum; the empty sequence sums to 0/1.
Fraction sum_terms(std::span<const Fraction> terms);

/// Largest R with (R*v)^n <= u^n * Q, i.e. floor(c * Q^(1/n)) for c = u/v.
/// Requires Q >= 1, n >= 2 and c > 1 (throws std::domain_error otherwise).
Int floor_scaled_root(const Int& Q, unsigned n, const Fraction& c);

/// floor(x^(1/n)) for x >= 0, n >= 1.
Int floor_nth_root(const Int& x, unsigned n);

/// Least Q >= 1 with Q^v >= base^u, i.e. ceil(base^(u/v)), all in integers.
/// Requires base >= 1 and exponent u/v > 0.
Int ceil_rational_power(const Int& base, const Fraction& exponent);

}  // namespace ratapprox
