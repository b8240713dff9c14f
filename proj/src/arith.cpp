#include "ratapprox/arith.hpp"

#include <utility>

namespace ratapprox {

Int gcd(const Int& x, const Int& y) {
    Int g;
    mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    return g;
}

ExtGcdResult ext_gcd(const Int& x, const Int& y) {
    if (x == 0 && y == 0)
        throw std::domain_error("ext_gcd: both inputs are zero");
    ExtGcdResult r;
    mpz_gcdext(r.g.get_mpz_t(), r.u.get_mpz_t(), r.v.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    return r;
}

NotInvertibleError::NotInvertibleError(const Int& x, const Int& m, const Int& g)
    : std::domain_error("mod_inv: " + x.get_str() + " not invertible mod " + m.get_str() +
                        " (gcd " + g.get_str() + ")"),
      gcd_(g) {}

Int mod_inv(const Int& x, const Int& m) {
    if (m < 1)
        throw std::domain_error("mod_inv: modulus must be >= 1");
    if (m == 1)
        return 0;
    Int inv;
    if (mpz_invert(inv.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t()) == 0)
        throw NotInvertibleError(x, m, gcd(x, m));
    return inv;  // mpz_invert already canonicalizes into [0, m)
}

Fraction::Fraction(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_ == 0)
        throw std::domain_error("Fraction: zero denominator");
    reduce();
}

void Fraction::reduce() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    Int g = gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Fraction Fraction::operator-() const {
    Fraction r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Fraction Fraction::operator+(const Fraction& o) const {
    return Fraction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Fraction Fraction::operator-(const Fraction& o) const {
    return Fraction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Fraction Fraction::operator*(const Fraction& o) const {
    return Fraction(num_ * o.num_, den_ * o.den_);
}

bool Fraction::operator<(const Fraction& o) const {
    // denominators positive, so cross multiplication preserves order
    return num_ * o.den_ < o.num_ * den_;
}

bool Fraction::operator<=(const Fraction& o) const {
    return num_ * o.den_ <= o.num_ * den_;
}

std::string Fraction::str() const {
    return num_.get_str() + "/" + den_.get_str();
}

Fraction Fraction::parse(std::string_view text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos)
            return Fraction(Int(std::string(text)));
        Int n(std::string(text.substr(0, slash)));
        Int d(std::string(text.substr(slash + 1)));
        return Fraction(std::move(n), std::move(d));
    } catch (const std::invalid_argument&) {
        throw std::domain_error("Fraction::parse: bad rational literal '" + std::string(text) + "'");
    }
}

Fraction abs(const Fraction& f) {
    return f.num() < 0 ? -f : f;
}

Fraction sum_terms(std::span<const Fraction> terms) {
    Fraction acc;
    for (const Fraction& t : terms)
        acc = acc + t;
    return acc;
}

Int floor_nth_root(const Int& x, unsigned n) {
    if (x < 0 || n < 1)
        throw std::domain_error("floor_nth_root: need x >= 0 and n >= 1");
    Int r;
    mpz_root(r.get_mpz_t(), x.get_mpz_t(), n);
    return r;
}

namespace {

Int pow_ui(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

}  // namespace

Int floor_scaled_root(const Int& Q, unsigned n, const Fraction& c) {
    if (Q < 1)
        throw std::domain_error("floor_scaled_root: Q must be >= 1");
    if (n < 2)
        throw std::domain_error("floor_scaled_root: n must be >= 2");
    if (c <= Fraction(1))
        throw std::domain_error("floor_scaled_root: scale constant must exceed 1");

    const Int& u = c.num();
    const Int& v = c.den();
    Int target = pow_ui(u, n) * Q;          // R must satisfy (R*v)^n <= target
    Int r = floor_nth_root(target, n) / v;  // candidate; exact up to the division by v
    while (pow_ui((r + 1) * v, n) <= target)
        ++r;
    while (r > 0 && pow_ui(r * v, n) > target)
        --r;
    return r;
}

Int ceil_rational_power(const Int& base, const Fraction& exponent) {
    if (base < 1)
        throw std::domain_error("ceil_rational_power: base must be >= 1");
    if (exponent <= Fraction(0))
        throw std::domain_error("ceil_rational_power: exponent must be > 0");

    unsigned long u = exponent.num().get_ui();
    unsigned long v = exponent.den().get_ui();
    if (!exponent.num().fits_ulong_p() || !exponent.den().fits_ulong_p())
        throw std::domain_error("ceil_rational_power: exponent out of range");

    Int target = pow_ui(base, u);  // least Q with Q^v >= base^u
    Int q = floor_nth_root(target, static_cast<unsigned>(v));
    if (pow_ui(q, v) < target)
        ++q;
    while (q > 1 && pow_ui(q - 1, v) >= target)
        --q;
    return q;
}

}  // namespace ratapprox
