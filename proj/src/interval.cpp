#include "ratapprox/interval.hpp"

namespace ratapprox {

bool IntervalSpec::contains(const Int& s) const {
    Fraction f{s};
    if (f < lo)
        return false;
    return closed_hi ? f <= hi : f < hi;
}

Int IntervalSpec::first_integer() const {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), lo.num().get_mpz_t(), lo.den().get_mpz_t());
    return r;
}

std::optional<Int> IntervalSpec::last_integer() const {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), hi.num().get_mpz_t(), hi.den().get_mpz_t());
    // floor(hi) equals hi exactly when den == 1; drop it if the end is open
    if (!closed_hi && hi.den() == 1)
        r -= 1;
    if (r < first_integer())
        return std::nullopt;
    return r;
}

std::string IntervalSpec::str() const {
    return "[" + lo.str() + ", " + hi.str() + (closed_hi ? "]" : ")");
}

}  // namespace ratapprox
