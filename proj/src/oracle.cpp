#include "ratapprox/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace ratapprox {

namespace {

void check_cap(std::initializer_list<std::size_t> sizes, std::uint64_t cap, const char* what) {
    Int total(1);
    for (std::size_t s : sizes)
        total *= static_cast<unsigned long>(s);
    if (total > Int(static_cast<unsigned long>(cap)))
        throw CapExceededError(std::string(what) + ": " + total.get_str() +
                               " candidate tuples exceed cap " + std::to_string(cap));
}

bool product_is_one_mod(const Int& value, const Int& q) {
    Int one(1);
    return mpz_congruent_p(value.get_mpz_t(), one.get_mpz_t(), q.get_mpz_t()) != 0;
}

}  // namespace

std::optional<Triple> exhaustive_congruence3(const Int& a, const Int& q,
                                             const DenominatorFamily& S,
                                             const DenominatorFamily& P,
                                             const DenominatorFamily& L, std::uint64_t cap,
                                             const Int& min_product) {
    if (q < 1)
        throw std::domain_error("exhaustive_congruence3: modulus must be >= 1");
    if (gcd(a, q) != 1)
        throw std::domain_error("exhaustive_congruence3: gcd(a, q) != 1");
    check_cap({S.members.size(), P.members.size(), L.members.size()}, cap,
              "exhaustive_congruence3");
    for (std::uint64_t l : L.members) {
        Int lz(static_cast<unsigned long>(l));
        Int al = a * lz;
        for (std::uint64_t p : P.members) {
            Int pz(static_cast<unsigned long>(p));
            Int alp = al * pz;
            for (std::uint64_t s : S.members) {
                Int sz(static_cast<unsigned long>(s));
                if (sz * pz * lz < min_product)
                    continue;
                if (product_is_one_mod(alp * sz, q))
                    return Triple{s, p, l};
            }
        }
    }
    return std::nullopt;
}

std::optional<Quad> exhaustive_congruence4(const Int& a, const Int& q,
                                           const DenominatorFamily& S,
                                           const DenominatorFamily& P,
                                           const DenominatorFamily& L,
                                           const DenominatorFamily& R4, std::uint64_t cap,
                                           const Int& min_product) {
    if (q < 1)
        throw std::domain_error("exhaustive_congruence4: modulus must be >= 1");
    if (gcd(a, q) != 1)
        throw std::domain_error("exhaustive_congruence4: gcd(a, q) != 1");
    check_cap({S.members.size(), P.members.size(), L.members.size(), R4.members.size()}, cap,
              "exhaustive_congruence4");
    for (std::uint64_t l : L.members) {
        Int lz(static_cast<unsigned long>(l));
        Int al = a * lz;
        for (std::uint64_t r : R4.members) {
            Int rz(static_cast<unsigned long>(r));
            Int alr = al * rz;
            for (std::uint64_t p : P.members) {
                Int pz(static_cast<unsigned long>(p));
                Int alrp = alr * pz;
                for (std::uint64_t s : S.members) {
                    Int sz(static_cast<unsigned long>(s));
                    if (sz * pz * lz * rz < min_product)
                        continue;
                    if (product_is_one_mod(alrp * sz, q))
                        return Quad{s, p, l, r};
                }
            }
        }
    }
    return std::nullopt;
}

namespace {

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
    return a / std::gcd(a, b) * b;
}

/// Bezout coefficients x_i with sum(x_i * coeffs[i]) == gcd(coeffs).
std::vector<Int> generalized_bezout(const std::vector<Int>& coeffs) {
    std::vector<Int> x{Int(1)};
    Int g = coeffs[0];
    for (std::size_t i = 1; i < coeffs.size(); ++i) {
        ExtGcdResult e = ext_gcd(g, coeffs[i]);
        for (Int& xi : x)
            xi *= e.u;
        x.push_back(e.v);
        g = e.g;
    }
    return x;
}

}  // namespace

OracleResult best_approx(const Int& a, const Int& q, int n, const Int& D, std::uint64_t cap) {
    if (q < 1)
        throw std::domain_error("best_approx: q must be >= 1");
    if (n < 2 || n > 5)
        throw std::domain_error("best_approx: n must be in [2, 5]");
    if (D < 1)
        throw std::domain_error("best_approx: D must be >= 1");

    // nondecreasing tuples: C(D + n - 1, n) of them; also keep lcm inside
    // a machine word (lcm <= D^n)
    if (D > Int(static_cast<unsigned long>(cap)))
        throw CapExceededError("best_approx: D alone exceeds cap " + std::to_string(cap));
    Int tuples;
    mpz_bin_uiui(tuples.get_mpz_t(), D.get_ui() + n - 1, n);
    if (tuples > Int(static_cast<unsigned long>(cap)))
        throw CapExceededError("best_approx: " + tuples.get_str() + " denominator tuples exceed cap " +
                               std::to_string(cap));
    Int dn;
    mpz_pow_ui(dn.get_mpz_t(), D.get_mpz_t(), n);
    if (mpz_sizeinbase(dn.get_mpz_t(), 2) > 62)
        throw CapExceededError("best_approx: D^n exceeds the machine-word lcm range");

    const std::uint64_t d_max = D.get_ui();
    std::vector<std::uint64_t> tuple(n, 1);
    std::uint64_t enumerated = 0;

    // best error d/(q*L) tracked as (d, L); compare d1*L2 < d2*L1 (q cancels)
    bool have_best = false;
    Int best_d;
    std::uint64_t best_l = 1, best_g = 1;
    std::vector<std::uint64_t> best_tuple;

    for (;;) {
        ++enumerated;
        std::uint64_t l = 1;
        for (std::uint64_t qi : tuple)
            l = lcm_u64(l, qi);
        std::uint64_t g = 0;
        for (std::uint64_t qi : tuple)
            g = std::gcd(g, l / qi);

        // distance from a/q to the nearest multiple of g/L over denominator qL
        Int t_num = a * Int(static_cast<unsigned long>(l));
        Int modulus = q * Int(static_cast<unsigned long>(g));
        Int rem;
        mpz_fdiv_r(rem.get_mpz_t(), t_num.get_mpz_t(), modulus.get_mpz_t());
        Int dist = std::min(rem, Int(modulus - rem));

        if (!have_best || dist * Int(static_cast<unsigned long>(best_l)) <
                              best_d * Int(static_cast<unsigned long>(l))) {
            have_best = true;
            best_d = dist;
            best_l = l;
            best_g = g;
            best_tuple = tuple;
            if (best_d == 0)
                break;  // exact representation; nothing can improve on zero
        }

        // advance to the next nondecreasing tuple over [1, d_max]
        int i = n - 1;
        while (i >= 0 && tuple[i] == d_max)
            --i;
        if (i < 0)
            break;
        std::uint64_t v = tuple[i] + 1;
        for (int j = i; j < n; ++j)
            tuple[j] = v;
    }

    // rebuild the winning sum k*(g/L) and recover numerators via Bezout
    Int t_num = a * Int(static_cast<unsigned long>(best_l));
    Int modulus = q * Int(static_cast<unsigned long>(best_g));
    Int k, rem;
    mpz_fdiv_qr(k.get_mpz_t(), rem.get_mpz_t(), t_num.get_mpz_t(), modulus.get_mpz_t());
    if (2 * rem >= modulus)
        ++k;  // round half up

    std::vector<Int> coeffs;
    coeffs.reserve(best_tuple.size());
    for (std::uint64_t qi : best_tuple)
        coeffs.emplace_back(static_cast<unsigned long>(best_l / qi));
    std::vector<Int> bezout = generalized_bezout(coeffs);

    OracleResult result;
    result.enumerated = enumerated;
    std::vector<Fraction> fracs;
    fracs.emplace_back(a, q);
    for (std::size_t i = 0; i < best_tuple.size(); ++i) {
        Int ai = k * bezout[i];
        result.witness.push_back({ai, Int(static_cast<unsigned long>(best_tuple[i]))});
        fracs.emplace_back(-result.witness.back().num, result.witness.back().den);
    }
    result.best_error = abs(sum_terms(fracs));
    if (!(result.best_error == Fraction(best_d, q * Int(static_cast<unsigned long>(best_l)))))
        throw std::logic_error("best_approx: witness does not reproduce the best error");
    return result;
}

}  // namespace ratapprox
