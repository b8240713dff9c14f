#include "ratapprox/decompose.hpp"

#include "ratapprox/oracle.hpp"
#include "ratapprox/sieve.hpp"

#include <map>
#include <stdexcept>
#include <unordered_map>

namespace ratapprox {

std::string to_string(Mode mode) {
    switch (mode) {
        case Mode::Theorem: return "theorem";
        case Mode::Auto: return "auto";
        case Mode::OracleFallback: return "oracle-fallback";
    }
    throw std::logic_error("unknown mode");
}

std::string to_string(Path path) {
    switch (path) {
        case Path::TheoremSearch: return "theorem-search";
        case Path::Trivial: return "trivial";
        case Path::OracleFallback: return "oracle-fallback";
    }
    throw std::logic_error("unknown path");
}

Mode parse_mode(std::string_view text) {
    if (text == "theorem") return Mode::Theorem;
    if (text == "auto") return Mode::Auto;
    if (text == "oracle-fallback") return Mode::OracleFallback;
    throw std::domain_error("unknown mode '" + std::string(text) + "'");
}

Path parse_path(std::string_view text) {
    if (text == "theorem-search") return Path::TheoremSearch;
    if (text == "trivial") return Path::Trivial;
    if (text == "oracle-fallback") return Path::OracleFallback;
    throw std::domain_error("unknown path '" + std::string(text) + "'");
}

std::string to_string(FamilyLabel label) {
    switch (label) {
        case FamilyLabel::S: return "S";
        case FamilyLabel::P: return "P";
        case FamilyLabel::L: return "L";
        case FamilyLabel::R4: return "R4";
    }
    throw std::logic_error("unknown family label");
}

std::pair<Int, Int> normalize(const Int& a_raw, const Int& q_raw) {
    if (q_raw == 0)
        throw std::domain_error("normalize: denominator must be nonzero");
    Fraction f(a_raw, q_raw);
    return {f.num(), f.den()};
}

ProblemSpec make_problem(const Int& a_raw, const Int& q_raw, Int Q, int n, Fraction c,
                         Mode mode, Fraction epsilon) {
    if (Q < 1)
        throw std::domain_error("make_problem: Q must be >= 1");
    if (n != 3 && n != 4)
        throw std::domain_error("make_problem: n must be 3 or 4");
    if (c <= Fraction(Int(1)))
        throw std::domain_error("make_problem: c must exceed 1");
    if (epsilon <= Fraction(Int(0)))
        throw std::domain_error("make_problem: epsilon must be positive");
    auto [a, q] = normalize(a_raw, q_raw);
    return ProblemSpec{std::move(a), std::move(q), std::move(Q), n,
                       std::move(c), mode, std::move(epsilon)};
}

bool hypothesis_holds(const Int& q, const Int& Q, const Fraction& epsilon) {
    // Q >= q^((2*ed + en)/ed)  <=>  Q^ed >= q^(2*ed + en)
    const Int& en = epsilon.num();
    const Int& ed = epsilon.den();
    Int exp_num = 2 * ed + en;
    if (!ed.fits_ulong_p() || !exp_num.fits_ulong_p())
        throw std::domain_error("hypothesis_holds: epsilon out of range");
    Int lhs, rhs;
    mpz_pow_ui(lhs.get_mpz_t(), Q.get_mpz_t(), ed.get_ui());
    mpz_pow_ui(rhs.get_mpz_t(), q.get_mpz_t(), exp_num.get_ui());
    return lhs >= rhs;
}

std::vector<DenominatorFamily> build_families(int n, const Int& R, const Int& q) {
    if (R < 1)
        throw std::domain_error("build_families: R must be >= 1");
    auto frac = [&](long mult, long div) { return Fraction(mult * R, Int(div)); };
    std::vector<DenominatorFamily> out;
    if (n == 3) {
        IntervalSpec s_iv = IntervalSpec::half_open(frac(1, 3), frac(1, 2));
        IntervalSpec p_iv = IntervalSpec::half_open(frac(1, 2), frac(3, 4));
        IntervalSpec l_iv = IntervalSpec::closed(frac(3, 4), Fraction(R));
        out.push_back({FamilyLabel::S, s_iv, integers_in(s_iv, q)});
        out.push_back({FamilyLabel::P, p_iv, primes_in(p_iv, q)});
        out.push_back({FamilyLabel::L, l_iv, primes_in(l_iv, q)});
    } else if (n == 4) {
        IntervalSpec s_iv = IntervalSpec::half_open(frac(1, 4), frac(1, 3));
        IntervalSpec p_iv = IntervalSpec::half_open(frac(1, 3), frac(2, 3));
        IntervalSpec l_iv = IntervalSpec::half_open(frac(2, 3), frac(3, 4));
        IntervalSpec r_iv = IntervalSpec::closed(frac(3, 4), Fraction(R));
        out.push_back({FamilyLabel::S, s_iv, integers_in(s_iv, q)});
        out.push_back({FamilyLabel::P, p_iv, primes_in(p_iv, q)});
        out.push_back({FamilyLabel::L, l_iv, primes_in(l_iv, q)});
        out.push_back({FamilyLabel::R4, r_iv, primes_in(r_iv, q)});
    } else {
        throw std::domain_error("build_families: n must be 3 or 4");
    }
    return out;
}

namespace {

using WitnessList = std::vector<std::pair<std::uint64_t, std::uint64_t>>;  // (p, s)

// Meet-in-the-middle core, shared by the machine-word and wide-modulus
// paths. Ops supplies the residue key type, the keyed map, and exact
// modular arithmetic.
struct U64Ops {
    std::uint64_t q;
    using Key = std::uint64_t;
    using Map = std::unordered_map<std::uint64_t, WitnessList>;

    Key mul(Key x, Key y) const {
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * y % q);
    }
    Key member(std::uint64_t m) const { return m % q; }
    Key inverse_of(const Int& x) const { return mod_inv(x, Int(q)).get_ui(); }
    Key inverse_of_u64(std::uint64_t m) const { return inverse_of(Int(m)); }
};

struct WideOps {
    const Int& q;
    using Key = Int;
    using Map = std::map<Int, WitnessList>;

    Key mul(const Key& x, const Key& y) const { return Key(x * y % q); }
    Key member(std::uint64_t m) const { return Key(Int(m) % q); }
    Key inverse_of(const Int& x) const { return mod_inv(x, q); }
    Key inverse_of_u64(std::uint64_t m) const { return mod_inv(Int(m), q); }
};

// Key -> all (p, s) pairs with that residue, appended with p ascending in
// the outer loop, so each list is in the scan order the exhaustive
// enumeration would visit. The head of a list is the lexicographically
// smallest witness.
template <typename Ops>
typename Ops::Map build_table(const Ops& ops, const DenominatorFamily& S,
                              const DenominatorFamily& P) {
    typename Ops::Map table;
    for (std::uint64_t p : P.members) {
        typename Ops::Key pk = ops.member(p);
        for (std::uint64_t s : S.members)
            table[ops.mul(pk, ops.member(s))].emplace_back(p, s);
    }
    return table;
}

// first witness in list order whose full product clears the threshold;
// `rest` is the already-fixed part of the product (l, or l*r)
const std::pair<std::uint64_t, std::uint64_t>* pick_witness(const WitnessList& list,
                                                            const Int& rest,
                                                            const Int& min_product) {
    for (const auto& witness : list) {
        if (min_product <= 0)
            return &witness;
        Int product = rest * Int(static_cast<unsigned long>(witness.first)) *
                      Int(static_cast<unsigned long>(witness.second));
        if (product >= min_product)
            return &witness;
    }
    return nullptr;
}

template <typename Ops>
std::optional<Triple> solve3_impl(const Ops& ops, const Int& a, const DenominatorFamily& S,
                                  const DenominatorFamily& P, const DenominatorFamily& L,
                                  const Int& min_product) {
    if (S.members.empty() || P.members.empty() || L.members.empty())
        return std::nullopt;
    auto table = build_table(ops, S, P);
    typename Ops::Key a_inv = ops.inverse_of(a);
    for (std::uint64_t l : L.members) {
        typename Ops::Key key = ops.mul(a_inv, ops.inverse_of_u64(l));
        auto it = table.find(key);
        if (it == table.end())
            continue;
        const auto* hit =
            pick_witness(it->second, Int(static_cast<unsigned long>(l)), min_product);
        if (hit)
            return Triple{hit->second, hit->first, l};
    }
    return std::nullopt;
}

template <typename Ops>
std::optional<Quad> solve4_impl(const Ops& ops, const Int& a, const DenominatorFamily& S,
                                const DenominatorFamily& P, const DenominatorFamily& L,
                                const DenominatorFamily& R4, const Int& min_product) {
    if (S.members.empty() || P.members.empty() || L.members.empty() || R4.members.empty())
        return std::nullopt;
    auto table = build_table(ops, S, P);
    typename Ops::Key a_inv = ops.inverse_of(a);
    std::vector<typename Ops::Key> r_inv;
    r_inv.reserve(R4.members.size());
    for (std::uint64_t r : R4.members)
        r_inv.push_back(ops.inverse_of_u64(r));
    for (std::uint64_t l : L.members) {
        typename Ops::Key base = ops.mul(a_inv, ops.inverse_of_u64(l));
        for (std::size_t i = 0; i < R4.members.size(); ++i) {
            typename Ops::Key key = ops.mul(base, r_inv[i]);
            auto it = table.find(key);
            if (it == table.end())
                continue;
            Int rest = Int(static_cast<unsigned long>(l)) *
                       Int(static_cast<unsigned long>(R4.members[i]));
            const auto* hit = pick_witness(it->second, rest, min_product);
            if (hit)
                return Quad{hit->second, hit->first, l, R4.members[i]};
        }
    }
    return std::nullopt;
}

bool fits_u64_modulus(const Int& q) {
    return mpz_sizeinbase(q.get_mpz_t(), 2) <= 63;
}

void check_solver_inputs(const Int& a, const Int& q) {
    if (q < 1)
        throw std::domain_error("solve_congruence: modulus must be >= 1");
    Int g = gcd(a, q);
    if (g != 1)
        throw std::domain_error("solve_congruence: gcd(a, q) = " + g.get_str() + " != 1");
}

}  // namespace

std::optional<Triple> solve_congruence3(const Int& a, const Int& q, const DenominatorFamily& S,
                                        const DenominatorFamily& P, const DenominatorFamily& L,
                                        const Int& min_product) {
    check_solver_inputs(a, q);
    if (fits_u64_modulus(q))
        return solve3_impl(U64Ops{q.get_ui()}, a, S, P, L, min_product);
    return solve3_impl(WideOps{q}, a, S, P, L, min_product);
}

std::optional<Quad> solve_congruence4(const Int& a, const Int& q, const DenominatorFamily& S,
                                      const DenominatorFamily& P, const DenominatorFamily& L,
                                      const DenominatorFamily& R4, const Int& min_product) {
    check_solver_inputs(a, q);
    if (fits_u64_modulus(q))
        return solve4_impl(U64Ops{q.get_ui()}, a, S, P, L, R4, min_product);
    return solve4_impl(WideOps{q}, a, S, P, L, R4, min_product);
}

std::vector<Int> split_numerators(const Int& b, std::span<const Int> q_list) {
    if (q_list.empty())
        throw std::domain_error("split_numerators: empty denominator list");
    for (const Int& qi : q_list)
        if (qi < 1)
            throw std::domain_error("split_numerators: denominators must be >= 1");
    for (std::size_t i = 0; i < q_list.size(); ++i)
        for (std::size_t j = i + 1; j < q_list.size(); ++j)
            if (gcd(q_list[i], q_list[j]) != 1)
                throw std::domain_error("split_numerators: denominators not pairwise coprime");

    Int product(1);
    for (const Int& qi : q_list)
        product *= qi;

    std::size_t n = q_list.size();
    std::vector<Int> out(n);
    Int accounted(0);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        Int others = product / q_list[i];
        Int ai = b * mod_inv(others, q_list[i]);
        mpz_fdiv_r(ai.get_mpz_t(), ai.get_mpz_t(), q_list[i].get_mpz_t());
        accounted += ai * others;
        out[i] = std::move(ai);
    }
    Int rest = b - accounted;
    Int last_others = product / q_list[n - 1];
    Int last, check;
    mpz_tdiv_qr(last.get_mpz_t(), check.get_mpz_t(), rest.get_mpz_t(), last_others.get_mpz_t());
    if (check != 0)
        throw std::logic_error("split_numerators: final division not exact");
    out[n - 1] = std::move(last);
    return out;
}

namespace {

Decomposition trivial_decomposition(const ProblemSpec& spec, bool hyp) {
    Decomposition d;
    d.terms.push_back({spec.a, spec.q});
    for (int i = 1; i < spec.n; ++i)
        d.terms.push_back({Int(0), Int(1)});
    d.b = 0;
    d.product = spec.q;
    d.error = Fraction();
    d.path = Path::Trivial;
    d.hypothesis_ok = hyp;
    return d;
}

Decomposition fallback_decomposition(const ProblemSpec& spec, const Int& R, bool hyp) {
    OracleResult best = best_approx(spec.a, spec.q, spec.n, R);
    Decomposition d;
    d.terms = best.witness;
    d.b = 0;
    d.product = 1;
    for (const Term& t : d.terms)
        d.product *= t.den;
    d.error = best.best_error;
    d.path = Path::OracleFallback;
    d.hypothesis_ok = hyp;
    return d;
}

Decomposition assemble_from_solution(const ProblemSpec& spec, std::span<const std::uint64_t> picks,
                                     bool hyp) {
    std::vector<Int> q_list;
    q_list.reserve(picks.size());
    for (std::uint64_t m : picks)
        q_list.emplace_back(static_cast<unsigned long>(m));

    Int product(1);
    for (const Int& qi : q_list)
        product *= qi;

    Int num = spec.a * product - 1;
    Int b, rem;
    mpz_tdiv_qr(b.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), spec.q.get_mpz_t());
    if (rem != 0)
        throw std::logic_error("decompose: solver returned a non-solution");

    std::vector<Int> numerators = split_numerators(b, q_list);

    Decomposition d;
    for (std::size_t i = 0; i < q_list.size(); ++i)
        d.terms.push_back({numerators[i], q_list[i]});
    d.b = std::move(b);
    d.product = product;
    d.path = Path::TheoremSearch;
    d.hypothesis_ok = hyp;

    // independent exact recomputation of the error, then the identity check
    std::vector<Fraction> fracs;
    fracs.emplace_back(spec.a, spec.q);
    for (const Term& t : d.terms)
        fracs.emplace_back(-t.num, t.den);
    Fraction err = abs(sum_terms(fracs));
    if (!(err == Fraction(Int(1), spec.q * product)))
        throw std::logic_error("decompose: error identity violated");
    d.error = std::move(err);
    return d;
}

}  // namespace

std::optional<Decomposition> decompose(const ProblemSpec& spec) {
    if (spec.q < 1 || spec.Q < 1)
        throw std::domain_error("decompose: q and Q must be >= 1");
    if (gcd(spec.a, spec.q) != 1)
        throw std::domain_error("decompose: spec not normalized, gcd(a, q) != 1");
    if (spec.n != 3 && spec.n != 4)
        throw std::domain_error("decompose: n must be 3 or 4");

    Int R = floor_scaled_root(spec.Q, spec.n, spec.c);
    bool hyp = hypothesis_holds(spec.q, spec.Q, spec.epsilon);

    if (R >= spec.q)
        return trivial_decomposition(spec, hyp);

    if (spec.mode == Mode::OracleFallback)
        return fallback_decomposition(spec, R, hyp);

    // the congruence alone does not force the product up to Q, so the
    // search carries the threshold; anything below it cannot meet 1/(qQ)
    std::vector<DenominatorFamily> families = build_families(spec.n, R, spec.q);
    if (spec.n == 3) {
        auto hit = solve_congruence3(spec.a, spec.q, families[0], families[1], families[2],
                                     spec.Q);
        if (hit) {
            std::uint64_t picks[] = {hit->s, hit->p, hit->l};
            return assemble_from_solution(spec, picks, hyp);
        }
    } else {
        auto hit = solve_congruence4(spec.a, spec.q, families[0], families[1], families[2],
                                     families[3], spec.Q);
        if (hit) {
            std::uint64_t picks[] = {hit->s, hit->p, hit->l, hit->r};
            return assemble_from_solution(spec, picks, hyp);
        }
    }

    if (spec.mode == Mode::Auto)
        return fallback_decomposition(spec, R, hyp);
    return std::nullopt;  // theorem mode: NotFound is a first-class outcome
}

VerificationReport verify(const Decomposition& d, const ProblemSpec& spec) {
    VerificationReport r;

    Int bound = floor_scaled_root(spec.Q, spec.n, spec.c);
    r.denominator_bound_ok = d.terms.size() == static_cast<std::size_t>(spec.n);
    for (const Term& t : d.terms)
        if (t.den < 1 || t.den > bound)
            r.denominator_bound_ok = false;

    r.pairwise_coprime_ok = true;
    if (d.path != Path::OracleFallback) {
        for (std::size_t i = 0; i < d.terms.size(); ++i)
            for (std::size_t j = i + 1; j < d.terms.size(); ++j)
                if (gcd(d.terms[i].den, d.terms[j].den) != 1)
                    r.pairwise_coprime_ok = false;
    }

    Int product(1);
    for (const Term& t : d.terms)
        product *= t.den;

    std::vector<Fraction> fracs;
    fracs.emplace_back(spec.a, spec.q);
    for (const Term& t : d.terms)
        fracs.emplace_back(-t.num, t.den);
    Fraction err = abs(sum_terms(fracs));

    switch (d.path) {
        case Path::TheoremSearch:
            r.error_identity_ok = err == Fraction(Int(1), spec.q * product) && d.error == err;
            break;
        case Path::Trivial:
            r.error_identity_ok = err.is_zero() && d.error == err;
            break;
        case Path::OracleFallback:
            r.error_identity_ok = d.error == err;
            break;
    }

    r.error_budget_ok = err <= Fraction(Int(1), spec.q * spec.Q);

    if (d.path == Path::TheoremSearch) {
        r.product_min_ok = product >= spec.Q && d.product == product;
        r.congruence_ok = spec.a * product - d.b * spec.q == 1;
    } else {
        r.product_min_ok = d.product == product;
        r.congruence_ok = true;
    }
    return r;
}

}  // namespace ratapprox
