#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ratapprox/sieve.hpp"

#include "test_support.hpp"

#include <vector>

using namespace ratapprox;
using test_support::is_prime_trial;
using test_support::RandomInts;

namespace {

// independent reference: walk every integer, decide membership by exact
// rational comparison, filter by trial division and gcd
std::vector<std::uint64_t> reference_values(const IntervalSpec& iv, const Int& q,
                                            bool primes_only) {
    std::vector<std::uint64_t> out;
    Int limit;
    mpz_fdiv_q(limit.get_mpz_t(), iv.hi.num().get_mpz_t(), iv.hi.den().get_mpz_t());
    for (Int m(0); m <= limit + 1; ++m) {
        if (!iv.contains(m))
            continue;
        if (primes_only && !is_prime_trial(m.get_ui()))
            continue;
        if (gcd(m, q) != 1)
            continue;
        out.push_back(m.get_ui());
    }
    return out;
}

}  // namespace

TEST_CASE("interval membership and integer endpoints") {
    IntervalSpec half = IntervalSpec::half_open(Fraction(Int(58), Int(3)), Fraction(Int(29)));
    CHECK(half.first_integer() == 20);
    CHECK(*half.last_integer() == 28);
    CHECK(!half.contains(Int(19)));
    CHECK(half.contains(Int(20)));
    CHECK(half.contains(Int(28)));
    CHECK(!half.contains(Int(29)));

    IntervalSpec closed = IntervalSpec::closed(Fraction(Int(4)), Fraction(Int(8)));
    CHECK(closed.contains(Int(4)));
    CHECK(closed.contains(Int(8)));
    CHECK(!closed.contains(Int(9)));

    IntervalSpec empty = IntervalSpec::half_open(Fraction(Int(1)), Fraction(Int(1)));
    CHECK(!empty.last_integer().has_value());

    // non-integer open end keeps floor(hi)
    IntervalSpec frac_end = IntervalSpec::half_open(Fraction(Int(29)), Fraction(Int(87), Int(2)));
    CHECK(*frac_end.last_integer() == 43);
}

TEST_CASE("primes_in worked values") {
    CHECK(primes_in(IntervalSpec::closed(Fraction(Int(10)), Fraction(Int(20))), Int(1)) ==
          std::vector<std::uint64_t>{11, 13, 17, 19});
    CHECK(primes_in(IntervalSpec::half_open(Fraction(Int(29)), Fraction(Int(87), Int(2))),
                    Int(101)) == std::vector<std::uint64_t>{29, 31, 37, 41, 43});
    CHECK(primes_in(IntervalSpec::half_open(Fraction(Int(8)), Fraction(Int(10))), Int(1))
              .empty());
}

TEST_CASE("integers_in worked values") {
    CHECK(integers_in(IntervalSpec::half_open(Fraction(Int(58), Int(3)), Fraction(Int(29))),
                      Int(101)) ==
          std::vector<std::uint64_t>{20, 21, 22, 23, 24, 25, 26, 27, 28});
    CHECK(integers_in(IntervalSpec::half_open(Fraction(Int(1)), Fraction(Int(1))), Int(7))
              .empty());
    CHECK(integers_in(IntervalSpec::closed(Fraction(Int(4)), Fraction(Int(8))), Int(6)) ==
          std::vector<std::uint64_t>{5, 7});  // gcd filter removes 4, 6, 8
}

TEST_CASE("primes_in equals trial-division filter of integers_in") {
    RandomInts rnd(0x5eed100);
    for (int i = 0; i < 60; ++i) {
        Int lo_num(static_cast<unsigned long>(rnd.below(3000)));
        Int lo_den(static_cast<unsigned long>(rnd.below(7) + 1));
        Int hi_num = lo_num + Int(static_cast<unsigned long>(rnd.below(4000) + 1));
        bool closed = rnd.below(2) == 0;
        IntervalSpec iv{Fraction(lo_num, lo_den), Fraction(hi_num, lo_den), closed};
        Int q(static_cast<unsigned long>(rnd.below(120) + 1));

        std::vector<std::uint64_t> ints = integers_in(iv, q);
        std::vector<std::uint64_t> primes = primes_in(iv, q);

        std::vector<std::uint64_t> filtered;
        for (std::uint64_t m : ints)
            if (is_prime_trial(m))
                filtered.push_back(m);
        CHECK(primes == filtered);
        CHECK(ints == reference_values(iv, q, false));
        CHECK(primes == reference_values(iv, q, true));

        for (std::uint64_t m : ints) {
            CHECK(iv.contains(Int(static_cast<unsigned long>(m))));
            CHECK(gcd(Int(static_cast<unsigned long>(m)), q) == 1);
        }
    }
}

TEST_CASE("boundary cases resolved by exact cross-multiplication") {
    // 21/3 == 7: inclusive lower end picks it up
    IntervalSpec iv1 = IntervalSpec::half_open(Fraction(Int(21), Int(3)), Fraction(Int(11)));
    CHECK(integers_in(iv1, Int(1)).front() == 7);
    // open upper end at 22/2 == 11 excludes 11
    IntervalSpec iv2 = IntervalSpec::half_open(Fraction(Int(7)), Fraction(Int(22), Int(2)));
    CHECK(integers_in(iv2, Int(1)).back() == 10);
    // closed upper end at the same rational includes it
    IntervalSpec iv3 = IntervalSpec::closed(Fraction(Int(7)), Fraction(Int(22), Int(2)));
    CHECK(integers_in(iv3, Int(1)).back() == 11);
}

TEST_CASE("sieve crosses segment boundaries") {
    // span wider than one segment (2^20); spot-check against trial division
    IntervalSpec iv = IntervalSpec::closed(Fraction(Int(1000000)), Fraction(Int(3200000)));
    std::vector<std::uint64_t> primes = primes_in(iv, Int(1));
    CHECK(primes.front() == 1000003);
    CHECK(is_prime_trial(primes.back()));
    RandomInts rnd(0x5eed101);
    for (int i = 0; i < 30; ++i) {
        std::uint64_t p = primes[rnd.below(primes.size())];
        CHECK(is_prime_trial(p));
    }
    // no prime missed around the segment boundary
    std::uint64_t count_trial = 0;
    for (std::uint64_t m = 2097100; m <= 2097300; ++m)
        if (is_prime_trial(m))
            ++count_trial;
    std::uint64_t count_sieve = 0;
    for (std::uint64_t p : primes)
        if (p >= 2097100 && p <= 2097300)
            ++count_sieve;
    CHECK(count_sieve == count_trial);
}
