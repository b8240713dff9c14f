#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ratapprox/moments.hpp"

#include "test_support.hpp"

#include <vector>

using namespace ratapprox;
using test_support::RandomInts;

namespace {

// direct pair enumeration, one product at a time
std::vector<Int> brute_counts(const std::vector<Int>& x_set, const Int& Y, const Int& Z,
                              const Int& q) {
    std::vector<Int> counts(q.get_ui(), Int(0));
    for (const Int& x : x_set) {
        for (Int y = Z + 1; y <= Z + Y; ++y) {
            Int u;
            mpz_fdiv_r(u.get_mpz_t(), Int(x * y).get_mpz_t(), q.get_mpz_t());
            // slot u-1 for u in [1, q); residue 0 is the final slot (u = q)
            std::size_t slot = u == 0 ? q.get_ui() - 1 : u.get_ui() - 1;
            counts[slot] += 1;
        }
    }
    return counts;
}

// per-term accumulation over a common denominator, no squared-integer shortcut
Fraction brute_moment(const std::vector<Int>& counts, const Int& x_card, const Int& Y,
                      const Int& q) {
    Fraction mean = Fraction(x_card * Y, q);
    Fraction acc;
    for (const Int& m : counts) {
        Fraction d = Fraction(m) - mean;
        acc = acc + d * d;
    }
    return acc;
}

}  // namespace

TEST_CASE("count_products worked example q=5") {
    std::vector<Int> x = {Int(1), Int(2)};
    std::vector<Int> counts = count_products(x, Int(2), Int(0), Int(5));
    // products: 1,2 (x=1); 2,4 (x=2)
    REQUIRE(counts.size() == 5);
    CHECK(counts[0] == 1);  // M(1)
    CHECK(counts[1] == 2);  // M(2)
    CHECK(counts[2] == 0);  // M(3)
    CHECK(counts[3] == 1);  // M(4)
    CHECK(counts[4] == 0);  // M(5), the residue class 0
}

TEST_CASE("count_products edge cases") {
    CHECK(count_products({}, Int(3), Int(0), Int(7)) ==
          std::vector<Int>(7, Int(0)));

    // y covers a full residue system: every class hit exactly once
    std::vector<Int> one = {Int(1)};
    std::vector<Int> counts = count_products(one, Int(7), Int(0), Int(7));
    for (const Int& c : counts)
        CHECK(c == 1);

    std::vector<Int> bad = {Int(2)};
    CHECK_THROWS_AS(count_products(bad, Int(1), Int(0), Int(4)), std::domain_error);
    CHECK_THROWS_AS(count_products(one, Int(0), Int(0), Int(7)), std::domain_error);
}

TEST_CASE("second_moment worked example") {
    std::vector<Int> x = {Int(1), Int(2)};
    std::vector<Int> counts = count_products(x, Int(2), Int(0), Int(5));
    CHECK(second_moment(counts, Int(2), Int(2), Int(5)) == Fraction(Int(14), Int(5)));

    std::vector<Int> zeros(4, Int(0));
    CHECK(second_moment(zeros, Int(0), Int(9), Int(4)) == Fraction());
}

TEST_CASE("counts and moment match brute-force pair enumeration") {
    RandomInts rnd(0x5eed400);
    for (int i = 0; i < 60; ++i) {
        Int q(static_cast<unsigned long>(rnd.below(40) + 1));
        Int Y(static_cast<unsigned long>(rnd.below(90) + 1));
        Int Z = Int(static_cast<unsigned long>(rnd.below(60))) - 30;
        std::vector<Int> x;
        std::uint64_t want = rnd.below(6);
        for (Int cand(1); cand <= 70 && x.size() < want; ++cand)
            if (gcd(cand, q) == 1 && rnd.below(3) == 0)
                x.push_back(cand);

        std::vector<Int> counts = count_products(x, Y, Z, q);
        CHECK(counts == brute_counts(x, Y, Z, q));

        Int x_card(static_cast<unsigned long>(x.size()));
        CHECK(second_moment(counts, x_card, Y, q) == brute_moment(counts, x_card, Y, q));

        // mass conservation
        Int mass(0);
        for (const Int& m : counts)
            mass += m;
        CHECK(mass == x_card * Y);

        // translation by q changes nothing
        CHECK(counts == count_products(x, Y, Int(Z + q), q));
    }
}

TEST_CASE("unit X over a full window equidistributes exactly") {
    RandomInts rnd(0x5eed401);
    for (int i = 0; i < 40; ++i) {
        Int q(static_cast<unsigned long>(rnd.below(50) + 1));
        Int Z = Int(static_cast<unsigned long>(rnd.below(40))) - 20;
        std::vector<Int> x = {Int(1)};
        std::vector<Int> counts = count_products(x, q, Z, q);
        CHECK(second_moment(counts, Int(1), q, q) == Fraction());
    }
}

TEST_CASE("moment_instance assembles the report") {
    XSpec x = explicit_x_set({Int(1), Int(2)});
    MomentReport report = moment_instance(Int(5), x, Int(2), Int(0));
    CHECK(report.moment == Fraction(Int(14), Int(5)));
    CHECK(report.bound_term == 8);  // 2 * (2 + 2)
    CHECK(report.ratio == Fraction(Int(7), Int(20)));
    CHECK(report.x_card == 2);
}

TEST_CASE("moment_sweep preserves order and serializes") {
    std::vector<Int> qs = {Int(5), Int(7)};
    XRule x_rule = [](const Int&) { return explicit_x_set({Int(1), Int(2)}); };
    YRule y_rule = [](const Int&) { return Int(2); };
    auto reports = moment_sweep(qs, x_rule, y_rule, Int(0));
    REQUIRE(reports.size() == 2);
    CHECK(reports[0].q == 5);
    CHECK(reports[1].q == 7);

    std::string csv = moments_csv(reports);
    CHECK(csv.starts_with("q,X_card,Y,Z,moment_num,moment_den,bound_term,ratio_num,ratio_den\n"));
    CHECK(csv.find("5,2,2,0,14,5,8,7,20\n") != std::string::npos);

    CHECK(moment_sweep({}, x_rule, y_rule, Int(0)).empty());
}

TEST_CASE("default rules follow the q^(2/3) window") {
    XRule x_rule = default_x_rule();
    YRule y_rule = default_y_rule();
    XSpec x = x_rule(Int(1009));
    CHECK(x.bound == 100);  // floor(1009^(2/3)) = floor(100.59...)
    CHECK(x.members.size() == 100);  // 1009 prime, nothing filtered
    CHECK(y_rule(Int(1009)) == 100);

    XSpec x6 = x_rule(Int(6));
    CHECK(x6.bound == 3);
    // coprime to 6 in [1, 3]: just 1 (2 and 3 divide 6)
    REQUIRE(x6.members.size() == 1);
    CHECK(x6.members[0] == 1);
}
