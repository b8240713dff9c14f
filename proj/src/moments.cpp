#include "ratapprox/moments.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ratapprox {

std::vector<Int> count_products(std::span<const Int> x_set, const Int& Y, const Int& Z,
                                const Int& q) {
    if (q < 1)
        throw std::domain_error("count_products: modulus must be >= 1");
    if (Y < 1)
        throw std::domain_error("count_products: Y must be >= 1");
    if (mpz_sizeinbase(q.get_mpz_t(), 2) > 32)
        throw std::overflow_error("count_products: modulus too large to tabulate");
    for (const Int& x : x_set) {
        if (x < 1)
            throw std::domain_error("count_products: X members must be >= 1");
        if (gcd(x, q) != 1)
            throw std::domain_error("count_products: X member " + x.get_str() +
                                    " shares a factor with q");
    }

    const std::uint64_t qn = q.get_ui();

    // y in [Z+1, Z+Y] covers every residue class floor(Y/q) times, plus one
    // extra for the `rem` classes starting at (Z+1) mod q. Since x is
    // invertible, the full cycles contribute uniformly to every u.
    Int full = Y / q;
    std::uint64_t rem = Int(Y % q).get_ui();
    Int w0_z;
    mpz_fdiv_r(w0_z.get_mpz_t(), Int(Z + 1).get_mpz_t(), q.get_mpz_t());
    const std::uint64_t w0 = w0_z.get_ui();

    std::vector<Int> by_residue(qn, Int(0));
    for (const Int& x : x_set) {
        Int xr_z;
        mpz_fdiv_r(xr_z.get_mpz_t(), x.get_mpz_t(), q.get_mpz_t());
        const std::uint64_t xr = xr_z.get_ui();
        std::uint64_t u = (static_cast<unsigned __int128>(xr) * w0) % qn;
        for (std::uint64_t j = 0; j < rem; ++j) {
            by_residue[u] += 1;
            u += xr;
            if (u >= qn)
                u -= qn;
        }
    }
    if (full > 0) {
        Int uniform = full * static_cast<unsigned long>(x_set.size());
        for (Int& c : by_residue)
            c += uniform;
    }

    // reindex to u = 1..q with the final slot holding residue class 0
    std::vector<Int> out(qn);
    for (std::uint64_t u = 1; u <= qn; ++u)
        out[u - 1] = by_residue[u % qn];
    return out;
}

Fraction second_moment(std::span<const Int> counts, const Int& x_card, const Int& Y,
                       const Int& q) {
    if (q < 1 || Int(static_cast<unsigned long>(counts.size())) != q)
        throw std::domain_error("second_moment: count sequence must have length q");
    // sum (M(u) - x_card*Y/q)^2 == sum (q*M(u) - x_card*Y)^2 / q^2, all integer
    Int target = x_card * Y;
    Int acc(0);
    for (const Int& m : counts) {
        Int d = q * m - target;
        acc += d * d;
    }
    return Fraction(acc, q * q);
}

XSpec explicit_x_set(std::vector<Int> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    Int bound = members.empty() ? Int(0) : members.back();
    return XSpec{std::move(members), bound, "explicit"};
}

XRule default_x_rule() {
    return [](const Int& q) {
        Int k = floor_nth_root(q * q, 3);  // floor(q^(2/3))
        XSpec spec;
        spec.bound = k;
        spec.desc = "coprime integers in [1, " + k.get_str() + "]";
        for (Int x(1); x <= k; ++x)
            if (gcd(x, q) == 1)
                spec.members.push_back(x);
        return spec;
    };
}

YRule default_y_rule() {
    return [](const Int& q) { return floor_nth_root(q * q, 3); };
}

MomentReport moment_instance(const Int& q, const XSpec& x, const Int& Y, const Int& Z) {
    std::vector<Int> counts = count_products(x.members, Y, Z, q);

    Int x_card(static_cast<unsigned long>(x.members.size()));
    Int mass(0);
    for (const Int& m : counts)
        mass += m;
    if (mass != x_card * Y)
        throw std::logic_error("moment_instance: count mass != #X * Y");

    MomentReport report;
    report.q = q;
    report.x_desc = x.desc;
    report.x_card = x_card;
    report.Y = Y;
    report.Z = Z;
    report.moment = second_moment(counts, x_card, Y, q);
    report.bound_term = x_card * (x.bound + Y);
    report.ratio = report.bound_term == 0
                       ? Fraction()
                       : report.moment * Fraction(Int(1), report.bound_term);
    return report;
}

std::vector<MomentReport> moment_sweep(std::span<const Int> q_list, const XRule& x_rule,
                                       const YRule& y_rule, const Int& Z) {
    std::vector<MomentReport> reports;
    reports.reserve(q_list.size());
    for (const Int& q : q_list)
        reports.push_back(moment_instance(q, x_rule(q), y_rule(q), Z));
    return reports;
}

std::string moments_csv(std::span<const MomentReport> reports) {
    std::ostringstream out;
    out << "q,X_card,Y,Z,moment_num,moment_den,bound_term,ratio_num,ratio_den\n";
    for (const MomentReport& r : reports) {
        out << r.q.get_str() << ',' << r.x_card.get_str() << ',' << r.Y.get_str() << ','
            << r.Z.get_str() << ',' << r.moment.num().get_str() << ','
            << r.moment.den().get_str() << ',' << r.bound_term.get_str() << ','
            << r.ratio.num().get_str() << ',' << r.ratio.den().get_str() << '\n';
    }
    return out.str();
}

}  // namespace ratapprox
