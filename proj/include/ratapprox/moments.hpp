#pragma once

/**
 * @file moments.hpp
 * @brief Exact second-moment statistics for products x*y across residue
 *        classes mod q.
 *
 * M(u) counts pairs (x, y) with x in a fixed set X of residues coprime to
 * q and y in a window [Z+1, Z+Y] such that x*y == u (mod q). The centered
 * second moment sum_u (M(u) - #X*Y/q)^2 measures how evenly the products
 * spread over the classes; it is kept as an exact rational end to end so
 * sweep values can be pinned as regression data.
 */

#include "ratapprox/arith.hpp"

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace ratapprox {

/// Counts M(u) for u = 1..q; slot i holds M(i+1) and the final slot (u = q)
/// is the residue class 0. Requires Y >= 1 and every x >= 1 coprime to q.
std::vector<Int> count_products(std::span<const Int> x_set, const Int& Y, const Int& Z,
                                const Int& q);

/// Exact sum over u of (M(u) - x_card*Y/q)^2 for a count sequence of length q.
Fraction second_moment(std::span<const Int> counts, const Int& x_card, const Int& Y,
                       const Int& q);

/// The set X plus the interval bound X used in the comparison term #X*(X+Y).
struct XSpec {
    std::vector<Int> members;
    Int bound;         // for explicit sets, the largest member
    std::string desc;
};

XSpec explicit_x_set(std::vector<Int> members);

using XRule = std::function<XSpec(const Int& q)>;
using YRule = std::function<Int(const Int& q)>;

/// All integers in [1, floor(q^(2/3))] coprime to q.
XRule default_x_rule();
/// floor(q^(2/3)).
YRule default_y_rule();

struct MomentReport {
    Int q;
    std::string x_desc;
    Int x_card;
    Int Y;
    Int Z;
    Fraction moment;
    Int bound_term;  // x_card * (x_bound + Y)
    Fraction ratio;  // moment / bound_term; 0/1 when bound_term == 0
};

MomentReport moment_instance(const Int& q, const XSpec& x, const Int& Y, const Int& Z);

/// One report per q, computed independently, emitted in input order.
std::vector<MomentReport> moment_sweep(std::span<const Int> q_list, const XRule& x_rule,
                                       const YRule& y_rule, const Int& Z);

/// CSV with header: q,X_card,Y,Z,moment_num,moment_den,bound_term,ratio_num,ratio_den
std::string moments_csv(std::span<const MomentReport> reports);

}  // namespace ratapprox
