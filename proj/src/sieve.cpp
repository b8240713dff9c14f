#include "ratapprox/sieve.hpp"

#include <algorithm>
#include <stdexcept>

namespace ratapprox {

namespace {

constexpr std::uint64_t kSegmentSize = 1u << 20;

std::uint64_t isqrt_u64(std::uint64_t n) {
    std::uint64_t r = 0, bit = std::uint64_t(1) << 62;
    while (bit > n)
        bit >>= 2;
    while (bit != 0) {
        if (n >= r + bit) {
            n -= r + bit;
            r = (r >> 1) + bit;
        } else {
            r >>= 1;
        }
        bit >>= 2;
    }
    return r;
}

std::vector<std::uint64_t> base_primes(std::uint64_t limit) {
    std::vector<char> mark(limit + 1, 1);
    mark[0] = 0;
    if (limit >= 1)
        mark[1] = 0;
    for (std::uint64_t i = 2; i * i <= limit; ++i)
        if (mark[i])
            for (std::uint64_t j = i * i; j <= limit; j += i)
                mark[j] = 0;
    std::vector<std::uint64_t> primes;
    for (std::uint64_t i = 2; i <= limit; ++i)
        if (mark[i])
            primes.push_back(i);
    return primes;
}

bool coprime_u64(std::uint64_t m, const Int& q) {
    Int g;
    mpz_gcd_ui(g.get_mpz_t(), q.get_mpz_t(), m);
    return g == 1;
}

/// Integer span [lo, hi] of the interval, empty when it holds no integers
/// or the lower end is negative (interval endpoints must be nonnegative).
std::optional<std::pair<std::uint64_t, std::uint64_t>> integer_span(const IntervalSpec& interval) {
    if (interval.lo.num() < 0 || interval.hi.num() < 0)
        throw std::domain_error("sieve: interval endpoints must be nonnegative");
    std::optional<Int> last = interval.last_integer();
    if (!last)
        return std::nullopt;
    Int first = interval.first_integer();
    if (first < 0)
        first = 0;
    if (*last < first)
        return std::nullopt;
    if (mpz_cmp_ui(last->get_mpz_t(), 0) > 0 &&
        mpz_sizeinbase(last->get_mpz_t(), 2) > 62)
        throw std::overflow_error("sieve: interval too large to enumerate");
    return std::make_pair(first.get_ui(), last->get_ui());
}

}  // namespace

std::vector<std::uint64_t> primes_in(const IntervalSpec& interval, const Int& coprime_to) {
    if (coprime_to < 1)
        throw std::domain_error("primes_in: modulus must be >= 1");
    std::vector<std::uint64_t> out;
    auto span = integer_span(interval);
    if (!span)
        return out;
    auto [lo, hi] = *span;
    lo = std::max<std::uint64_t>(lo, 2);
    if (lo > hi)
        return out;

    std::vector<std::uint64_t> base = base_primes(isqrt_u64(hi));
    std::vector<char> composite;
    for (std::uint64_t seg_lo = lo; seg_lo <= hi; seg_lo += kSegmentSize) {
        std::uint64_t seg_hi = std::min(hi, seg_lo + kSegmentSize - 1);
        composite.assign(seg_hi - seg_lo + 1, 0);
        for (std::uint64_t p : base) {
            std::uint64_t start = std::max(p * p, ((seg_lo + p - 1) / p) * p);
            for (std::uint64_t j = start; j <= seg_hi; j += p)
                composite[j - seg_lo] = 1;
        }
        for (std::uint64_t m = seg_lo; m <= seg_hi; ++m)
            if (!composite[m - seg_lo] && coprime_u64(m, coprime_to))
                out.push_back(m);
        if (seg_hi == hi)
            break;  // avoids overflow of seg_lo near UINT64_MAX
    }
    return out;
}

std::vector<std::uint64_t> integers_in(const IntervalSpec& interval, const Int& coprime_to) {
    if (coprime_to < 1)
        throw std::domain_error("integers_in: modulus must be >= 1");
    std::vector<std::uint64_t> out;
    auto span = integer_span(interval);
    if (!span)
        return out;
    for (std::uint64_t m = span->first; m <= span->second; ++m) {
        if (coprime_u64(m, coprime_to))
            out.push_back(m);
        if (m == span->second)
            break;
    }
    return out;
}

}  // namespace ratapprox
