// Eulerian numbers, bounded weak compositions, and both sides of the
// Brenti-Welker identity, all in exact integer arithmetic.

#ifndef HYPERSIMPLEX_COMBINATORICS_HPP
#define HYPERSIMPLEX_COMBINATORICS_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "rational.hpp"

namespace hypersimplex {

/// Row d of the Eulerian triangle: row[i-1] = A(d,i) for i in [d].
struct EulerianTable
{
    int d = 0;
    std::vector<BigInt> row;
};

/// A weak composition of `total` into parts.size() parts, each part in [0, bound].
struct BoundedComposition
{
    std::vector<std::int64_t> parts;
    std::int64_t bound = 0;
    std::int64_t total = 0;

    friend bool operator==(const BoundedComposition&, const BoundedComposition&) = default;
};

using Permutation = std::vector<int>;

inline constexpr int kDescentClassMaxDegree = 9;

inline void require_degree(int d)
{
    if (d < 1)
        throw std::invalid_argument("dimension d must be >= 1, got " + std::to_string(d));
}

/// Triangle recurrence A(d,i) = i*A(d-1,i) + (d-i+1)*A(d-1,i-1), A(1,1) = 1.
inline EulerianTable eulerian_table(int d)
{
    require_degree(d);
    std::vector<BigInt> row{1};
    for (int n = 2; n <= d; ++n) {
        std::vector<BigInt> next(n);
        for (int i = 1; i <= n; ++i) {
            BigInt value = 0;
            if (i <= n - 1)
                value += BigInt(i) * row[i - 1];
            if (i >= 2)
                value += BigInt(n - i + 1) * row[i - 2];
            next[i - 1] = std::move(value);
        }
        row = std::move(next);
    }
    return EulerianTable{d, std::move(row)};
}

/// A(d,i); zero when i lies outside [1, d].
inline BigInt eulerian(int d, std::int64_t i)
{
    require_degree(d);
    if (i < 1 || i > d)
        return 0;
    return eulerian_table(d).row[static_cast<std::size_t>(i - 1)];
}

inline int descent_count(const Permutation& perm)
{
    int descents = 0;
    for (std::size_t t = 0; t + 1 < perm.size(); ++t)
        if (perm[t] > perm[t + 1])
            ++descents;
    return descents;
}

/// All permutations of {1..d} with exactly j-1 descents, in lexicographic order.
/// Exhaustive over S_d, so d is capped at kDescentClassMaxDegree.
inline std::vector<Permutation> descent_class(int d, int j)
{
    require_degree(d);
    if (d > kDescentClassMaxDegree)
        throw std::invalid_argument("descent_class enumerates d! permutations; d must be <= " +
                                    std::to_string(kDescentClassMaxDegree));
    std::vector<Permutation> out;
    Permutation perm(d);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        if (descent_count(perm) == j - 1)
            out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

/// Every vector of d parts in [0, r] summing to i, in lexicographic order.
inline std::vector<BoundedComposition> compositions_bounded(std::int64_t r, int d, std::int64_t i)
{
    require_degree(d);
    if (r < 0)
        throw std::invalid_argument("part bound must be non-negative");
    std::vector<BoundedComposition> out;
    if (i < 0 || i > r * d)
        return out;

    std::vector<std::int64_t> parts(d, 0);
    // Fill position `pos` with every feasible value, smallest first.
    auto fill = [&](auto&& self, int pos, std::int64_t remaining) -> void {
        const std::int64_t tail_capacity = r * (d - pos - 1);
        if (pos == d - 1) {
            parts[pos] = remaining;
            out.push_back(BoundedComposition{parts, r, i});
            return;
        }
        const std::int64_t lo = std::max<std::int64_t>(0, remaining - tail_capacity);
        const std::int64_t hi = std::min(r, remaining);
        for (std::int64_t value = lo; value <= hi; ++value) {
            parts[pos] = value;
            self(self, pos + 1, remaining - value);
        }
    };
    fill(fill, 0, i);
    return out;
}

/// C(r,d,i) by a 1-D dynamic program over the parts; never enumerates.
inline BigInt composition_count(std::int64_t r, int d, std::int64_t i)
{
    require_degree(d);
    if (r < 0)
        throw std::invalid_argument("part bound must be non-negative");
    if (i < 0 || i > r * d)
        return 0;

    // ways[s] = number of prefixes with the current part count summing to s.
    std::vector<BigInt> ways(static_cast<std::size_t>(i) + 1, 0);
    ways[0] = 1;
    for (int part = 0; part < d; ++part) {
        std::vector<BigInt> next(ways.size(), 0);
        BigInt window = 0;  // sum of ways[s-r .. s]
        for (std::size_t s = 0; s < ways.size(); ++s) {
            window += ways[s];
            if (s >= static_cast<std::size_t>(r) + 1)
                window -= ways[s - static_cast<std::size_t>(r) - 1];
            next[s] = window;
        }
        ways = std::move(next);
    }
    return ways.back();
}

struct IdentityResult
{
    BigInt lhs;
    BigInt rhs;
    bool equal = false;
};

/// lhs = sum_j C(r-1, d+1, ir-j) A(d,j), rhs = r^d A(d,i).
inline IdentityResult identity_check(std::int64_t r, int d, std::int64_t i)
{
    require_degree(d);
    if (r < 1)
        throw std::invalid_argument("dilation r must be >= 1");
    if (i < 1 || i > d)
        throw std::invalid_argument("level i must lie in [1, d]");

    const EulerianTable table = eulerian_table(d);
    IdentityResult result;
    result.lhs = 0;
    for (int j = 1; j <= d; ++j)
        result.lhs += composition_count(r - 1, d + 1, i * r - j) * table.row[j - 1];
    result.rhs = boost::multiprecision::pow(BigInt(r), static_cast<unsigned>(d)) *
                 table.row[static_cast<std::size_t>(i - 1)];
    result.equal = result.lhs == result.rhs;
    return result;
}

struct SweepEntry
{
    int d = 0;
    int i = 0;
    int r = 0;
    IdentityResult result;
};

struct SweepReport
{
    std::vector<SweepEntry> entries;

    std::size_t failures() const
    {
        return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(),
                                                      [](const SweepEntry& e) { return !e.result.equal; }));
    }
    bool all_pass() const { return failures() == 0; }
};

/// Every triple 1 <= d <= d_max, 1 <= i <= d, 1 <= r <= r_max, ordered by (d, i, r).
inline SweepReport identity_sweep(int d_max, int r_max)
{
    if (d_max < 1 || r_max < 1)
        throw std::invalid_argument("sweep bounds must be >= 1");
    SweepReport report;
    for (int d = 1; d <= d_max; ++d)
        for (int i = 1; i <= d; ++i)
            for (int r = 1; r <= r_max; ++r)
                report.entries.push_back(SweepEntry{d, i, r, identity_check(r, d, i)});
    return report;
}

}  // namespace hypersimplex

#endif  // HYPERSIMPLEX_COMBINATORICS_HPP
