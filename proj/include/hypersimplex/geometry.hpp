// Lattice translates of hypersimplices v + Delta(d,j) in R^{d+1}, exact point
// membership, and their pairwise intersections as faces.
//
// Coordinates are indexed 0..d. A translate v + Delta(d,j) is the slice
// { x : sum(x - v) = j, 0 <= x_t - v_t <= 1 }, whose vertices are v + e_T
// for the j-subsets T of the coordinate indices.

#ifndef HYPERSIMPLEX_GEOMETRY_HPP
#define HYPERSIMPLEX_GEOMETRY_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rational.hpp"

namespace hypersimplex {

using LatticeVector = std::vector<std::int64_t>;
using IndexSet = std::vector<int>;  // sorted, 0-based coordinate indices

class DimensionMismatch : public std::invalid_argument
{
public:
    DimensionMismatch(std::size_t lhs, std::size_t rhs)
        : std::invalid_argument("ambient dimension mismatch: " + std::to_string(lhs) + " vs " +
                                std::to_string(rhs) + " coordinates")
    {
    }
};

inline void require_same_length(std::size_t lhs, std::size_t rhs)
{
    if (lhs != rhs)
        throw DimensionMismatch(lhs, rhs);
}

/// A point of R^{d+1} with exact coordinates.
struct RationalPoint
{
    std::vector<Rational> coords;

    RationalPoint() = default;
    explicit RationalPoint(std::vector<Rational> c) : coords(std::move(c))
    {
        if (coords.size() < 2)
            throw std::invalid_argument("a point needs at least 2 coordinates (d >= 1)");
    }

    int dimension() const { return static_cast<int>(coords.size()) - 1; }
    std::size_t size() const { return coords.size(); }

    Rational sum() const
    {
        Rational total = 0;
        for (const auto& c : coords)
            total += c;
        return total;
    }

    friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
};

/// The translate v + Delta(d,j), with d = v.size() - 1.
struct Cell
{
    LatticeVector v;
    int j = 0;

    int dimension() const { return static_cast<int>(v.size()) - 1; }

    friend bool operator==(const Cell&, const Cell&) = default;
    // Level first, then translation vector lexicographically.
    friend std::strong_ordering operator<=>(const Cell& a, const Cell& b)
    {
        if (auto cmp = a.j <=> b.j; cmp != 0)
            return cmp;
        return a.v <=> b.v;
    }
};

inline Cell make_cell(LatticeVector v, int j)
{
    Cell c{std::move(v), j};
    if (c.v.size() < 2)
        throw std::invalid_argument("a cell needs at least 2 coordinates (d >= 1)");
    if (j < 1 || j > c.dimension())
        throw std::invalid_argument("cell level j=" + std::to_string(j) + " outside [1, " +
                                    std::to_string(c.dimension()) + "]");
    return c;
}

/// base + conv{ e_T : T subset of free, |T| = k }, or the empty set.
struct Face
{
    LatticeVector base;
    IndexSet free;
    int k = 0;
    bool empty = false;

    static Face empty_face(std::size_t ambient)
    {
        Face f;
        f.base.assign(ambient, 0);
        f.empty = true;
        return f;
    }

    /// -1 for the empty face, 0 for a single point, |free| - 1 otherwise.
    int dimension() const
    {
        if (empty)
            return -1;
        const int n = static_cast<int>(free.size());
        if (k == 0 || k == n)
            return 0;
        return n - 1;
    }

    friend bool operator==(const Face&, const Face&) = default;
};

/// Calls fn(subset) for every k-subset of `items`, in lexicographic order of positions.
template <typename Fn>
void for_each_subset_of_size(const IndexSet& items, int k, Fn&& fn)
{
    const int n = static_cast<int>(items.size());
    if (k < 0 || k > n)
        return;
    std::vector<int> pos(k);
    std::iota(pos.begin(), pos.end(), 0);
    IndexSet subset(k);
    while (true) {
        for (int a = 0; a < k; ++a)
            subset[a] = items[pos[a]];
        fn(static_cast<const IndexSet&>(subset));
        int a = k - 1;
        while (a >= 0 && pos[a] == n - k + a)
            --a;
        if (a < 0)
            return;
        ++pos[a];
        for (int b = a + 1; b < k; ++b)
            pos[b] = pos[b - 1] + 1;
    }
}

inline IndexSet full_index_set(std::size_t n)
{
    IndexSet all(n);
    std::iota(all.begin(), all.end(), 0);
    return all;
}

inline IndexSet complement(const IndexSet& s, std::size_t n)
{
    IndexSet out;
    std::size_t pos = 0;
    for (int t = 0; t < static_cast<int>(n); ++t) {
        if (pos < s.size() && s[pos] == t)
            ++pos;
        else
            out.push_back(t);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Fractional profile

struct FracProfile
{
    IndexSet fractional;   // O(x): indices with positive fractional part
    std::int64_t excess = 0;  // o(x): sum of those fractional parts
    LatticeVector floor;
};

/// Requires an integral coordinate sum, which makes o(x) an integer.
inline FracProfile frac_profile(const RationalPoint& x)
{
    if (!is_integer(x.sum()))
        throw std::invalid_argument("coordinate sum must be an integer");
    FracProfile p;
    p.floor.reserve(x.size());
    Rational frac_sum = 0;
    for (std::size_t t = 0; t < x.size(); ++t) {
        p.floor.push_back(to_int64(floor_of(x.coords[t])));
        Rational f = frac_of(x.coords[t]);
        if (f > 0) {
            p.fractional.push_back(static_cast<int>(t));
            frac_sum += f;
        }
    }
    // frac_sum = sum(x) - sum(floor(x)) is an integer here.
    p.excess = to_int64(numerator_of(frac_sum));
    return p;
}

// ---------------------------------------------------------------------------
// Membership

/// Direct H-description: sum(x - v) = j and 0 <= x_t - v_t <= 1.
inline bool contains(const RationalPoint& x, const Cell& c)
{
    require_same_length(x.size(), c.v.size());
    Rational total = 0;
    for (std::size_t t = 0; t < x.size(); ++t) {
        Rational offset = x.coords[t] - Rational(c.v[t]);
        if (offset < 0 || offset > 1)
            return false;
        total += offset;
    }
    return total == Rational(c.j);
}

/// Fractional-part characterization of membership, for points with integral
/// coordinate sum:
///   (i)  {x_t} > 0  implies v_t = floor(x_t);
///   (i') {x_t} = 0  implies x_t - v_t in {0, 1};
///   (ii) #{t : x_t = v_t + 1} + o(x) = j.
inline bool satisfies_membership_criterion(const RationalPoint& x, const Cell& c, const FracProfile& profile)
{
    require_same_length(x.size(), c.v.size());
    std::int64_t at_upper = 0;
    std::size_t next_fractional = 0;
    for (std::size_t t = 0; t < x.size(); ++t) {
        const bool fractional = next_fractional < profile.fractional.size() &&
                                profile.fractional[next_fractional] == static_cast<int>(t);
        if (fractional) {
            ++next_fractional;
            if (c.v[t] != profile.floor[t])
                return false;
            continue;
        }
        const std::int64_t offset = profile.floor[t] - c.v[t];
        if (offset != 0 && offset != 1)
            return false;
        at_upper += offset;
    }
    return at_upper + profile.excess == c.j;
}

inline bool satisfies_membership_criterion(const RationalPoint& x, const Cell& c)
{
    return satisfies_membership_criterion(x, c, frac_profile(x));
}

/// { (floor(x) - e_T, |T| + o(x)) : T subset of complement of O(x), |T| + o(x) in [1, d] },
/// sorted by level then translation.
inline std::vector<Cell> containing_translates(const RationalPoint& x)
{
    const FracProfile profile = frac_profile(x);
    const int d = x.dimension();
    const IndexSet integral = complement(profile.fractional, x.size());
    std::vector<Cell> out;
    for (int size = 0; size <= static_cast<int>(integral.size()); ++size) {
        const std::int64_t level = size + profile.excess;
        if (level < 1 || level > d)
            continue;
        for_each_subset_of_size(integral, size, [&](const IndexSet& subset) {
            LatticeVector v = profile.floor;
            for (int t : subset)
                v[t] -= 1;
            out.push_back(Cell{std::move(v), static_cast<int>(level)});
        });
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Vertices, intersections and facets

inline std::vector<LatticeVector> face_vertices(const Face& f)
{
    if (f.empty)
        throw std::invalid_argument("the empty face has no vertices");
    std::vector<LatticeVector> out;
    for_each_subset_of_size(f.free, f.k, [&](const IndexSet& subset) {
        LatticeVector p = f.base;
        for (int t : subset)
            p[t] += 1;
        out.push_back(std::move(p));
    });
    std::sort(out.begin(), out.end());
    return out;
}

/// The cell as a face of itself: base v, every index free, level j.
inline Face cell_as_face(const Cell& c)
{
    return Face{c.v, full_index_set(c.v.size()), c.j, false};
}

inline std::vector<LatticeVector> cell_vertices(const Cell& c) { return face_vertices(cell_as_face(c)); }

/// With X_u = {t : v_t = u_t + 1} and X_v = {t : u_t = v_t + 1}, two translates
/// u + Delta(d,j1) and v + Delta(d,j2) on a common hyperplane meet in
///   u + e_{X_u} + conv{ e_T : T subset of [d+1] \ (X_u u X_v), |T| = j1 - |X_u| }.
inline Face intersect_cells(const Cell& a, const Cell& b)
{
    require_same_length(a.v.size(), b.v.size());
    const std::size_t n = a.v.size();
    IndexSet a_low;   // X_u
    IndexSet b_low;   // X_v
    IndexSet shared;
    std::int64_t level_a = a.j;
    std::int64_t level_b = b.j;
    for (std::size_t t = 0; t < n; ++t) {
        const std::int64_t diff = b.v[t] - a.v[t];
        level_a += a.v[t];
        level_b += b.v[t];
        if (diff == 1)
            a_low.push_back(static_cast<int>(t));
        else if (diff == -1)
            b_low.push_back(static_cast<int>(t));
        else if (diff == 0)
            shared.push_back(static_cast<int>(t));
        else
            return Face::empty_face(n);
    }
    if (level_a != level_b)
        return Face::empty_face(n);
    const int k = a.j - static_cast<int>(a_low.size());
    if (k < 0 || k > static_cast<int>(shared.size()))
        return Face::empty_face(n);

    Face f;
    f.base = a.v;
    for (int t : a_low)
        f.base[t] += 1;
    f.free = std::move(shared);
    f.k = k;
    return f;
}

/// Facets of v + Delta(d,j), both families translated by v: for each t,
/// v + e_t + conv{e_T : T subset of [d+1]\{t}, |T| = j-1}   (when j >= 2) and
/// v + conv{e_T : T subset of [d+1]\{t}, |T| = j}           (when j <= d-1).
/// For d = 1 the segment's facets are its two endpoints v + e_t.
inline std::vector<Face> cell_facets(const Cell& c)
{
    const std::size_t n = c.v.size();
    const int d = c.dimension();
    std::vector<Face> out;
    for (std::size_t t = 0; t < n; ++t) {
        IndexSet rest = complement(IndexSet{static_cast<int>(t)}, n);
        if (c.j >= 2 || d == 1) {
            LatticeVector base = c.v;
            base[t] += 1;
            out.push_back(Face{std::move(base), rest, c.j - 1, false});
        }
        if (c.j <= d - 1)
            out.push_back(Face{c.v, std::move(rest), c.j, false});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Text form of points: comma-separated `a` or `a/b`.

inline RationalPoint parse_point(std::string_view text)
{
    std::vector<Rational> coords;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        std::string_view field = text.substr(start, comma == std::string_view::npos ? text.size() - start
                                                                                   : comma - start);
        coords.push_back(parse_rational(field));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return RationalPoint(std::move(coords));
}

inline std::string format_point(const RationalPoint& x)
{
    std::string out;
    for (std::size_t t = 0; t < x.size(); ++t) {
        if (t)
            out += ',';
        out += format_rational(x.coords[t]);
    }
    return out;
}

inline std::string format_vector(const LatticeVector& v)
{
    std::string out = "(";
    for (std::size_t t = 0; t < v.size(); ++t) {
        if (t)
            out += ',';
        out += std::to_string(v[t]);
    }
    return out + ")";
}

inline std::string format_cell(const Cell& c)
{
    return "v=" + format_vector(c.v) + ";j=" + std::to_string(c.j);
}

}  // namespace hypersimplex

#endif  // HYPERSIMPLEX_GEOMETRY_HPP
