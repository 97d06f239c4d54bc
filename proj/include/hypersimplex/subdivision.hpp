// The family H(r,d,i) of hypersimplex translates v + Delta(d,j), v a weak
// composition of ir - j into d+1 parts bounded by r-1, which subdivides the
// dilation r * Delta(d,i). Includes the covering witness, an exact verifier,
// and an Ehrhart-based volume oracle independent of the Eulerian recurrence.

#ifndef HYPERSIMPLEX_SUBDIVISION_HPP
#define HYPERSIMPLEX_SUBDIVISION_HPP

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "combinatorics.hpp"
#include "geometry.hpp"
#include "rational.hpp"

namespace hypersimplex {

struct Subdivision
{
    int r = 0;
    int d = 0;
    int i = 0;
    std::vector<Cell> cells;

    friend bool operator==(const Subdivision&, const Subdivision&) = default;
};

inline void validate_parameters(std::int64_t r, std::int64_t d, std::int64_t i)
{
    if (d < 1)
        throw std::invalid_argument("dimension d must be >= 1");
    if (r < 1)
        throw std::invalid_argument("dilation r must be >= 1");
    if (i < 1 || i > d)
        throw std::invalid_argument("level i must lie in [1, d]");
}

/// Cells ordered by level j, then lexicographically by v.
inline Subdivision build_subdivision(int r, int d, int i)
{
    validate_parameters(r, d, i);
    Subdivision s{r, d, i, {}};
    for (int j = 1; j <= d; ++j)
        for (auto& comp : compositions_bounded(r - 1, d + 1, static_cast<std::int64_t>(i) * r - j))
            s.cells.push_back(Cell{std::move(comp.parts), j});
    return s;
}

/// Number of cells without building them: sum_j C(r-1, d+1, ir-j).
inline BigInt subdivision_cell_count(int r, int d, int i)
{
    validate_parameters(r, d, i);
    BigInt total = 0;
    for (int j = 1; j <= d; ++j)
        total += composition_count(r - 1, d + 1, static_cast<std::int64_t>(i) * r - j);
    return total;
}

inline bool in_dilated_hypersimplex(const RationalPoint& x, int r, int i)
{
    for (const auto& c : x.coords)
        if (c < 0 || c > r)
            return false;
    return x.sum() == Rational(static_cast<std::int64_t>(i) * r);
}

inline bool in_dilated_hypersimplex(const LatticeVector& p, int r, int i)
{
    std::int64_t total = 0;
    for (auto c : p) {
        if (c < 0 || c > r)
            return false;
        total += c;
    }
    return total == static_cast<std::int64_t>(i) * r;
}

/// A cell of H(r,d,i) containing x, chosen deterministically. Coordinates equal
/// to r must be lowered so the translation stays within the part bound r-1:
///  - x integral: S = {t : x_t = r}, or the smallest t with x_t > 0 when that is
///    empty; returns (x - e_S, |S|).
///  - otherwise: P = {t not in O(x) : x_t = r}; returns (floor(x) - e_P, |P| + o(x)).
inline Cell covering_witness(const RationalPoint& x, int r, int d, int i)
{
    validate_parameters(r, d, i);
    if (x.dimension() != d)
        throw DimensionMismatch(x.size(), static_cast<std::size_t>(d) + 1);
    if (!in_dilated_hypersimplex(x, r, i))
        throw std::invalid_argument("point " + format_point(x) + " lies outside the dilated hypersimplex");

    const FracProfile profile = frac_profile(x);
    LatticeVector v = profile.floor;
    int lowered = 0;
    std::size_t next_fractional = 0;
    for (std::size_t t = 0; t < v.size(); ++t) {
        if (next_fractional < profile.fractional.size() &&
            profile.fractional[next_fractional] == static_cast<int>(t)) {
            ++next_fractional;
            continue;
        }
        if (v[t] == r) {
            v[t] -= 1;
            ++lowered;
        }
    }
    if (profile.fractional.empty() && lowered == 0) {
        auto first_positive = std::find_if(v.begin(), v.end(), [](std::int64_t c) { return c > 0; });
        *first_positive -= 1;  // sum(x) = ir >= 1, so some coordinate is positive
        lowered = 1;
    }
    return Cell{std::move(v), lowered + static_cast<int>(profile.excess)};
}

// ---------------------------------------------------------------------------
// Volumes

/// #{x in Z^{d+1} : sum x = ni, 0 <= x_t <= n}, the Ehrhart count of n * Delta(d,i).
inline BigInt lattice_point_count(int d, int i, std::int64_t n)
{
    validate_parameters(1, d, i);
    if (n < 0)
        throw std::invalid_argument("dilation n must be non-negative");
    return composition_count(n, d + 1, n * i);
}

/// d! times the leading coefficient of the Ehrhart polynomial of Delta(d,i),
/// interpolated exactly through n = 0..d by forward differences.
inline BigInt ehrhart_normalized_volume(int d, int i)
{
    validate_parameters(1, d, i);
    std::vector<Rational> diffs;
    for (int n = 0; n <= d; ++n)
        diffs.emplace_back(lattice_point_count(d, i, n));
    for (int order = 1; order <= d; ++order)
        for (int n = d; n >= order; --n)
            diffs[n] -= diffs[n - 1];

    BigInt factorial = 1;
    for (int k = 2; k <= d; ++k)
        factorial *= k;
    const Rational leading = diffs[d] / Rational(factorial);
    const Rational volume = leading * Rational(factorial);
    if (!is_integer(volume) || volume <= 0)
        throw std::logic_error("Ehrhart interpolation produced non-integral volume " + format_rational(volume));
    return numerator_of(volume);
}

/// Sum over cells of the normalized volume A(d, j) of each translate.
inline BigInt subdivision_volume(const Subdivision& s)
{
    const EulerianTable table = eulerian_table(s.d);
    BigInt total = 0;
    for (const auto& c : s.cells)
        if (c.j >= 1 && c.j <= s.d)
            total += table.row[c.j - 1];
    return total;
}

// ---------------------------------------------------------------------------
// Sampling

inline constexpr std::int64_t kMaxSampleDenominator = 100;

/// A random convex combination of the vertices r * e_T of r * Delta(d,i), with
/// weights w/D for a random common denominator D in [1, 100]. The weights are
/// spread over a random nonempty subset of the vertices so that faces of every
/// dimension are hit.
template <typename Engine>
RationalPoint sample_dilated_point(Engine& rng, int r, int d, int i)
{
    std::vector<IndexSet> vertex_supports;
    for_each_subset_of_size(full_index_set(static_cast<std::size_t>(d) + 1), i,
                            [&](const IndexSet& s) { vertex_supports.push_back(s); });

    std::uniform_int_distribution<std::int64_t> pick_denominator(1, kMaxSampleDenominator);
    std::uniform_int_distribution<std::size_t> pick_subset_size(1, vertex_supports.size());
    const std::int64_t denominator = pick_denominator(rng);
    const std::size_t support_size = pick_subset_size(rng);

    std::vector<std::size_t> order(vertex_supports.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    for (std::size_t k = 0; k < support_size; ++k) {
        std::uniform_int_distribution<std::size_t> pick(k, order.size() - 1);
        std::swap(order[k], order[pick(rng)]);
    }

    std::vector<std::int64_t> units(static_cast<std::size_t>(d) + 1, 0);
    std::uniform_int_distribution<std::size_t> pick_vertex(0, support_size - 1);
    for (std::int64_t unit = 0; unit < denominator; ++unit)
        for (int t : vertex_supports[order[pick_vertex(rng)]])
            units[t] += r;

    std::vector<Rational> coords;
    coords.reserve(units.size());
    for (auto u : units)
        coords.emplace_back(u, denominator);
    return RationalPoint(std::move(coords));
}

// ---------------------------------------------------------------------------
// Verification

struct VerifyOptions
{
    std::size_t samples = 1000;
    std::uint64_t seed = 0;
    std::size_t exhaustive_pair_limit = 500;  // exhaustive pair scan up to this many cells
    std::size_t sampled_pairs = 10000;
};

struct VerifyReport
{
    int r = 0;
    int d = 0;
    int i = 0;
    std::uint64_t seed = 0;
    std::size_t cells = 0;

    bool containment = true;
    std::vector<std::string> containment_failures;

    std::size_t coverage_samples = 0;
    std::vector<std::string> coverage_failures;

    bool faces_exhaustive = true;
    std::size_t face_pairs = 0;
    std::vector<std::string> face_failures;

    BigInt volume_lhs = 0;
    BigInt volume_rhs = 0;
    bool volume_equal = false;

    bool passed() const
    {
        return containment && coverage_failures.empty() && face_failures.empty() && volume_equal;
    }
};

namespace detail {

inline bool sorted_subset(const std::vector<LatticeVector>& small, const std::vector<LatticeVector>& big)
{
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

/// Empty string when the pair meets in a common face; otherwise the reason.
inline std::string check_pair(const Cell& a, const Cell& b, bool distinct, int d)
{
    const Face face = intersect_cells(a, b);
    const auto va = cell_vertices(a);
    const auto vb = cell_vertices(b);
    std::vector<LatticeVector> common;
    std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(common));
    const std::vector<LatticeVector> fv = face.empty ? std::vector<LatticeVector>{} : face_vertices(face);
    const std::string pair = format_cell(a) + " & " + format_cell(b);
    if (!sorted_subset(fv, va) || !sorted_subset(fv, vb))
        return pair + ": intersection face is not a face of both cells";
    if (fv != common)
        return pair + ": intersection face differs from the common vertex set";
    if (distinct && face.dimension() >= d)
        return pair + ": interiors overlap";
    return {};
}

}  // namespace detail

/// Checks containment, sampled coverage, pairwise faces and volume additivity
/// of an arbitrary cell list claimed to subdivide r * Delta(d,i). Every check
/// runs to completion; failures are collected, not thrown.
inline VerifyReport verify_subdivision(const Subdivision& s, const VerifyOptions& opts = {})
{
    validate_parameters(s.r, s.d, s.i);
    VerifyReport rep;
    rep.r = s.r;
    rep.d = s.d;
    rep.i = s.i;
    rep.seed = opts.seed;
    rep.cells = s.cells.size();
    const std::size_t ambient = static_cast<std::size_t>(s.d) + 1;

    // Containment.
    std::vector<bool> well_formed(s.cells.size(), true);
    for (std::size_t k = 0; k < s.cells.size(); ++k) {
        const Cell& c = s.cells[k];
        if (c.v.size() != ambient || c.j < 1 || c.j > s.d) {
            well_formed[k] = false;
            rep.containment_failures.push_back(format_cell(c) + ": malformed cell");
            continue;
        }
        for (const auto& p : cell_vertices(c)) {
            if (!in_dilated_hypersimplex(p, s.r, s.i)) {
                rep.containment_failures.push_back(format_cell(c) + ": vertex " + format_vector(p) +
                                                   " outside the dilated hypersimplex");
                break;
            }
        }
    }
    rep.containment = rep.containment_failures.empty();

    // Coverage.
    std::vector<Cell> index = s.cells;
    std::sort(index.begin(), index.end());
    std::mt19937_64 rng(opts.seed);
    for (std::size_t n = 0; n < opts.samples; ++n) {
        const RationalPoint x = sample_dilated_point(rng, s.r, s.d, s.i);
        ++rep.coverage_samples;
        const Cell w = covering_witness(x, s.r, s.d, s.i);
        if (!contains(x, w))
            rep.coverage_failures.push_back(format_point(x) + ": witness " + format_cell(w) + " misses the point");
        else if (!std::binary_search(index.begin(), index.end(), w))
            rep.coverage_failures.push_back(format_point(x) + ": witness " + format_cell(w) +
                                            " is not a cell of the subdivision");
    }

    // Pairwise faces.
    auto check = [&](std::size_t a, std::size_t b) {
        ++rep.face_pairs;
        if (!well_formed[a] || !well_formed[b])
            return;
        std::string failure = detail::check_pair(s.cells[a], s.cells[b], a != b, s.d);
        if (!failure.empty())
            rep.face_failures.push_back(std::move(failure));
    };
    const std::size_t count = s.cells.size();
    rep.faces_exhaustive = count <= opts.exhaustive_pair_limit;
    if (rep.faces_exhaustive) {
        for (std::size_t a = 0; a < count; ++a)
            for (std::size_t b = a + 1; b < count; ++b)
                check(a, b);
    } else if (count >= 2) {
        std::uniform_int_distribution<std::size_t> pick(0, count - 1);
        for (std::size_t n = 0; n < opts.sampled_pairs; ++n) {
            std::size_t a = pick(rng);
            std::size_t b = pick(rng);
            while (b == a)
                b = pick(rng);
            check(a, b);
        }
    }

    // Volume additivity.
    rep.volume_lhs = subdivision_volume(s);
    rep.volume_rhs = boost::multiprecision::pow(BigInt(s.r), static_cast<unsigned>(s.d)) * eulerian(s.d, s.i);
    rep.volume_equal = rep.volume_lhs == rep.volume_rhs;
    return rep;
}

inline VerifyReport verify_subdivision(int r, int d, int i, const VerifyOptions& opts = {})
{
    return verify_subdivision(build_subdivision(r, d, i), opts);
}

}  // namespace hypersimplex

#endif  // HYPERSIMPLEX_SUBDIVISION_HPP
