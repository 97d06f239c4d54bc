// Dual graph of the hyper-triangulation H(r,d,i): one node per cell, an edge
// whenever two cells share a facet. Two cells of H(r,d,i) share a facet exactly
// when their translation vectors differ by a unit vector.

#ifndef HYPERSIMPLEX_DUAL_GRAPH_HPP
#define HYPERSIMPLEX_DUAL_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "geometry.hpp"
#include "subdivision.hpp"

namespace hypersimplex {

using Edge = std::pair<std::size_t, std::size_t>;  // first < second

struct DualGraph
{
    int r = 0;
    int d = 0;
    int i = 0;
    std::vector<Cell> nodes;
    std::vector<Edge> edges;  // sorted

    std::vector<std::size_t> degrees() const
    {
        std::vector<std::size_t> deg(nodes.size(), 0);
        for (const auto& [a, b] : edges) {
            ++deg[a];
            ++deg[b];
        }
        return deg;
    }
};

/// True when u and v differ in exactly one coordinate, by exactly 1.
inline bool unit_apart(const LatticeVector& u, const LatticeVector& v)
{
    require_same_length(u.size(), v.size());
    int differing = 0;
    for (std::size_t t = 0; t < u.size(); ++t) {
        const std::int64_t diff = u[t] - v[t];
        if (diff == 0)
            continue;
        if (diff != 1 && diff != -1)
            return false;
        if (++differing > 1)
            return false;
    }
    return differing == 1;
}

/// Probes the 2(d+1) unit neighbours of each translation vector.
inline DualGraph build_dual_graph(const Subdivision& s)
{
    DualGraph g{s.r, s.d, s.i, s.cells, {}};
    // Within H(r,d,i) the level j is determined by v (sum v = ir - j).
    std::map<LatticeVector, std::size_t> by_translation;
    for (std::size_t k = 0; k < g.nodes.size(); ++k)
        by_translation.emplace(g.nodes[k].v, k);

    for (std::size_t k = 0; k < g.nodes.size(); ++k) {
        LatticeVector probe = g.nodes[k].v;
        for (std::size_t t = 0; t < probe.size(); ++t) {
            probe[t] += 1;  // only upward neighbours, so each edge is seen once
            if (auto it = by_translation.find(probe); it != by_translation.end())
                g.edges.emplace_back(std::min(k, it->second), std::max(k, it->second));
            probe[t] -= 1;
        }
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

struct DualGraphCheck
{
    std::size_t pairs = 0;
    std::size_t adjacent = 0;
    std::vector<std::string> discrepancies;

    bool passed() const { return discrepancies.empty(); }
};

/// Compares, over every unordered pair of cells, the unit-difference rule with
/// the geometric rule "the cells meet in a (d-1)-dimensional face".
inline DualGraphCheck check_dual_graph(const Subdivision& s)
{
    DualGraphCheck report;
    const auto& cells = s.cells;
    for (std::size_t a = 0; a < cells.size(); ++a) {
        for (std::size_t b = a + 1; b < cells.size(); ++b) {
            ++report.pairs;
            const bool by_rule = unit_apart(cells[a].v, cells[b].v);
            const bool by_geometry = intersect_cells(cells[a], cells[b]).dimension() == s.d - 1;
            if (by_rule)
                ++report.adjacent;
            if (by_rule != by_geometry)
                report.discrepancies.push_back(format_cell(cells[a]) + " & " + format_cell(cells[b]) +
                                               (by_rule ? ": unit-apart but no common facet"
                                                        : ": common facet but not unit-apart"));
        }
    }
    return report;
}

inline bool is_connected(const DualGraph& g)
{
    if (g.nodes.empty())
        return true;
    std::vector<std::vector<std::size_t>> adj(g.nodes.size());
    for (const auto& [a, b] : g.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<bool> seen(g.nodes.size(), false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const std::size_t n = stack.back();
        stack.pop_back();
        for (std::size_t m : adj[n])
            if (!seen[m]) {
                seen[m] = true;
                ++reached;
                stack.push_back(m);
            }
    }
    return reached == g.nodes.size();
}

enum class GraphFormat { Dot, Json };

inline GraphFormat parse_graph_format(const std::string& name)
{
    if (name == "dot")
        return GraphFormat::Dot;
    if (name == "json")
        return GraphFormat::Json;
    throw std::invalid_argument("unknown graph format '" + name + "' (expected dot or json)");
}

inline std::string export_dot(const DualGraph& g)
{
    std::ostringstream out;
    out << "graph H_" << g.r << '_' << g.d << '_' << g.i << " {\n";
    for (std::size_t k = 0; k < g.nodes.size(); ++k)
        out << "  n" << k << " [label=\"" << format_cell(g.nodes[k]) << "\"];\n";
    for (const auto& [a, b] : g.edges)
        out << "  n" << a << " -- n" << b << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace hypersimplex

#endif  // HYPERSIMPLEX_DUAL_GRAPH_HPP
