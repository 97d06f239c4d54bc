// JSON forms of cells, subdivisions, verification reports and dual graphs.
// Objects keep insertion order so output is byte-stable.

#ifndef HYPERSIMPLEX_SERIALIZATION_HPP
#define HYPERSIMPLEX_SERIALIZATION_HPP

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "combinatorics.hpp"
#include "dual_graph.hpp"
#include "geometry.hpp"
#include "subdivision.hpp"

namespace hypersimplex {

using Json = nlohmann::ordered_json;

inline Json cell_to_json(const Cell& c)
{
    Json out;
    out["v"] = c.v;
    out["j"] = c.j;
    return out;
}

inline Cell cell_from_json(const Json& in)
{
    if (!in.is_object() || !in.contains("v") || !in.contains("j"))
        throw std::invalid_argument("cell must be an object with keys \"v\" and \"j\"");
    return make_cell(in.at("v").get<LatticeVector>(), in.at("j").get<int>());
}

inline Json subdivision_to_json(const Subdivision& s)
{
    Json out;
    out["r"] = s.r;
    out["d"] = s.d;
    out["i"] = s.i;
    Json cells = Json::array();
    for (const auto& c : s.cells)
        cells.push_back(cell_to_json(c));
    out["cells"] = std::move(cells);
    return out;
}

/// Parameters are validated; cells must have d+1 coordinates and a level in
/// [1, d], but are otherwise taken as given.
inline Subdivision subdivision_from_json(const Json& in)
{
    try {
        Subdivision s;
        s.r = in.at("r").get<int>();
        s.d = in.at("d").get<int>();
        s.i = in.at("i").get<int>();
        validate_parameters(s.r, s.d, s.i);
        for (const auto& c : in.at("cells")) {
            Cell cell = cell_from_json(c);
            require_same_length(cell.v.size(), static_cast<std::size_t>(s.d) + 1);
            s.cells.push_back(std::move(cell));
        }
        return s;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed subdivision JSON: ") + e.what());
    }
}

inline Json verify_report_to_json(const VerifyReport& rep)
{
    Json checks;
    checks["containment"] = rep.containment;
    checks["coverage"] = {{"samples", rep.coverage_samples}, {"failures", rep.coverage_failures.size()}};
    checks["faces"] = {{"pairs", rep.face_pairs},
                       {"failures", rep.face_failures.size()},
                       {"mode", rep.faces_exhaustive ? "exhaustive" : "sampled"}};
    checks["volume"] = {{"lhs", rep.volume_lhs.str()}, {"rhs", rep.volume_rhs.str()}, {"equal", rep.volume_equal}};

    Json out;
    out["parameters"] = {{"r", rep.r}, {"d", rep.d}, {"i", rep.i}, {"seed", rep.seed}, {"cells", rep.cells}};
    out["checks"] = std::move(checks);
    out["passed"] = rep.passed();
    return out;
}

inline Json sweep_report_to_json(const SweepReport& rep)
{
    Json triples = Json::array();
    for (const auto& e : rep.entries)
        triples.push_back({{"d", e.d},
                           {"i", e.i},
                           {"r", e.r},
                           {"lhs", e.result.lhs.str()},
                           {"rhs", e.result.rhs.str()},
                           {"equal", e.result.equal}});
    Json out;
    out["triples"] = std::move(triples);
    out["failures"] = rep.failures();
    return out;
}

inline Json dual_graph_to_json(const DualGraph& g)
{
    Json nodes = Json::array();
    for (const auto& c : g.nodes)
        nodes.push_back(cell_to_json(c));
    Json edges = Json::array();
    for (const auto& [a, b] : g.edges)
        edges.push_back({a, b});
    Json out;
    out["nodes"] = std::move(nodes);
    out["edges"] = std::move(edges);
    return out;
}

inline std::string export_graph(const DualGraph& g, GraphFormat format)
{
    if (format == GraphFormat::Dot)
        return export_dot(g);
    return dual_graph_to_json(g).dump() + "\n";
}

}  // namespace hypersimplex

#endif  // HYPERSIMPLEX_SERIALIZATION_HPP
