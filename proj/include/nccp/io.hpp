#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "kary.hpp"
#include "lattice.hpp"
#include "partition.hpp"
#include "series.hpp"

namespace nccp {

using json = nlohmann::json;

inline json to_json(const Partition& p)
{
    return {{"text", to_string(p)}, {"blocks", p.blocks()}, {"rank", p.rank()}};
}

// Accepts either a record from to_json or a bare string.
inline Partition partition_from_json(const json& j)
{
    if (j.is_string())
        return parse(j.get<std::string>());
    if (j.contains("blocks"))
        return Partition::from_blocks(j.at("blocks").get<std::vector<std::vector<int>>>());
    return parse(j.at("text").get<std::string>());
}

inline json to_json(const KAryTree& t)
{
    return {{"k", t.k}, {"n", t.n}, {"text", to_string(t)}, {"heights", height_sequence(t)}};
}

inline KAryTree kary_tree_from_json(const json& j)
{
    return parse_kary_tree(j.at("text").get<std::string>(), j.at("k").get<int>());
}

inline json to_json(const DyckTiling& t)
{
    json tiles = json::array();
    for (const auto& d : t.tiles) {
        json cells = json::array();
        for (const auto& c : d.cells(t.degree))
            cells.push_back({c.x, c.y});
        tiles.push_back({{"x", d.x}, {"y", d.y}, {"size", d.size}, {"cells", cells}});
    }
    return {{"n", t.n}, {"degree", t.degree}, {"tiles", tiles}};
}

inline DyckTiling tiling_from_json(const json& j)
{
    DyckTiling t{j.at("n").get<int>(), j.at("degree").get<int>(), {}};
    for (const auto& d : j.at("tiles"))
        t.tiles.push_back({d.at("x").get<int>(), d.at("y").get<int>(), d.at("size").get<int>()});
    validate(t);
    return t;
}

// Coefficients keyed by exponents: [r, t, q, coefficient as decimal string].
inline json to_json(const Series& s)
{
    json terms = json::array();
    for (int n = 0; n <= s.order; ++n)
        for (const auto& [e, c] : s.coeff[n].terms())
            terms.push_back({n, e[0], e[1], c.str()});
    return {{"order", s.order}, {"terms", terms}};
}

inline Series series_from_json(const json& j)
{
    Series s{j.at("order").get<int>(), {}};
    s.coeff.assign(s.order + 1, Poly(2));
    for (const auto& t : j.at("terms"))
        s.coeff.at(t[0].get<int>()).add({t[1].get<int>(), t[2].get<int>()}, Int(t[3].get<std::string>()));
    return s;
}

inline json to_json(const HasseDiagram& h)
{
    json nodes = json::array(), edges = json::array();
    for (const auto& p : h.elements)
        nodes.push_back(to_string(p));
    for (const auto& e : h.edges)
        edges.push_back({{"lower", e.lower},
                         {"upper", e.upper},
                         {"ltilde", e.label.ltilde},
                         {"a", e.label.a},
                         {"b", e.label.b}});
    return {{"n", h.n}, {"nodes", nodes}, {"edges", edges}};
}

} // namespace nccp
