#pragma once

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bgrass/covering.hpp"
#include "bgrass/maya.hpp"

namespace bgrass {

inline constexpr int kDefaultGraphRankBound = 10;

// The full cover graph of the quotient order on W_n^(k).  Nodes are stored in
// lexicographic one-line order, edges point from the covered element up to
// the covering one and are sorted by (type, lower, upper).
struct BruhatGraph {
    struct Edge {
        std::int32_t lower;
        std::int32_t upper;
        CoverType type;

        friend bool operator==(const Edge&, const Edge&) = default;
    };

    int n = 0;
    int k = 0;
    std::vector<GrassmannPerm> nodes;
    std::vector<int> lengths;
    std::vector<Edge> edges;

    std::int32_t node_id(const GrassmannPerm& g) const {
        const auto it = std::lower_bound(nodes.begin(), nodes.end(), g);
        if (it == nodes.end() || !(*it == g))
            throw ValidationError("element " + g.to_string() + " is not a node of this graph");
        return static_cast<std::int32_t>(it - nodes.begin());
    }
};

inline BruhatGraph build_graph(int n, int k, int rank_bound = kDefaultGraphRankBound) {
    if (n > rank_bound)
        throw ResourceLimitError("rank " + std::to_string(n) + " exceeds the graph bound " +
                                 std::to_string(rank_bound));
    BruhatGraph g;
    g.n = n;
    g.k = k;
    g.nodes = enumerate_grassmannians(n, k);
    g.lengths.reserve(g.nodes.size());
    for (const auto& node : g.nodes)
        g.lengths.push_back(length_grass(node));
    for (std::int32_t upper = 0; upper < static_cast<std::int32_t>(g.nodes.size()); ++upper)
        for (const CoveringEdge& e : covered_by(g.nodes[static_cast<std::size_t>(upper)]))
            g.edges.push_back({g.node_id(e.lower), upper, e.type});
    std::sort(g.edges.begin(), g.edges.end(), [](const BruhatGraph::Edge& a, const BruhatGraph::Edge& b) {
        if (a.type != b.type) return a.type < b.type;
        if (a.lower != b.lower) return a.lower < b.lower;
        return a.upper < b.upper;
    });
    return g;
}

// Number of nodes of each length, indexed 0 .. max length.
inline std::vector<std::size_t> rank_sizes(const BruhatGraph& g) {
    int max_len = 0;
    for (int l : g.lengths)
        max_len = std::max(max_len, l);
    std::vector<std::size_t> sizes(static_cast<std::size_t>(max_len) + 1, 0);
    for (int l : g.lengths)
        ++sizes[static_cast<std::size_t>(l)];
    return sizes;
}

// Edge attributes per cover type, plus an optional overlay connecting every
// node to its dual.
struct DotStyle {
    std::string b1 = "style=dotted";
    std::string b2 = "style=dashed";
    std::string b3 = "style=solid penwidth=1";
    std::string b4 = "style=solid penwidth=2";
    bool duality_links = false;

    const std::string& attrs(CoverType t) const {
        switch (t) {
            case CoverType::B1: return b1;
            case CoverType::B2: return b2;
            case CoverType::B3: return b3;
            case CoverType::B4: return b4;
        }
        return b3;
    }
};

// Graphviz rendering: one rank=same cluster per length, arrows up the order.
// Byte-identical output for identical inputs.
inline std::string export_dot(const BruhatGraph& g, const DotStyle& style = {}) {
    std::ostringstream os;
    os << "digraph bruhat_n" << g.n << "_k" << g.k << " {\n";
    os << "  rankdir=BT;\n";
    os << "  node [shape=box];\n";
    const std::vector<std::size_t> sizes = rank_sizes(g);
    for (std::size_t level = 0; level < sizes.size(); ++level) {
        os << "  { rank=same;";
        for (std::size_t i = 0; i < g.nodes.size(); ++i)
            if (g.lengths[i] == static_cast<int>(level))
                os << " \"" << g.nodes[i].to_string() << "\";";
        os << " }\n";
    }
    for (const auto& e : g.edges)
        os << "  \"" << g.nodes[static_cast<std::size_t>(e.lower)].to_string() << "\" -> \""
           << g.nodes[static_cast<std::size_t>(e.upper)].to_string() << "\" ["
           << style.attrs(e.type) << "];\n";
    if (style.duality_links) {
        os << "  // dual pairs\n";
        for (std::size_t i = 0; i < g.nodes.size(); ++i) {
            const std::int32_t j = g.node_id(dual(g.nodes[i]));
            if (static_cast<std::int32_t>(i) < j)
                os << "  \"" << g.nodes[i].to_string() << "\" -> \""
                   << g.nodes[static_cast<std::size_t>(j)].to_string()
                   << "\" [dir=none style=dashed color=gray constraint=false];\n";
        }
    }
    os << "}\n";
    return os.str();
}

// Machine-readable form: nodes carry id, one-line notation, box row and
// length; edges carry endpoint ids and the cover type.
inline std::string export_json(const BruhatGraph& g) {
    nlohmann::json j;
    j["n"] = g.n;
    j["k"] = g.k;
    nlohmann::json nodes = nlohmann::json::array();
    for (std::size_t i = 0; i < g.nodes.size(); ++i)
        nodes.push_back({{"id", i},
                         {"oneline", g.nodes[i].to_string()},
                         {"maya", to_maya(g.nodes[i]).to_ascii()},
                         {"length", g.lengths[i]}});
    j["nodes"] = std::move(nodes);
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : g.edges)
        edges.push_back({{"lower_id", e.lower}, {"upper_id", e.upper}, {"type", to_string(e.type)}});
    j["edges"] = std::move(edges);
    return j.dump(2) + "\n";
}

inline BruhatGraph graph_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_object())
        throw ParseError("graph JSON is not an object");
    BruhatGraph g;
    try {
        g.n = j.at("n").get<int>();
        g.k = j.at("k").get<int>();
        for (const auto& node : j.at("nodes")) {
            const auto id = node.at("id").get<std::int32_t>();
            if (id != static_cast<std::int32_t>(g.nodes.size()))
                throw ValidationError("node ids must be consecutive from 0");
            const auto parsed = parse_oneline_marked(node.at("oneline").get<std::string>(), g.n);
            if (parsed.bar && *parsed.bar != g.k)
                throw ValidationError("node '|' marker disagrees with k");
            const GrassmannPerm gp = from_signed(parsed.perm, g.k);
            if (node.at("length").get<int>() != length_grass(gp))
                throw ValidationError("node length disagrees with its one-line notation");
            if (node.at("maya").get<std::string>() != to_maya(gp).to_ascii())
                throw ValidationError("node box row disagrees with its one-line notation");
            g.nodes.push_back(gp);
            g.lengths.push_back(length_grass(gp));
        }
        for (const auto& edge : j.at("edges")) {
            const auto lo = edge.at("lower_id").get<std::int32_t>();
            const auto hi = edge.at("upper_id").get<std::int32_t>();
            if (lo < 0 || hi < 0 || lo >= static_cast<std::int32_t>(g.nodes.size()) ||
                hi >= static_cast<std::int32_t>(g.nodes.size()))
                throw ValidationError("edge endpoint id out of range");
            const auto type = cover_type_from_string(edge.at("type").get<std::string>());
            if (!type)
                throw ValidationError("unknown edge type '" +
                                      edge.at("type").get<std::string>() + "'");
            g.edges.push_back({lo, hi, *type});
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad graph JSON: ") + e.what());
    }
    return g;
}

} // namespace bgrass
