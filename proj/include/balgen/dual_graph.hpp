#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "balgen/complex.hpp"
#include "balgen/flags.hpp"
#include "balgen/necklace.hpp"

namespace balgen {

/// Facet-adjacency graph with the proper edge coloring inherited from the
/// vertex coloring: an edge through a shared ridge gets the one color the
/// ridge is missing. (d+1)-regular by the ridge condition.
struct DualGraph {
    int d = 0;
    std::vector<std::vector<std::int32_t>> adj;  // adj[node][color] -> node

    std::int64_t node_count() const { return static_cast<std::int64_t>(adj.size()); }
    std::int64_t edge_count() const {
        return node_count() * (d + 1) / 2;
    }
};

inline DualGraph dual_graph(const ColoredComplex& c) {
    require_balanced_normal(c, "dual_graph");
    DualGraph g;
    g.d = c.dimension();
    g.adj.assign(c.facets().size(),
                 std::vector<std::int32_t>(static_cast<std::size_t>(g.d) + 1, -1));
    for (const auto& [ridge, members] : detail::ridge_map(c)) {
        if (members.size() != 2)
            fail("PreconditionFailed", "ridge " + c.face_string(ridge) +
                                           " lies in " + std::to_string(members.size()) +
                                           " facets");
        ColorSet present = 0;
        for (VertexId v : ridge) present |= ColorSet{1} << c.color(v);
        const int missing = mask_colors(full_mask(g.d) & ~present).front();
        g.adj[members[0]][static_cast<std::size_t>(missing)] =
            static_cast<std::int32_t>(members[1]);
        g.adj[members[1]][static_cast<std::size_t>(missing)] =
            static_cast<std::int32_t>(members[0]);
    }
    return g;
}

/// Two-colorability on arbitrary adjacency lists (raw graph fixtures).
inline bool is_bipartite_adjacency(const std::vector<std::vector<std::int32_t>>& adj) {
    std::vector<int> side(adj.size(), -1);
    for (std::size_t start = 0; start < adj.size(); ++start) {
        if (side[start] != -1) continue;
        side[start] = 0;
        std::deque<std::size_t> queue{start};
        while (!queue.empty()) {
            const std::size_t v = queue.front();
            queue.pop_front();
            for (std::int32_t w : adj[v]) {
                if (w < 0) continue;
                const auto wi = static_cast<std::size_t>(w);
                if (side[wi] == -1) {
                    side[wi] = 1 - side[v];
                    queue.push_back(wi);
                } else if (side[wi] == side[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

/// Bipartiteness of the dual graph; reported as orientability of the complex.
inline bool is_bipartite(const DualGraph& g) { return is_bipartite_adjacency(g.adj); }

/// Number of connected components of the subgraph on two edge colors. Each is
/// a cycle by regularity, and they biject with (d-2)-faces of the
/// complementary color set.
inline std::int64_t bicolored_cycle_count(const DualGraph& g, int i, int j) {
    if (i == j || i < 0 || j < 0 || i > g.d || j > g.d)
        fail("BadColors", "need two distinct colors in 0.." + std::to_string(g.d));
    detail::UnionFind uf(g.adj.size());
    for (std::size_t v = 0; v < g.adj.size(); ++v) {
        for (int col : {i, j}) {
            const std::int32_t w = g.adj[v][static_cast<std::size_t>(col)];
            if (w >= 0) uf.unite(static_cast<int>(v), w);
        }
    }
    return uf.component_count();
}

/// Face/edge/vertex counts of the closed surface carrying the regular
/// embedding for one cyclic color order, with the Euler characteristic
/// computed both from the cell structure and from the flag counts.
struct EmbeddingSummary {
    Necklace eps;
    std::vector<std::int64_t> cycle_counts;  // one per adjacent color pair
    std::int64_t vertices = 0;
    std::int64_t edges = 0;
    std::int64_t faces = 0;
    std::int64_t euler = 0;  // V - E + F, cross-checked against the flag formula
    bool orientable = false;
};

inline EmbeddingSummary embedding_summary(const ColoredComplex& c, const Necklace& eps) {
    if (c.dimension() < 3)
        fail("DimensionTooLow", "regular embeddings need dimension >= 3");
    require_balanced_normal(c, "embedding_summary");
    const DualGraph g = dual_graph(c);
    const int d = g.d;

    EmbeddingSummary s;
    s.eps = eps;
    s.vertices = g.node_count();
    if ((d + 1) * s.vertices % 2 != 0)
        fail("PreconditionFailed", "odd incidence count; not a pseudomanifold dual");
    s.edges = (d + 1) * s.vertices / 2;
    std::int64_t flags_total = 0;
    for (const auto& [a, b] : eps.adjacent_pairs()) {
        const std::int64_t cycles = bicolored_cycle_count(g, a, b);
        s.cycle_counts.push_back(cycles);
        s.faces += cycles;
        flags_total += flag_f(c, full_mask(d) & ~color_mask({a, b}));
    }
    s.euler = s.vertices - s.edges + s.faces;

    const std::int64_t euler_by_flags = flags_total + (1 - d) * s.vertices / 2;
    if (s.euler != euler_by_flags)
        fail("CrossCheckFailed",
             "surface Euler characteristic mismatch: cells give " +
                 std::to_string(s.euler) + ", flag counts give " +
                 std::to_string(euler_by_flags));

    s.orientable = is_bipartite(g);
    return s;
}

/// Graphviz text for the dual graph, or for its two-color subgraph when a
/// pair is given. Byte-deterministic for a given complex.
inline std::string export_dot(const ColoredComplex& c, const DualGraph& g,
                              std::optional<std::pair<int, int>> pair = {}) {
    static const char* palette[] = {
        "#1b9e77", "#d95f02", "#7570b3", "#e7298a", "#66a61e", "#e6ab02",
        "#a6761d", "#666666", "#1f78b4", "#b2df8a", "#fb9a99", "#cab2d6"};
    constexpr std::size_t palette_size = sizeof(palette) / sizeof(palette[0]);

    const bool restricted = pair.has_value();
    const int keep_a = restricted ? pair->first : -1;
    const int keep_b = restricted ? pair->second : -1;

    std::ostringstream os;
    os << "graph dual {\n";
    os << "  graph [ordering=out];\n";
    for (std::size_t v = 0; v < g.adj.size(); ++v) {
        std::string label;
        for (VertexId x : c.facets()[v]) {
            if (!label.empty()) label += " ";
            label += c.label(x);
        }
        os << "  n" << v << " [label=\"" << label << "\"];\n";
    }
    for (std::size_t v = 0; v < g.adj.size(); ++v) {
        for (int col = 0; col <= g.d; ++col) {
            const std::int32_t w = g.adj[v][static_cast<std::size_t>(col)];
            if (w < 0 || static_cast<std::size_t>(w) < v) continue;
            if (restricted && col != keep_a && col != keep_b) continue;
            os << "  n" << v << " -- n" << w << " [color=\""
               << palette[static_cast<std::size_t>(col) % palette_size]
               << "\" label=\"" << col << "\"];\n";
        }
    }
    os << "}\n";
    return os.str();
}

}  // namespace balgen
