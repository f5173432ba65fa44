#pragma once

#include <array>
#include <deque>
#include <map>
#include <optional>
#include <vector>

#include "balgen/complex.hpp"
#include "balgen/flags.hpp"
#include "balgen/smith.hpp"

namespace balgen {

using Edge = std::pair<VertexId, VertexId>;  // lo < hi

struct SpanningTree {
    std::vector<Edge> edges;                      // sorted
    std::optional<std::pair<int, int>> seeded_pair;  // color pair grown first

    bool contains(VertexId a, VertexId b) const {
        if (a > b) std::swap(a, b);
        return std::binary_search(edges.begin(), edges.end(), Edge{a, b});
    }
};

namespace detail {

inline std::vector<Edge> all_edges(const ColoredComplex& c) {
    std::vector<Edge> out;
    for (const Simplex& e : c.faces(1)) out.emplace_back(e[0], e[1]);
    return out;  // already sorted: faces(1) is sorted and pairs are (lo,hi)
}

}  // namespace detail

/// Deterministic spanning tree of the 1-skeleton: plain BFS from vertex 0, or
/// a BFS forest of the two-color subgraph completed to a full tree when a
/// color pair is given (the tree then extends a spanning tree of Delta_S).
inline SpanningTree spanning_tree(const ColoredComplex& c,
                                  std::optional<std::pair<int, int>> s = {}) {
    const int n = c.vertex_count();
    const auto edges = detail::all_edges(c);
    std::vector<std::vector<VertexId>> adj(static_cast<std::size_t>(n));
    for (const auto& [a, b] : edges) {
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
    }
    for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());

    SpanningTree t;
    t.seeded_pair = s;
    std::vector<bool> in_component(static_cast<std::size_t>(n), false);
    detail::UnionFind uf(static_cast<std::size_t>(n));

    if (s) {
        check_colors_in_range(c, color_mask({s->first, s->second}));
        const ColorSet mask = color_mask({s->first, s->second});
        auto in_pair = [&](VertexId v) {
            return (ColorSet{1} << c.color(v)) & mask;
        };
        // BFS forest over the two-color subgraph, roots in ascending order
        std::vector<bool> seen(static_cast<std::size_t>(n), false);
        for (VertexId root = 0; root < n; ++root) {
            if (seen[static_cast<std::size_t>(root)] || !in_pair(root)) continue;
            seen[static_cast<std::size_t>(root)] = true;
            std::deque<VertexId> queue{root};
            while (!queue.empty()) {
                const VertexId v = queue.front();
                queue.pop_front();
                for (VertexId w : adj[static_cast<std::size_t>(v)]) {
                    if (seen[static_cast<std::size_t>(w)] || !in_pair(w)) continue;
                    seen[static_cast<std::size_t>(w)] = true;
                    t.edges.emplace_back(std::min(v, w), std::max(v, w));
                    uf.unite(v, w);
                    queue.push_back(w);
                }
            }
        }
    }

    // BFS over the full graph, discovery edges only where they merge components
    {
        std::vector<bool> seen(static_cast<std::size_t>(n), false);
        std::deque<VertexId> queue;
        auto enqueue_component = [&](VertexId v) {
            for (VertexId w = 0; w < n; ++w)
                if (!seen[static_cast<std::size_t>(w)] && uf.find(w) == uf.find(v)) {
                    seen[static_cast<std::size_t>(w)] = true;
                    queue.push_back(w);
                }
        };
        if (n > 0) enqueue_component(0);
        while (!queue.empty()) {
            const VertexId v = queue.front();
            queue.pop_front();
            for (VertexId w : adj[static_cast<std::size_t>(v)]) {
                if (seen[static_cast<std::size_t>(w)]) continue;
                if (uf.find(v) != uf.find(w)) {
                    t.edges.emplace_back(std::min(v, w), std::max(v, w));
                    uf.unite(v, w);
                }
                enqueue_component(w);
            }
        }
        for (VertexId v = 0; v < n; ++v)
            if (!seen[static_cast<std::size_t>(v)])
                fail("Disconnected", "1-skeleton is not connected");
    }

    std::sort(t.edges.begin(), t.edges.end());
    return t;
}

/// Generators are the edges outside the tree; relations are one triviality
/// relation per tree edge plus one relation (v1,v2)(v2,v3) = (v1,v3) per
/// 2-face. Nothing is simplified here.
struct Presentation {
    std::vector<Edge> edges;  // all 1-faces, sorted; index space for everything below
    std::vector<bool> in_tree;
    std::vector<std::array<std::int32_t, 3>> triangle_relations;  // (e12, e23, e13)
    std::vector<bool> trivial;  // classes proven trivial so far

    std::size_t edge_index(VertexId a, VertexId b) const {
        if (a > b) std::swap(a, b);
        const auto it = std::lower_bound(edges.begin(), edges.end(), Edge{a, b});
        return static_cast<std::size_t>(it - edges.begin());
    }

    std::int64_t generator_count() const {
        std::int64_t n = 0;
        for (bool t : in_tree)
            if (!t) ++n;
        return n;
    }
    std::int64_t relation_count() const {
        return static_cast<std::int64_t>(triangle_relations.size()) +
               static_cast<std::int64_t>(edges.size()) - generator_count();
    }
    std::int64_t surviving_generator_count() const {
        std::int64_t n = 0;
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (!in_tree[i] && !trivial[i]) ++n;
        return n;
    }
};

inline Presentation presentation(const ColoredComplex& c, const SpanningTree& t) {
    Presentation p;
    p.edges = detail::all_edges(c);
    p.in_tree.assign(p.edges.size(), false);
    p.trivial.assign(p.edges.size(), false);
    for (const auto& [a, b] : t.edges) {
        const std::size_t idx = p.edge_index(a, b);
        p.in_tree[idx] = true;
        p.trivial[idx] = true;
    }
    for (const Simplex& tri : c.faces(2)) {
        p.triangle_relations.push_back(
            {static_cast<std::int32_t>(p.edge_index(tri[0], tri[1])),
             static_cast<std::int32_t>(p.edge_index(tri[1], tri[2])),
             static_cast<std::int32_t>(p.edge_index(tri[0], tri[2]))});
    }
    return p;
}

namespace detail {

/// apex[edge] = vertices w such that w joined with the edge is a 2-face
inline std::vector<std::vector<VertexId>> apex_map(const ColoredComplex& c,
                                                   const Presentation& p) {
    std::vector<std::vector<VertexId>> apex(p.edges.size());
    for (const Simplex& tri : c.faces(2)) {
        apex[p.edge_index(tri[0], tri[1])].push_back(tri[2]);
        apex[p.edge_index(tri[1], tri[2])].push_back(tri[0]);
        apex[p.edge_index(tri[0], tri[2])].push_back(tri[1]);
    }
    for (auto& v : apex) std::sort(v.begin(), v.end());
    return apex;
}

struct TreePaths {
    std::vector<VertexId> parent;
    std::vector<int> depth;

    /// Edges of the unique tree path between u and v.
    std::vector<Edge> path_edges(VertexId u, VertexId v) const {
        std::vector<Edge> out;
        auto up = [&](VertexId& x) {
            const VertexId px = parent[static_cast<std::size_t>(x)];
            out.emplace_back(std::min(x, px), std::max(x, px));
            x = px;
        };
        while (depth[static_cast<std::size_t>(u)] > depth[static_cast<std::size_t>(v)]) up(u);
        while (depth[static_cast<std::size_t>(v)] > depth[static_cast<std::size_t>(u)]) up(v);
        while (u != v) {
            up(u);
            up(v);
        }
        return out;
    }
};

inline TreePaths tree_paths(int n, const SpanningTree& t) {
    std::vector<std::vector<VertexId>> adj(static_cast<std::size_t>(n));
    for (const auto& [a, b] : t.edges) {
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
    }
    TreePaths tp;
    tp.parent.assign(static_cast<std::size_t>(n), -1);
    tp.depth.assign(static_cast<std::size_t>(n), 0);
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::deque<VertexId> queue{0};
    if (n > 0) {
        seen[0] = true;
        tp.parent[0] = 0;
    }
    while (!queue.empty()) {
        const VertexId v = queue.front();
        queue.pop_front();
        for (VertexId w : adj[static_cast<std::size_t>(v)]) {
            if (seen[static_cast<std::size_t>(w)]) continue;
            seen[static_cast<std::size_t>(w)] = true;
            tp.parent[static_cast<std::size_t>(w)] = v;
            tp.depth[static_cast<std::size_t>(w)] =
                tp.depth[static_cast<std::size_t>(v)] + 1;
            queue.push_back(w);
        }
    }
    return tp;
}

}  // namespace detail

/// For each non-tree edge e, the unique cycle in T + e is tested for
/// containment in a vertex link; containment proves the class of e trivial.
inline Presentation link_trivialize(const ColoredComplex& c, const SpanningTree& t,
                                    Presentation p) {
    const auto apex = detail::apex_map(c, p);
    const auto tp = detail::tree_paths(c.vertex_count(), t);

    for (std::size_t i = 0; i < p.edges.size(); ++i) {
        if (p.in_tree[i] || p.trivial[i]) continue;
        std::vector<Edge> cycle = tp.path_edges(p.edges[i].first, p.edges[i].second);
        cycle.push_back(p.edges[i]);

        std::vector<VertexId> candidates = apex[i];
        for (const Edge& e : cycle) {
            if (candidates.empty()) break;
            const auto& next = apex[p.edge_index(e.first, e.second)];
            std::vector<VertexId> merged;
            std::set_intersection(candidates.begin(), candidates.end(), next.begin(),
                                  next.end(), std::back_inserter(merged));
            candidates = std::move(merged);
        }
        if (!candidates.empty()) p.trivial[i] = true;
    }
    return p;
}

/// Marks a generator trivial whenever it is the only unknown letter of a
/// relation, sweeping until stable or the pass budget runs out.
inline std::size_t propagate_triviality(Presentation& p, int max_passes = 10) {
    std::size_t flipped = 0;
    for (int pass = 0; pass < max_passes; ++pass) {
        bool changed = false;
        for (const auto& rel : p.triangle_relations) {
            int unknown = -1;
            int unknown_count = 0;
            for (int k = 0; k < 3; ++k)
                if (!p.trivial[static_cast<std::size_t>(rel[static_cast<std::size_t>(k)])]) {
                    unknown = rel[static_cast<std::size_t>(k)];
                    ++unknown_count;
                }
            if (unknown_count == 1) {
                p.trivial[static_cast<std::size_t>(unknown)] = true;
                changed = true;
                ++flipped;
            }
        }
        if (!changed) break;
    }
    return flipped;
}

/// Reduction summary for one color pair.
struct PairRankReport {
    int p = 0, q = 0;
    std::int64_t generators = 0;             // non-tree edges of Delta_S
    std::int64_t trivialized_by_links = 0;   // among those, via link containment
    std::int64_t surviving = 0;              // after full propagation
    bool subgraph_in_one_link = false;       // Delta_S inside some lk(u)

    /// f_{pq} - f_p - f_q + 1 - trivialized, the raw link-containment bound.
    std::int64_t link_bound() const { return generators - trivialized_by_links; }
};

struct RankBounds {
    std::int64_t generators_before = 0;  // f_1 - f_0 + 1
    std::int64_t lower = 0;              // minimal generators of H_1
    std::int64_t upper = 0;              // surviving generators, best route
    std::int64_t trivialized_by_links = 0;
    std::int64_t surviving_global = 0;
    std::optional<PairRankReport> pair;
    bool simply_connected_witness = false;
};

namespace detail {

/// Vertices u with the whole two-color subgraph inside lk(u), if any.
inline bool subgraph_in_one_link(const ColoredComplex& c, const Presentation& p,
                                 const std::vector<std::vector<VertexId>>& apex,
                                 ColorSet mask) {
    std::vector<VertexId> candidates;
    bool first = true;
    for (std::size_t i = 0; i < p.edges.size(); ++i) {
        const ColorSet m = (ColorSet{1} << c.color(p.edges[i].first)) |
                           (ColorSet{1} << c.color(p.edges[i].second));
        if (m & ~mask) continue;
        if (first) {
            candidates = apex[i];
            first = false;
        } else {
            std::vector<VertexId> merged;
            std::set_intersection(candidates.begin(), candidates.end(), apex[i].begin(),
                                  apex[i].end(), std::back_inserter(merged));
            candidates = std::move(merged);
        }
        if (candidates.empty()) return false;
    }
    return !first && !candidates.empty();
}

}  // namespace detail

/// Lower bound: minimal generator count of the abelianized group, from the
/// integer normal form of the triangle relation matrix. Upper bound: the
/// presentation's surviving generators after link trivialization and
/// propagation; on balanced normal pseudomanifolds the two-color edge classes
/// generate the whole group, so each color pair's survivor count bounds the
/// rank as well and the smallest route wins.
inline RankBounds rank_bounds(const ColoredComplex& c,
                              std::optional<std::pair<int, int>> s = {}) {
    const SpanningTree tree = spanning_tree(c, s);
    Presentation pres = presentation(c, tree);
    const auto apex = detail::apex_map(c, pres);

    std::vector<bool> tree_only = pres.trivial;
    pres = link_trivialize(c, tree, std::move(pres));

    RankBounds out;
    out.generators_before = pres.generator_count();
    for (std::size_t i = 0; i < pres.edges.size(); ++i)
        if (pres.trivial[i] && !tree_only[i]) ++out.trivialized_by_links;

    std::vector<bool> after_links = pres.trivial;
    propagate_triviality(pres);
    out.surviving_global = pres.surviving_generator_count();
    out.upper = out.surviving_global;

    // abelianized relation matrix over the non-tree generators
    {
        std::vector<std::int64_t> column(pres.edges.size(), -1);
        std::int64_t next = 0;
        for (std::size_t i = 0; i < pres.edges.size(); ++i)
            if (!pres.in_tree[i]) column[i] = next++;
        BigMatrix rel;
        rel.reserve(pres.triangle_relations.size());
        for (const auto& tri : pres.triangle_relations) {
            std::vector<BigInt> row(static_cast<std::size_t>(next), 0);
            const std::int64_t c01 = column[static_cast<std::size_t>(tri[0])];
            const std::int64_t c12 = column[static_cast<std::size_t>(tri[1])];
            const std::int64_t c02 = column[static_cast<std::size_t>(tri[2])];
            if (c01 >= 0) row[static_cast<std::size_t>(c01)] += 1;
            if (c12 >= 0) row[static_cast<std::size_t>(c12)] += 1;
            if (c02 >= 0) row[static_cast<std::size_t>(c02)] -= 1;
            rel.push_back(std::move(row));
        }
        out.lower = cokernel(rel, static_cast<std::size_t>(next)).minimal_generators();
    }

    const bool pm = c.validation().balanced_normal_pseudomanifold();
    auto pair_survivors = [&](ColorSet mask, PairRankReport& rep) {
        for (std::size_t i = 0; i < pres.edges.size(); ++i) {
            if (pres.in_tree[i]) continue;
            const ColorSet m = (ColorSet{1} << c.color(pres.edges[i].first)) |
                               (ColorSet{1} << c.color(pres.edges[i].second));
            if (m & ~mask) continue;
            ++rep.generators;
            if (after_links[i] && !tree_only[i]) ++rep.trivialized_by_links;
            if (!pres.trivial[i]) ++rep.surviving;
        }
        rep.subgraph_in_one_link = detail::subgraph_in_one_link(c, pres, apex, mask);
    };

    if (s) {
        PairRankReport rep;
        rep.p = s->first;
        rep.q = s->second;
        pair_survivors(color_mask({s->first, s->second}), rep);
        if (pm && c.dimension() >= 2) {
            out.upper = std::min(out.upper, rep.surviving);
            if (rep.subgraph_in_one_link) {
                out.upper = 0;
                out.simply_connected_witness = true;
            }
        }
        out.pair = rep;
    } else if (pm && c.dimension() >= 2) {
        for (int p = 0; p <= c.dimension(); ++p)
            for (int q = p + 1; q <= c.dimension(); ++q) {
                PairRankReport rep;
                rep.p = p;
                rep.q = q;
                pair_survivors(color_mask({p, q}), rep);
                out.upper = std::min(out.upper, rep.surviving);
                if (rep.subgraph_in_one_link) {
                    out.upper = 0;
                    out.simply_connected_witness = true;
                }
            }
    }

    if (out.lower > out.upper)
        fail("CrossCheckFailed", "rank lower bound " + std::to_string(out.lower) +
                                     " exceeds upper bound " + std::to_string(out.upper));
    return out;
}

}  // namespace balgen
