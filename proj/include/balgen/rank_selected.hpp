#pragma once

#include <bit>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "balgen/complex.hpp"
#include "balgen/flags.hpp"

namespace balgen {

/// The subcomplex of faces whose colors lie in S, kept in parent vertex ids
/// alongside a standalone densified copy.
struct RankSelected {
    const ColoredComplex* parent;
    ColorSet colors;
    std::vector<Simplex> top_faces;  // facet restrictions, parent ids
    ColoredComplex subcomplex;       // reindexed, colors densified

    std::vector<VertexId> vertices;                      // parent ids
    std::vector<std::pair<VertexId, VertexId>> edges;    // parent ids, lo < hi

    std::int64_t degree_of(VertexId v) const {
        std::int64_t deg = 0;
        for (const auto& [a, b] : edges)
            if (a == v || b == v) ++deg;
        return deg;
    }

    /// Non-increasing vertex degree sequence of the 1-skeleton.
    std::vector<std::int64_t> degree_sequence() const {
        std::vector<std::int64_t> out;
        out.reserve(vertices.size());
        for (VertexId v : vertices) out.push_back(degree_of(v));
        std::sort(out.rbegin(), out.rend());
        return out;
    }
};

inline RankSelected restrict_complex(const ColoredComplex& c, ColorSet s) {
    check_colors_in_range(c, s);
    std::vector<Simplex> tops;
    for (const Simplex& f : c.facets()) {
        std::vector<VertexId> keep;
        for (VertexId v : f)
            if (s & (ColorSet{1} << c.color(v))) keep.push_back(v);
        tops.push_back(Simplex::from_sorted(std::move(keep)));
    }
    std::sort(tops.begin(), tops.end());
    tops.erase(std::unique(tops.begin(), tops.end()), tops.end());

    std::vector<VertexId> verts;
    for (const Simplex& f : c.faces(0))
        if (s & (ColorSet{1} << c.color(f[0]))) verts.push_back(f[0]);

    std::vector<std::pair<VertexId, VertexId>> edges;
    for (const Simplex& e : c.faces(1)) {
        const ColorSet m = (ColorSet{1} << c.color(e[0])) | (ColorSet{1} << c.color(e[1]));
        if ((m & ~s) == 0) edges.emplace_back(e[0], e[1]);
    }

    return RankSelected{&c, s, tops, reindex_fragment(c, tops), std::move(verts),
                        std::move(edges)};
}

/// Chain connectivity of the top faces of Delta_S: adjacency means sharing a
/// face of codimension one inside Delta_S.
inline bool strongly_connected(const ColoredComplex& c, ColorSet s) {
    if (std::popcount(s) < 2)
        fail("BadArity", "strong connectivity needs |S| >= 2, got " + mask_string(s));
    RankSelected rs = restrict_complex(c, s);
    const auto& tops = rs.top_faces;
    if (tops.size() <= 1) return true;
    const int top_dim = tops.front().dim();
    detail::UnionFind uf(tops.size());
    for (std::size_t i = 0; i < tops.size(); ++i)
        for (std::size_t j = i + 1; j < tops.size(); ++j)
            if (tops[i].intersect(tops[j]).dim() == top_dim - 1)
                uf.unite(static_cast<int>(i), static_cast<int>(j));
    return uf.component_count() == 1;
}

/// Plain undirected simple graph for the cycle scans; raw fixtures use it too.
struct GraphView {
    std::vector<std::vector<int>> adj;

    int vertex_count() const { return static_cast<int>(adj.size()); }
    std::int64_t degree(int v) const {
        return static_cast<std::int64_t>(adj[static_cast<std::size_t>(v)].size());
    }

    static GraphView from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        GraphView g;
        g.adj.resize(static_cast<std::size_t>(n));
        for (const auto& [a, b] : edges) {
            g.adj[static_cast<std::size_t>(a)].push_back(b);
            g.adj[static_cast<std::size_t>(b)].push_back(a);
        }
        for (auto& nbrs : g.adj) std::sort(nbrs.begin(), nbrs.end());
        return g;
    }
};

/// All cycles with exactly one vertex of degree > 2 (every other vertex of
/// ambient degree exactly 2). Such a cycle minus its hub is a chain of forced
/// degree-2 steps, so walking chains from each high-degree vertex finds every
/// witness; no search is needed.
inline std::vector<std::vector<int>> almost_induced_cycles(const GraphView& g) {
    std::vector<std::vector<int>> out;
    std::set<std::vector<int>> seen;  // keyed by sorted vertex set
    for (int h = 0; h < g.vertex_count(); ++h) {
        if (g.degree(h) <= 2) continue;
        for (int start : g.adj[static_cast<std::size_t>(h)]) {
            if (g.degree(start) != 2) continue;
            std::vector<int> path{h, start};
            int prev = h, cur = start;
            while (g.degree(cur) == 2) {
                const auto& nbrs = g.adj[static_cast<std::size_t>(cur)];
                const int next = nbrs[0] == prev ? nbrs[1] : nbrs[0];
                if (next == h) break;
                path.push_back(next);
                prev = cur;
                cur = next;
            }
            if (g.degree(cur) == 2) {  // walk closed back into the hub
                std::vector<int> key = path;
                std::sort(key.begin(), key.end());
                if (seen.insert(key).second) out.push_back(path);
            }
        }
    }
    return out;
}

/// Witness cycles in Delta_S, reported in parent vertex ids.
inline std::vector<std::vector<VertexId>> almost_induced_scan(const ColoredComplex& c,
                                                              ColorSet s) {
    if (std::popcount(s) != 2)
        fail("BadArity", "almost-induced scan needs |S| = 2, got " + mask_string(s));
    RankSelected rs = restrict_complex(c, s);
    std::map<VertexId, int> index;
    for (std::size_t i = 0; i < rs.vertices.size(); ++i)
        index[rs.vertices[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(rs.edges.size());
    for (const auto& [a, b] : rs.edges) edges.emplace_back(index[a], index[b]);
    GraphView g = GraphView::from_edges(static_cast<int>(rs.vertices.size()), edges);
    std::vector<std::vector<VertexId>> out;
    for (const auto& cyc : almost_induced_cycles(g)) {
        std::vector<VertexId> mapped;
        mapped.reserve(cyc.size());
        for (int v : cyc) mapped.push_back(rs.vertices[static_cast<std::size_t>(v)]);
        out.push_back(std::move(mapped));
    }
    return out;
}

/// Certified factorization Delta = Delta_{[d]\S} * Delta_S for Gamma_S = 0.
struct JoinCertificate {
    RankSelected complement;  // Delta_{[d]\S}
    RankSelected cycle;       // Delta_S, a single cycle
};

/// Checks that Delta_S is one cycle, that the link of every top face of the
/// complementary rank selection equals Delta_S, and that the facet sets of
/// Delta and of the join of the two factors coincide. Returns the factors on
/// success, nothing if any check refutes.
inline std::optional<JoinCertificate> join_decomposition(const ColoredComplex& c, ColorSet s) {
    if (std::popcount(s) != 2)
        fail("BadArity", "join decomposition needs |S| = 2, got " + mask_string(s));
    require_balanced_normal(c, "join_decomposition");
    if (gamma(c, s).value != 0)
        fail("PreconditionFailed", "join_decomposition needs Gamma_S = 0, got " +
                                       std::to_string(gamma(c, s).value));

    RankSelected cyc = restrict_complex(c, s);
    RankSelected comp = restrict_complex(c, full_mask(c.dimension()) & ~s);

    // single cycle: connected with every degree 2
    for (VertexId v : cyc.vertices)
        if (cyc.degree_of(v) != 2) return std::nullopt;
    {
        std::map<VertexId, int> index;
        for (std::size_t i = 0; i < cyc.vertices.size(); ++i)
            index[cyc.vertices[i]] = static_cast<int>(i);
        detail::UnionFind uf(cyc.vertices.size());
        for (const auto& [a, b] : cyc.edges) uf.unite(index[a], index[b]);
        if (uf.component_count() != 1) return std::nullopt;
    }

    std::vector<Simplex> cycle_edges;
    cycle_edges.reserve(cyc.edges.size());
    for (const auto& [a, b] : cyc.edges)
        cycle_edges.push_back(Simplex::from_sorted({a, b}));
    std::sort(cycle_edges.begin(), cycle_edges.end());

    for (const Simplex& tau : comp.top_faces)
        if (link_facets(c, tau) != cycle_edges) return std::nullopt;

    std::set<Simplex> joined;
    for (const Simplex& a : comp.top_faces)
        for (const Simplex& e : cycle_edges) joined.insert(a.unite(e));
    std::set<Simplex> actual(c.facets().begin(), c.facets().end());
    if (joined != actual) return std::nullopt;

    return JoinCertificate{std::move(comp), std::move(cyc)};
}

}  // namespace balgen
