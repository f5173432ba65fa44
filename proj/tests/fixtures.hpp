#pragma once

#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "balgen/complex.hpp"
#include "balgen/constructors.hpp"
#include "balgen/edge_path.hpp"

namespace fixtures {

using balgen::ColoredComplex;
using balgen::Simplex;
using balgen::VertexId;

// ---------------------------------------------------------------- fixtures

/// 6-cycle with alternating colors; dimension 1, first homology Z.
inline ColoredComplex hexagon() {
    std::vector<std::vector<std::string>> facets;
    std::map<std::string, int> colors;
    for (int i = 0; i < 6; ++i) {
        facets.push_back({"u" + std::to_string(i), "u" + std::to_string((i + 1) % 6)});
        colors["u" + std::to_string(i)] = i % 2;
    }
    return balgen::build_complex(facets, colors);
}

/// 9-vertex balanced torus: vertices (i,j) over Z3 x Z3, colored by (i - j) mod 3.
inline ColoredComplex torus9() {
    auto name = [](int i, int j) {
        return "v" + std::to_string(i) + std::to_string(j);
    };
    std::vector<std::vector<std::string>> facets;
    std::map<std::string, int> colors;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            colors[name(i, j)] = ((i - j) % 3 + 3) % 3;
            const int i1 = (i + 1) % 3, j1 = (j + 1) % 3;
            facets.push_back({name(i, j), name(i1, j), name(i, j1)});
            facets.push_back({name(i1, j), name(i, j1), name(i1, j1)});
        }
    return balgen::build_complex(facets, colors);
}

/// Suspension of the 9-vertex torus: two apexes of a fourth color. A valid
/// balanced normal 3-pseudomanifold that is not a manifold (the apex links
/// are tori).
inline ColoredComplex suspended_torus() {
    const ColoredComplex t = torus9();
    std::vector<std::vector<std::string>> facets;
    std::map<std::string, int> colors;
    for (VertexId v = 0; v < t.vertex_count(); ++v) colors[t.label(v)] = t.color(v);
    colors["north"] = 3;
    colors["south"] = 3;
    for (const Simplex& f : t.facets())
        for (const std::string& apex : {std::string("north"), std::string("south")}) {
            std::vector<std::string> labs{apex};
            for (VertexId v : f) labs.push_back(t.label(v));
            facets.push_back(std::move(labs));
        }
    return balgen::build_complex(facets, colors);
}

/// Two tetrahedra glued along one triangle: a 3-ball, six boundary ridges.
inline ColoredComplex two_tetrahedra() {
    return balgen::build_complex({{"p", "x", "y", "z"}, {"q", "x", "y", "z"}},
                                 {{"p", 0}, {"q", 0}, {"x", 1}, {"y", 2}, {"z", 3}});
}

/// Two triangles sharing a single vertex (colors matched); not a pseudomanifold.
inline ColoredComplex two_triangles_at_vertex() {
    return balgen::build_complex(
        {{"c", "a1", "b1"}, {"c", "a2", "b2"}},
        {{"c", 2}, {"a1", 0}, {"b1", 1}, {"a2", 0}, {"b2", 1}});
}

/// One filled triangle; simply connected.
inline ColoredComplex filled_triangle() {
    return balgen::build_complex({{"x", "y", "z"}}, {{"x", 0}, {"y", 1}, {"z", 2}});
}

/// Two octahedral 3-spheres sharing one vertex. Ridge condition holds but the
/// link of the shared vertex is two disjoint 2-spheres.
inline ColoredComplex spheres_glued_at_vertex() {
    const ColoredComplex o3 = balgen::octahedral_sphere(3);
    std::vector<std::vector<std::string>> facets;
    std::map<std::string, int> colors;
    for (int copy = 0; copy < 2; ++copy) {
        const std::string suffix = copy == 0 ? "" : "'";
        for (VertexId v = 0; v < o3.vertex_count(); ++v) {
            const std::string lab = o3.label(v) == "a0" ? "a0" : o3.label(v) + suffix;
            colors[lab] = o3.color(v);
        }
        for (const Simplex& f : o3.facets()) {
            std::vector<std::string> labs;
            for (VertexId v : f)
                labs.push_back(o3.label(v) == "a0" ? "a0" : o3.label(v) + suffix);
            facets.push_back(std::move(labs));
        }
    }
    return balgen::build_complex(facets, colors);
}

// ----------------------------------------------------------------- oracles

/// Brute-force face enumeration straight from the facet label lists; fully
/// independent of the library's lazy face index.
inline std::map<int, std::set<std::vector<std::string>>> oracle_faces(const ColoredComplex& c) {
    std::map<int, std::set<std::vector<std::string>>> by_dim;
    by_dim[-1].insert(std::vector<std::string>{});
    for (const Simplex& f : c.facets()) {
        std::vector<std::string> labs;
        for (VertexId v : f) labs.push_back(c.label(v));
        std::sort(labs.begin(), labs.end());
        const std::size_t n = labs.size();
        for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
            std::vector<std::string> sub;
            for (std::size_t i = 0; i < n; ++i)
                if ((bits >> i) & 1) sub.push_back(labs[i]);
            by_dim[static_cast<int>(sub.size()) - 1].insert(sub);
        }
    }
    return by_dim;
}

inline std::int64_t oracle_face_count(const ColoredComplex& c, int dim) {
    auto faces = oracle_faces(c);
    auto it = faces.find(dim);
    return it == faces.end() ? 0 : static_cast<std::int64_t>(it->second.size());
}

/// Count faces whose color set is exactly the given set.
inline std::int64_t oracle_flag_f(const ColoredComplex& c, const std::set<int>& colors) {
    if (colors.empty()) return 1;
    std::int64_t count = 0;
    for (const auto& [dim, faces] : oracle_faces(c)) {
        if (dim != static_cast<int>(colors.size()) - 1) continue;
        for (const auto& face : faces) {
            std::set<int> got;
            for (const auto& lab : face) {
                for (VertexId v = 0; v < c.vertex_count(); ++v)
                    if (c.label(v) == lab) got.insert(c.color(v));
            }
            if (got == colors) ++count;
        }
    }
    return count;
}

/// Cofacet scan: the link of a face, as sorted label lists of its top faces.
inline std::set<std::vector<std::string>> oracle_link_tops(const ColoredComplex& c,
                                                           const std::vector<std::string>& face) {
    std::set<std::vector<std::string>> out;
    const std::set<std::string> fs(face.begin(), face.end());
    for (const Simplex& f : c.facets()) {
        std::set<std::string> labs;
        for (VertexId v : f) labs.insert(c.label(v));
        bool contains = true;
        for (const auto& lab : fs) contains = contains && labs.count(lab) > 0;
        if (!contains) continue;
        std::vector<std::string> rest;
        for (const auto& lab : labs)
            if (!fs.count(lab)) rest.push_back(lab);
        out.insert(rest);
    }
    return out;
}

// ------------------------------------------------------------------ corpus

/// Deterministic pseudo-random pick (distribution-free for cross-platform
/// reproducibility).
inline std::size_t pick(std::mt19937& rng, std::size_t n) {
    return static_cast<std::size_t>(rng() % n);
}

/// Iterated balanced connected sum of octahedral spheres with random facet
/// choices.
inline ColoredComplex random_iterated_sum(std::mt19937& rng, int dim, int summands) {
    ColoredComplex acc = balgen::octahedral_sphere(dim);
    for (int i = 1; i < summands; ++i) {
        const ColoredComplex next = balgen::octahedral_sphere(dim);
        const std::size_t fa = pick(rng, acc.facets().size());
        const std::size_t fb = pick(rng, next.facets().size());
        acc = balgen::connected_sum(acc, fa, next, fb);
    }
    return acc;
}

/// Random spanning tree (shuffled Kruskal) for tree-independence properties.
inline balgen::SpanningTree random_spanning_tree(const ColoredComplex& c, std::mt19937& rng) {
    std::vector<balgen::Edge> edges;
    for (const Simplex& e : c.faces(1)) edges.emplace_back(e[0], e[1]);
    for (std::size_t i = edges.size(); i > 1; --i)
        std::swap(edges[i - 1], edges[pick(rng, i)]);
    balgen::detail::UnionFind uf(static_cast<std::size_t>(c.vertex_count()));
    balgen::SpanningTree t;
    for (const auto& [a, b] : edges)
        if (uf.unite(a, b)) t.edges.emplace_back(a, b);
    std::sort(t.edges.begin(), t.edges.end());
    return t;
}

}  // namespace fixtures
