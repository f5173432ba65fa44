#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "balgen/error.hpp"
#include "balgen/simplex.hpp"

namespace balgen {

struct FlagVectors;  // flags.hpp

/// Outcome of validate(). Failures are recorded with witness faces, never thrown.
struct ValidationReport {
    bool pure = false;
    bool balanced = false;
    bool ridge_condition = false;     // every (d-1)-face in exactly two facets
    bool links_connected = false;     // all faces of codimension >= 2
    bool connected = false;           // 1-skeleton
    bool facet_strongly_connected = false;

    std::vector<Simplex> ridge_witnesses;
    std::vector<Simplex> link_witnesses;
    std::vector<Simplex> facet_witnesses;  // non-rainbow or off-size facets

    bool normal_pseudomanifold() const {
        return pure && ridge_condition && links_connected && connected;
    }
    bool balanced_normal_pseudomanifold() const {
        return normal_pseudomanifold() && balanced;
    }
};

namespace detail {

/// Shared lazy caches. Complex data is immutable, so copies of a complex can
/// share one box; compute-once sections are serialized by the mutex.
struct ComplexCache {
    std::mutex mx;
    std::vector<std::optional<std::vector<Simplex>>> faces_by_dim;  // slot k holds dim k-1
    std::optional<ValidationReport> validation;
    std::shared_ptr<const FlagVectors> flags;
};

}  // namespace detail

/// Pure d-dimensional simplicial complex with a vertex coloring over 0..d.
/// Immutable after construction; all queries are const and thread-safe.
class ColoredComplex {
public:
    ColoredComplex(int dim, std::vector<int> vertex_colors,
                   std::vector<Simplex> facet_list, std::vector<std::string> labels)
        : d_(dim),
          colors_(std::move(vertex_colors)),
          facets_(std::move(facet_list)),
          labels_(std::move(labels)),
          cache_(std::make_shared<detail::ComplexCache>()) {
        std::sort(facets_.begin(), facets_.end());
        cache_->faces_by_dim.resize(static_cast<std::size_t>(d_ < -1 ? 0 : d_ + 2));
    }

    int dimension() const { return d_; }
    std::int64_t facet_count() const { return static_cast<std::int64_t>(facets_.size()); }
    const std::vector<Simplex>& facets() const { return facets_; }
    int vertex_count() const { return static_cast<int>(colors_.size()); }
    int color(VertexId v) const { return colors_[static_cast<std::size_t>(v)]; }
    const std::vector<int>& vertex_colors() const { return colors_; }
    const std::string& label(VertexId v) const { return labels_[static_cast<std::size_t>(v)]; }
    const std::vector<std::string>& labels() const { return labels_; }

    std::string face_string(const Simplex& s) const {
        std::string out = "{";
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (i) out += ",";
            out += label(s[i]);
        }
        return out + "}";
    }

    /// All faces of dimension k (k in -1..d), sorted. Built on first use.
    const std::vector<Simplex>& faces(int k) const {
        static const std::vector<Simplex> none;
        if (k < -1 || k > d_) return none;
        const auto slot = static_cast<std::size_t>(k + 1);
        std::lock_guard<std::mutex> lock(cache_->mx);
        auto& entry = cache_->faces_by_dim[slot];
        if (!entry) entry = enumerate_faces(k);
        return *entry;
    }

    bool has_face(const Simplex& s) const {
        const auto& level = faces(s.dim());
        return std::binary_search(level.begin(), level.end(), s);
    }

    std::vector<std::size_t> facets_containing(const Simplex& s) const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < facets_.size(); ++i)
            if (facets_[i].contains_all(s)) out.push_back(i);
        return out;
    }

    /// Cached validation report (computed on first request).
    const ValidationReport& validation() const;

    std::shared_ptr<detail::ComplexCache> cache() const { return cache_; }

private:
    std::vector<Simplex> enumerate_faces(int k) const {
        if (k == -1) return {Simplex{}};
        std::vector<Simplex> out;
        std::vector<VertexId> pick(static_cast<std::size_t>(k) + 1);
        for (const Simplex& f : facets_) {
            const int n = static_cast<int>(f.size());
            if (k + 1 > n) continue;
            // index combinations of size k+1 out of the facet's vertices
            std::vector<int> idx(static_cast<std::size_t>(k) + 1);
            for (int i = 0; i <= k; ++i) idx[static_cast<std::size_t>(i)] = i;
            while (true) {
                for (int i = 0; i <= k; ++i)
                    pick[static_cast<std::size_t>(i)] = f[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
                out.push_back(Simplex::from_sorted(pick));
                int j = k;
                while (j >= 0 && idx[static_cast<std::size_t>(j)] == n - (k + 1 - j)) --j;
                if (j < 0) break;
                ++idx[static_cast<std::size_t>(j)];
                for (int t = j + 1; t <= k; ++t)
                    idx[static_cast<std::size_t>(t)] = idx[static_cast<std::size_t>(t - 1)] + 1;
            }
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    int d_;
    std::vector<int> colors_;
    std::vector<Simplex> facets_;
    std::vector<std::string> labels_;
    std::shared_ptr<detail::ComplexCache> cache_;
};

namespace detail {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[static_cast<std::size_t>(a)] = b;
        return true;
    }
    std::int64_t component_count() {
        std::int64_t c = 0;
        for (std::size_t i = 0; i < parent.size(); ++i)
            if (find(static_cast<int>(i)) == static_cast<int>(i)) ++c;
        return c;
    }
};

/// ridge -> indices of facets containing it
inline std::map<Simplex, std::vector<std::size_t>> ridge_map(const ColoredComplex& c) {
    std::map<Simplex, std::vector<std::size_t>> out;
    const auto& facets = c.facets();
    for (std::size_t i = 0; i < facets.size(); ++i)
        for (VertexId v : facets[i]) out[facets[i].minus(v)].push_back(i);
    return out;
}

}  // namespace detail

/// Low-level constructor from label-keyed facets. Vertex ids are assigned by
/// sorted label order, so equal inputs build byte-identical complexes.
/// min_dim lets internal callers (links) build 0-dimensional fragments.
inline ColoredComplex build_complex(const std::vector<std::vector<std::string>>& facet_labels,
                                    const std::map<std::string, int>& coloring,
                                    int min_dim = 1) {
    if (facet_labels.empty()) fail("EmptyInput", "facet list is empty");

    const std::size_t facet_size = facet_labels.front().size();
    for (const auto& f : facet_labels)
        if (f.size() != facet_size)
            fail("NonPure", "facets of differing sizes (" + std::to_string(facet_size) +
                                " vs " + std::to_string(f.size()) + ")");
    const int d = static_cast<int>(facet_size) - 1;
    if (d < min_dim)
        fail("UnsupportedDimension", "dimension " + std::to_string(d) + " below minimum " +
                                         std::to_string(min_dim));
    if (d > 30) fail("UnsupportedDimension", "dimension exceeds 30");

    // dense ids in sorted label order
    std::map<std::string, VertexId> id_of;
    for (const auto& f : facet_labels)
        for (const auto& lab : f) id_of.emplace(lab, 0);
    std::vector<std::string> labels;
    labels.reserve(id_of.size());
    for (auto& [lab, id] : id_of) {
        id = static_cast<VertexId>(labels.size());
        labels.push_back(lab);
    }

    std::vector<int> colors(labels.size(), -1);
    for (const auto& [lab, id] : id_of) {
        auto it = coloring.find(lab);
        if (it == coloring.end()) fail("DanglingLabel", "no color for vertex '" + lab + "'");
        if (it->second < 0 || it->second > d)
            fail("ColorOutOfRange", "color " + std::to_string(it->second) + " of '" + lab +
                                        "' outside 0.." + std::to_string(d));
        colors[static_cast<std::size_t>(id)] = it->second;
    }

    std::vector<Simplex> facets;
    facets.reserve(facet_labels.size());
    for (const auto& f : facet_labels) {
        std::vector<VertexId> verts;
        verts.reserve(f.size());
        std::vector<bool> seen(static_cast<std::size_t>(d) + 1, false);
        for (const auto& lab : f) {
            const VertexId id = id_of.at(lab);
            const auto col = static_cast<std::size_t>(colors[static_cast<std::size_t>(id)]);
            if (seen[col])
                fail("RepeatedColorInFacet", "facet repeats color " + std::to_string(col));
            seen[col] = true;
            verts.push_back(id);
        }
        facets.emplace_back(std::move(verts));
    }

    std::sort(facets.begin(), facets.end());
    if (std::adjacent_find(facets.begin(), facets.end()) != facets.end())
        fail("DuplicateFacet", "facet list contains duplicates");

    return ColoredComplex(d, std::move(colors), std::move(facets), std::move(labels));
}

/// Rebuild a fragment (given by top faces in parent ids) as a standalone
/// complex: vertices reindexed, colors densified onto 0..d' preserving order.
inline ColoredComplex reindex_fragment(const ColoredComplex& parent,
                                       const std::vector<Simplex>& top_faces) {
    if (top_faces.empty() || (top_faces.size() == 1 && top_faces.front().empty())) {
        return ColoredComplex(-1, {}, {Simplex{}}, {});
    }
    std::vector<int> color_set;
    std::vector<std::vector<std::string>> label_facets;
    label_facets.reserve(top_faces.size());
    for (const Simplex& f : top_faces) {
        std::vector<std::string> labs;
        labs.reserve(f.size());
        for (VertexId v : f) {
            labs.push_back(parent.label(v));
            color_set.push_back(parent.color(v));
        }
        label_facets.push_back(std::move(labs));
    }
    std::sort(color_set.begin(), color_set.end());
    color_set.erase(std::unique(color_set.begin(), color_set.end()), color_set.end());
    std::map<std::string, int> coloring;
    for (const Simplex& f : top_faces)
        for (VertexId v : f) {
            const auto pos = std::lower_bound(color_set.begin(), color_set.end(),
                                              parent.color(v)) -
                             color_set.begin();
            coloring[parent.label(v)] = static_cast<int>(pos);
        }
    return build_complex(label_facets, coloring, 0);
}

/// Top faces of lk(s) in parent vertex ids: F \ s over facets F containing s.
inline std::vector<Simplex> link_facets(const ColoredComplex& c, const Simplex& s) {
    if (!c.has_face(s)) fail("FaceNotPresent", "face " + c.face_string(s) + " not in complex");
    std::vector<Simplex> out;
    for (std::size_t i : c.facets_containing(s)) out.push_back(c.facets()[i].minus(s));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// lk(s) as a standalone complex of dimension d - |s| with densified colors.
inline ColoredComplex link(const ColoredComplex& c, const Simplex& s) {
    return reindex_fragment(c, link_facets(c, s));
}

/// st(s): all faces of facets containing s, returned as the complex they generate.
inline ColoredComplex star(const ColoredComplex& c, const Simplex& s) {
    if (!c.has_face(s)) fail("FaceNotPresent", "face " + c.face_string(s) + " not in complex");
    std::vector<Simplex> tops;
    for (std::size_t i : c.facets_containing(s)) tops.push_back(c.facets()[i]);
    return reindex_fragment(c, tops);
}

/// Number of vertices in lk(s).
inline std::int64_t degree(const ColoredComplex& c, const Simplex& s) {
    std::vector<VertexId> verts;
    for (const Simplex& f : link_facets(c, s))
        verts.insert(verts.end(), f.begin(), f.end());
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    return static_cast<std::int64_t>(verts.size());
}

inline ValidationReport validate(const ColoredComplex& c) {
    ValidationReport r;
    const int d = c.dimension();
    const auto& facets = c.facets();

    r.pure = true;
    for (const Simplex& f : facets)
        if (f.dim() != d) {
            r.pure = false;
            r.facet_witnesses.push_back(f);
        }

    r.balanced = true;
    for (const Simplex& f : facets) {
        std::vector<bool> seen(static_cast<std::size_t>(d < 0 ? 0 : d) + 1, false);
        bool rainbow = f.dim() == d;
        for (VertexId v : f) {
            const int col = c.color(v);
            if (col < 0 || col > d || seen[static_cast<std::size_t>(col)]) {
                rainbow = false;
                break;
            }
            seen[static_cast<std::size_t>(col)] = true;
        }
        if (!rainbow) {
            r.balanced = false;
            r.facet_witnesses.push_back(f);
        }
    }

    auto ridges = detail::ridge_map(c);
    r.ridge_condition = d >= 1;
    if (d >= 1) {
        for (const auto& [ridge, members] : ridges)
            if (members.size() != 2) {
                r.ridge_condition = false;
                r.ridge_witnesses.push_back(ridge);
            }
    }

    // links of faces of codimension >= 2 (0 <= dim <= d-2)
    r.links_connected = true;
    for (int k = 0; k <= d - 2; ++k) {
        for (const Simplex& s : c.faces(k)) {
            std::map<VertexId, int> index;
            std::vector<Simplex> tops;
            for (std::size_t i : c.facets_containing(s)) {
                Simplex rest = facets[i].minus(s);
                for (VertexId v : rest) index.emplace(v, 0);
                tops.push_back(std::move(rest));
            }
            int next = 0;
            for (auto& [v, idx] : index) idx = next++;
            detail::UnionFind uf(index.size());
            for (const Simplex& t : tops)
                for (std::size_t i = 1; i < t.size(); ++i)
                    uf.unite(index[t[0]], index[t[i]]);
            if (!index.empty() && uf.component_count() != 1) {
                r.links_connected = false;
                r.link_witnesses.push_back(s);
            }
        }
    }

    // 1-skeleton connectivity
    {
        detail::UnionFind uf(static_cast<std::size_t>(c.vertex_count()));
        for (const Simplex& f : facets)
            for (std::size_t i = 1; i < f.size(); ++i) uf.unite(f[0], f[i]);
        r.connected = c.vertex_count() == 0 || uf.component_count() == 1;
    }

    // facet chains through ridges
    {
        detail::UnionFind uf(facets.size());
        for (const auto& [ridge, members] : ridges)
            for (std::size_t i = 1; i < members.size(); ++i)
                uf.unite(static_cast<int>(members[0]), static_cast<int>(members[i]));
        r.facet_strongly_connected = facets.empty() || uf.component_count() == 1;
    }

    return r;
}

inline const ValidationReport& ColoredComplex::validation() const {
    {
        std::lock_guard<std::mutex> lock(cache_->mx);
        if (cache_->validation) return *cache_->validation;
    }
    // computed without the lock (validate() re-enters faces()); a racing
    // thread computes the same value, first store wins
    ValidationReport r = validate(*this);
    std::lock_guard<std::mutex> lock(cache_->mx);
    if (!cache_->validation) cache_->validation = std::move(r);
    return *cache_->validation;
}

/// Throws PreconditionFailed unless the complex is a validated balanced
/// normal pseudomanifold.
inline void require_balanced_normal(const ColoredComplex& c, const std::string& who) {
    const ValidationReport& r = c.validation();
    if (!r.balanced_normal_pseudomanifold()) {
        std::string what = who + " requires a balanced normal pseudomanifold; failing:";
        if (!r.pure) what += " pure";
        if (!r.balanced) what += " balanced";
        if (!r.ridge_condition) what += " ridge_condition";
        if (!r.links_connected) what += " links_connected";
        if (!r.connected) what += " connected";
        fail("PreconditionFailed", what);
    }
}

}  // namespace balgen
