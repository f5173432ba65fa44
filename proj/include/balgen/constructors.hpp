#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "balgen/complex.hpp"

namespace balgen {

using FacetHandle = std::size_t;

/// The join of the boundaries of d+1 segments: 2(d+1) vertices a_i, b_i with
/// color(a_i) = color(b_i) = i and all 2^(d+1) transversal facets.
inline ColoredComplex octahedral_sphere(int d) {
    if (d < 1) fail("UnsupportedDimension", "octahedral sphere needs dimension >= 1");
    if (d > 15) fail("UnsupportedDimension", "refusing to build 2^" + std::to_string(d + 1) +
                                                 " facets");
    std::map<std::string, int> coloring;
    for (int i = 0; i <= d; ++i) {
        coloring["a" + std::to_string(i)] = i;
        coloring["b" + std::to_string(i)] = i;
    }
    std::vector<std::vector<std::string>> facets;
    facets.reserve(std::size_t{1} << (d + 1));
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (d + 1)); ++bits) {
        std::vector<std::string> f;
        f.reserve(static_cast<std::size_t>(d) + 1);
        for (int i = 0; i <= d; ++i)
            f.push_back(((bits >> i) & 1 ? "b" : "a") + std::to_string(i));
        facets.push_back(std::move(f));
    }
    return build_complex(facets, coloring);
}

namespace detail {

inline std::string fresh_label(std::string lab, const std::set<std::string>& taken) {
    while (taken.count(lab)) lab += "'";
    return lab;
}

}  // namespace detail

/// Join of two complexes on disjoint vertex sets. Colors of the second factor
/// are shifted by d1+1; its labels are suffixed where they would collide.
inline ColoredComplex join(const ColoredComplex& a, const ColoredComplex& b) {
    const int d1 = a.dimension();
    std::set<std::string> taken(a.labels().begin(), a.labels().end());
    std::vector<std::string> b_names(static_cast<std::size_t>(b.vertex_count()));
    for (VertexId v = 0; v < b.vertex_count(); ++v) {
        b_names[static_cast<std::size_t>(v)] = detail::fresh_label(b.label(v), taken);
        taken.insert(b_names[static_cast<std::size_t>(v)]);
    }

    std::map<std::string, int> coloring;
    for (VertexId v = 0; v < a.vertex_count(); ++v) coloring[a.label(v)] = a.color(v);
    for (VertexId v = 0; v < b.vertex_count(); ++v)
        coloring[b_names[static_cast<std::size_t>(v)]] = b.color(v) + d1 + 1;

    std::vector<std::vector<std::string>> facets;
    facets.reserve(a.facets().size() * b.facets().size());
    for (const Simplex& fa : a.facets())
        for (const Simplex& fb : b.facets()) {
            std::vector<std::string> f;
            f.reserve(fa.size() + fb.size());
            for (VertexId v : fa) f.push_back(a.label(v));
            for (VertexId v : fb) f.push_back(b_names[static_cast<std::size_t>(v)]);
            facets.push_back(std::move(f));
        }
    return build_complex(facets, coloring);
}

/// Balanced connected sum: glue along two rainbow facets by the unique
/// color-preserving bijection, then drop the identified facet. Labels of the
/// first summand survive; colliding labels from the second are suffixed.
inline ColoredComplex connected_sum(const ColoredComplex& a, FacetHandle fa,
                                    const ColoredComplex& b, FacetHandle fb) {
    if (a.dimension() != b.dimension())
        fail("DimensionMismatch", "summands have dimensions " +
                                      std::to_string(a.dimension()) + " and " +
                                      std::to_string(b.dimension()));
    require_balanced_normal(a, "connected_sum");
    require_balanced_normal(b, "connected_sum");
    if (fa >= a.facets().size() || fb >= b.facets().size())
        fail("InvalidHandle", "facet index out of range");

    const Simplex& sa = a.facets()[fa];
    const Simplex& sb = b.facets()[fb];

    // color-preserving bijection sb -> sa (unique: both facets are rainbow)
    std::map<int, VertexId> a_by_color;
    for (VertexId v : sa) a_by_color[a.color(v)] = v;

    std::set<std::string> taken(a.labels().begin(), a.labels().end());
    std::vector<std::string> b_names(static_cast<std::size_t>(b.vertex_count()));
    for (VertexId v = 0; v < b.vertex_count(); ++v) {
        if (sb.contains(v)) {
            b_names[static_cast<std::size_t>(v)] = a.label(a_by_color.at(b.color(v)));
        } else {
            b_names[static_cast<std::size_t>(v)] = detail::fresh_label(b.label(v), taken);
            taken.insert(b_names[static_cast<std::size_t>(v)]);
        }
    }

    std::map<std::string, int> coloring;
    for (VertexId v = 0; v < a.vertex_count(); ++v) coloring[a.label(v)] = a.color(v);
    for (VertexId v = 0; v < b.vertex_count(); ++v)
        coloring[b_names[static_cast<std::size_t>(v)]] = b.color(v);

    std::vector<std::vector<std::string>> facets;
    facets.reserve(a.facets().size() + b.facets().size() - 2);
    for (std::size_t i = 0; i < a.facets().size(); ++i) {
        if (i == fa) continue;
        std::vector<std::string> f;
        for (VertexId v : a.facets()[i]) f.push_back(a.label(v));
        facets.push_back(std::move(f));
    }
    for (std::size_t i = 0; i < b.facets().size(); ++i) {
        if (i == fb) continue;
        std::vector<std::string> f;
        for (VertexId v : b.facets()[i]) f.push_back(b_names[static_cast<std::size_t>(v)]);
        facets.push_back(std::move(f));
    }

    ColoredComplex out = build_complex(facets, coloring);
    require_balanced_normal(out, "connected_sum result");
    return out;
}

}  // namespace balgen
