#pragma once

#include <algorithm>
#include <cassert>
#include <compare>
#include <cstdint>
#include <vector>

namespace balgen {

using VertexId = std::int32_t;

/// A face: strictly increasing list of vertex indices. The empty simplex
/// (dimension -1) is a valid value and belongs to every complex.
class Simplex {
public:
    Simplex() = default;

    explicit Simplex(std::vector<VertexId> verts) : v_(std::move(verts)) {
        std::sort(v_.begin(), v_.end());
        assert(std::adjacent_find(v_.begin(), v_.end()) == v_.end());
    }

    int dim() const { return static_cast<int>(v_.size()) - 1; }
    std::size_t size() const { return v_.size(); }
    bool empty() const { return v_.empty(); }
    VertexId operator[](std::size_t i) const { return v_[i]; }

    auto begin() const { return v_.begin(); }
    auto end() const { return v_.end(); }
    const std::vector<VertexId>& verts() const { return v_; }

    bool contains(VertexId v) const {
        return std::binary_search(v_.begin(), v_.end(), v);
    }

    /// True iff other is a subset of this face.
    bool contains_all(const Simplex& other) const {
        return std::includes(v_.begin(), v_.end(), other.v_.begin(), other.v_.end());
    }

    Simplex minus(VertexId v) const {
        std::vector<VertexId> out;
        out.reserve(v_.size());
        for (VertexId x : v_)
            if (x != v) out.push_back(x);
        return from_sorted(std::move(out));
    }

    Simplex minus(const Simplex& other) const {
        std::vector<VertexId> out;
        std::set_difference(v_.begin(), v_.end(), other.v_.begin(), other.v_.end(),
                            std::back_inserter(out));
        return from_sorted(std::move(out));
    }

    Simplex unite(const Simplex& other) const {
        std::vector<VertexId> out;
        std::set_union(v_.begin(), v_.end(), other.v_.begin(), other.v_.end(),
                       std::back_inserter(out));
        return from_sorted(std::move(out));
    }

    Simplex intersect(const Simplex& other) const {
        std::vector<VertexId> out;
        std::set_intersection(v_.begin(), v_.end(), other.v_.begin(), other.v_.end(),
                              std::back_inserter(out));
        return from_sorted(std::move(out));
    }

    bool disjoint_from(const Simplex& other) const {
        return intersect(other).empty();
    }

    auto operator<=>(const Simplex&) const = default;

    /// Trusted constructor for already-sorted unique input.
    static Simplex from_sorted(std::vector<VertexId> verts) {
        Simplex s;
        s.v_ = std::move(verts);
        return s;
    }

private:
    std::vector<VertexId> v_;
};

}  // namespace balgen
