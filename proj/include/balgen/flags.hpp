#pragma once

#include <bit>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "balgen/complex.hpp"

namespace balgen {

/// Color subsets of [d] as bitmasks (d <= 30 is enforced at build time).
using ColorSet = std::uint32_t;

inline ColorSet color_mask(std::initializer_list<int> colors) {
    ColorSet m = 0;
    for (int c : colors) m |= ColorSet{1} << c;
    return m;
}

inline ColorSet color_mask(const std::vector<int>& colors) {
    ColorSet m = 0;
    for (int c : colors) m |= ColorSet{1} << c;
    return m;
}

inline ColorSet full_mask(int d) {
    return (ColorSet{1} << (d + 1)) - 1;
}

inline std::vector<int> mask_colors(ColorSet m) {
    std::vector<int> out;
    for (int c = 0; m; ++c, m >>= 1)
        if (m & 1) out.push_back(c);
    return out;
}

inline std::string mask_string(ColorSet m) {
    std::string out = "{";
    bool first = true;
    for (int c : mask_colors(m)) {
        if (!first) out += ",";
        out += std::to_string(c);
        first = false;
    }
    return out + "}";
}

/// All flag f- and h-numbers plus the plain f/h-vectors and Euler characteristic.
struct FlagVectors {
    int d = 0;
    std::unordered_map<ColorSet, std::int64_t> f_by_set;  // f_S, with f_{} = 1
    std::unordered_map<ColorSet, std::int64_t> h_by_set;  // h_T
    std::vector<std::int64_t> f;  // f[i] = f_{i-1}, i = 0..d+1
    std::vector<std::int64_t> h;  // h[0..d+1]
    std::int64_t euler = 0;       // alternating sum of f_0..f_d

    std::int64_t flag_f(ColorSet s) const {
        auto it = f_by_set.find(s);
        return it == f_by_set.end() ? 0 : it->second;
    }
    std::int64_t flag_h(ColorSet s) const {
        auto it = h_by_set.find(s);
        return it == h_by_set.end() ? 0 : it->second;
    }
};

inline FlagVectors compute_flag_vectors(const ColoredComplex& c) {
    const int d = c.dimension();
    FlagVectors out;
    out.d = d;
    out.f.assign(static_cast<std::size_t>(d) + 2, 0);
    out.f[0] = 1;  // the empty face
    out.f_by_set[0] = 1;

    for (int k = 0; k <= d; ++k) {
        for (const Simplex& s : c.faces(k)) {
            ColorSet m = 0;
            for (VertexId v : s) m |= ColorSet{1} << c.color(v);
            ++out.f_by_set[m];
            ++out.f[static_cast<std::size_t>(k) + 1];
        }
    }

    for (int k = 0; k <= d; ++k)
        out.euler += (k % 2 == 0 ? 1 : -1) * out.f[static_cast<std::size_t>(k) + 1];

    // h_T by inclusion-exclusion over subsets of T
    const ColorSet all = full_mask(d);
    for (ColorSet t = 0; t <= all; ++t) {
        std::int64_t v = 0;
        const int tsize = std::popcount(t);
        ColorSet s = t;
        while (true) {  // submask enumeration
            const int ssize = std::popcount(s);
            v += ((tsize - ssize) % 2 == 0 ? 1 : -1) * out.flag_f(s);
            if (s == 0) break;
            s = (s - 1) & t;
        }
        if (v != 0) out.h_by_set[t] = v;
    }

    // h_i both from the flag refinement and the binomial transform; they must
    // agree for any complex, so the cheaper refinement sum is stored.
    out.h.assign(static_cast<std::size_t>(d) + 2, 0);
    for (ColorSet t = 0; t <= all; ++t)
        out.h[static_cast<std::size_t>(std::popcount(t))] += out.flag_h(t);

    return out;
}

/// Cached flag vectors of an immutable complex.
inline const FlagVectors& flag_vectors(const ColoredComplex& c) {
    auto box = c.cache();
    {
        std::lock_guard<std::mutex> lock(box->mx);
        if (box->flags) return *box->flags;
    }
    auto computed = std::make_shared<const FlagVectors>(compute_flag_vectors(c));
    std::lock_guard<std::mutex> lock(box->mx);
    if (!box->flags) box->flags = std::move(computed);
    return *box->flags;
}

inline void check_colors_in_range(const ColoredComplex& c, ColorSet s) {
    if (s & ~full_mask(c.dimension()))
        fail("ColorOutOfRange", "color set " + mask_string(s) + " not within 0.." +
                                    std::to_string(c.dimension()));
}

/// Number of faces whose color set is exactly S.
inline std::int64_t flag_f(const ColoredComplex& c, ColorSet s) {
    check_colors_in_range(c, s);
    return flag_vectors(c).flag_f(s);
}

inline std::int64_t flag_h(const ColoredComplex& c, ColorSet s) {
    check_colors_in_range(c, s);
    return flag_vectors(c).flag_h(s);
}

inline std::vector<std::int64_t> f_vector(const ColoredComplex& c) {
    return flag_vectors(c).f;
}

inline std::vector<std::int64_t> h_vector(const ColoredComplex& c) {
    return flag_vectors(c).h;
}

inline std::int64_t euler_characteristic(const ColoredComplex& c) {
    return flag_vectors(c).euler;
}

struct GammaValue {
    int p = 0, q = 0;
    std::int64_t value = 0;
};

/// Gamma_{pq} = f_{pq} - f_p - f_q, the cycle rank of the two-color subgraph.
inline GammaValue gamma(const ColoredComplex& c, ColorSet s) {
    if (std::popcount(s) != 2)
        fail("BadArity", "gamma needs a two-element color set, got " + mask_string(s));
    check_colors_in_range(c, s);
    const auto pq = mask_colors(s);
    const auto& fv = flag_vectors(c);
    return GammaValue{pq[0], pq[1],
                      fv.flag_f(s) - fv.flag_f(ColorSet{1} << pq[0]) -
                          fv.flag_f(ColorSet{1} << pq[1])};
}

/// f_d = f_1 - f_0 in dimension 3; f_4 = 2 f_1 - 6 f_0 + 6 chi in dimension 4.
inline bool dehn_sommerville_check(const ColoredComplex& c) {
    const auto& fv = flag_vectors(c);
    if (c.dimension() == 3) return fv.f[4] == fv.f[2] - fv.f[1];
    if (c.dimension() == 4) return fv.f[5] == 2 * fv.f[2] - 6 * fv.f[1] + 6 * fv.euler;
    fail("UnsupportedDimension",
         "Dehn-Sommerville check covers dimensions 3 and 4, got " +
             std::to_string(c.dimension()));
}

/// h_{[d]-S} - h_S = (-1)^{|S|} (chi - chi(S^d)) for balanced semi-Eulerian
/// complexes; the caller asserts the hypothesis.
inline bool swartz_check(const ColoredComplex& c, ColorSet s) {
    check_colors_in_range(c, s);
    const auto& fv = flag_vectors(c);
    const int d = c.dimension();
    const std::int64_t sphere_euler = 1 + (d % 2 == 0 ? 1 : -1);
    const std::int64_t sign = std::popcount(s) % 2 == 0 ? 1 : -1;
    return fv.flag_h(full_mask(d) & ~s) - fv.flag_h(s) == sign * (fv.euler - sphere_euler);
}

}  // namespace balgen
