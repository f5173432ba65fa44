#pragma once

#include <string>
#include <vector>

#include "balgen/error.hpp"

namespace balgen {

/// A cyclic permutation of the colors 0..d up to rotation and reflection,
/// stored canonically: rotated so the first entry is 0, then the
/// lexicographically smaller of the two reading directions.
struct Necklace {
    std::vector<int> order;

    static Necklace canonical(const std::vector<int>& cyclic_order) {
        const std::size_t n = cyclic_order.size();
        std::size_t zero = 0;
        while (zero < n && cyclic_order[zero] != 0) ++zero;
        std::vector<int> fwd(n), rev(n);
        for (std::size_t i = 0; i < n; ++i) {
            fwd[i] = cyclic_order[(zero + i) % n];
            rev[i] = cyclic_order[(zero + n - i) % n];
        }
        return Necklace{fwd <= rev ? std::move(fwd) : std::move(rev)};
    }

    /// The d+1 unordered adjacent color pairs (eps_i, eps_{i+1}).
    std::vector<std::pair<int, int>> adjacent_pairs() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(order.size());
        for (std::size_t i = 0; i < order.size(); ++i) {
            int a = order[i], b = order[(i + 1) % order.size()];
            if (a > b) std::swap(a, b);
            out.emplace_back(a, b);
        }
        return out;
    }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < order.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(order[i]);
        }
        return s + ")";
    }

    bool operator==(const Necklace&) const = default;
    bool operator<(const Necklace& other) const { return order < other.order; }
};

/// All rotation+reflection classes of cyclic color orders; d!/2 of them.
inline std::vector<Necklace> necklaces(int d) {
    if (d < 3) fail("DimensionTooLow", "necklace enumeration needs dimension >= 3");
    std::vector<int> rest;
    for (int i = 1; i <= d; ++i) rest.push_back(i);
    std::vector<Necklace> out;
    do {
        std::vector<int> order{0};
        order.insert(order.end(), rest.begin(), rest.end());
        Necklace n = Necklace::canonical(order);
        if (n.order == order) out.push_back(std::move(n));
    } while (std::next_permutation(rest.begin(), rest.end()));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace balgen
