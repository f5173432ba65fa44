#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace balgen {

using BigInt = boost::multiprecision::cpp_int;
using BigMatrix = std::vector<std::vector<BigInt>>;

/// Nonzero invariant factors d_1 | d_2 | ... of an integer matrix, all
/// positive. Entries can grow during elimination, hence the big integers.
inline std::vector<BigInt> smith_invariant_factors(BigMatrix m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::vector<BigInt> factors;

    std::size_t t = 0;
    while (t < rows && t < cols) {
        // smallest nonzero entry of the working submatrix becomes the pivot
        std::size_t pi = t, pj = t;
        bool found = false;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                if (m[i][j] == 0) continue;
                if (!found || abs(m[i][j]) < abs(m[pi][pj])) {
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        if (!found) break;
        std::swap(m[t], m[pi]);
        for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pj]);

        bool clean = true;
        for (std::size_t i = t + 1; i < rows; ++i) {
            if (m[i][t] == 0) continue;
            const BigInt q = m[i][t] / m[t][t];
            for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
            if (m[i][t] != 0) clean = false;  // remainder smaller than pivot
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
            if (m[t][j] == 0) continue;
            const BigInt q = m[t][j] / m[t][t];
            for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
            if (m[t][j] != 0) clean = false;
        }
        if (!clean) continue;  // redo with the smaller residue as pivot

        // divisibility of the rest by the pivot
        bool divides_all = true;
        for (std::size_t i = t + 1; i < rows && divides_all; ++i)
            for (std::size_t j = t + 1; j < cols; ++j)
                if (m[i][j] % m[t][t] != 0) {
                    for (std::size_t k = t; k < cols; ++k) m[t][k] += m[i][k];
                    divides_all = false;
                    break;
                }
        if (!divides_all) continue;

        factors.push_back(abs(m[t][t]));
        ++t;
    }
    return factors;
}

/// Structure of Z^generators / rowspace(relations).
struct AbelianQuotient {
    std::int64_t free_rank = 0;
    std::vector<BigInt> torsion;  // invariant factors > 1

    std::int64_t minimal_generators() const {
        return free_rank + static_cast<std::int64_t>(torsion.size());
    }
};

inline AbelianQuotient cokernel(const BigMatrix& relations, std::size_t generator_count) {
    AbelianQuotient out;
    const auto factors = smith_invariant_factors(relations);
    out.free_rank =
        static_cast<std::int64_t>(generator_count) - static_cast<std::int64_t>(factors.size());
    for (const BigInt& f : factors)
        if (f > 1) out.torsion.push_back(f);
    return out;
}

}  // namespace balgen
