#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "balgen/dual_graph.hpp"
#include "balgen/flags.hpp"
#include "balgen/necklace.hpp"

namespace balgen {

/// Exact value with denominator 1 or 2, stored as twice the value. Genus
/// values are integers on orientable inputs and may be half-integers on
/// non-orientable pseudomanifolds.
struct Dyadic {
    std::int64_t twice = 0;

    bool is_integer() const { return twice % 2 == 0; }
    std::string str() const {
        if (is_integer()) return std::to_string(twice / 2);
        return std::to_string(twice) + "/2";
    }
    auto operator<=>(const Dyadic&) const = default;
};

namespace detail {

/// Bicolored cycle counts for all color pairs, indexed [i][j].
inline std::vector<std::vector<std::int64_t>> all_pair_cycle_counts(const DualGraph& g) {
    std::vector<std::vector<std::int64_t>> counts(
        static_cast<std::size_t>(g.d) + 1,
        std::vector<std::int64_t>(static_cast<std::size_t>(g.d) + 1, 0));
    for (int i = 0; i <= g.d; ++i)
        for (int j = i + 1; j <= g.d; ++j)
            counts[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                counts[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
                    bicolored_cycle_count(g, i, j);
    return counts;
}

}  // namespace detail

/// One necklace's evaluation with every formula that applies.
struct NecklaceEval {
    Necklace eps;
    std::vector<std::int64_t> cycle_counts;     // per adjacent pair
    std::int64_t surface_euler = 0;             // chi(F_eps)
    Dyadic rho_from_embedding;                  // 1 - chi/2 over the cell structure
    Dyadic rho_from_flags;                      // the flag-count expression
    std::optional<Dyadic> rho_closed_form;      // dimension 3/4 manifold shortcut
    Dyadic rho;                                 // the agreed value
};

struct GenusRecord {
    int d = 0;
    bool orientable = false;
    bool closed_form_used = false;
    std::vector<NecklaceEval> evals;      // one per necklace, sorted
    Dyadic genus;                         // min over necklaces
    std::vector<std::size_t> argmin;      // indices into evals

    /// Genus of the minimizing surface itself: rho when orientable (then an
    /// integer), 2*rho when not.
    std::int64_t minimal_surface_genus() const {
        return orientable ? genus.twice / 2 : genus.twice;
    }
};

/// rho for a raw cyclic color order via the flag-count expression
/// 1 - (1-d)/4 f_d - 1/2 sum f_{d-2}^{pairs}. Rotation/reflection invariant.
inline Dyadic rho_raw(const ColoredComplex& c, const std::vector<int>& cyclic_order) {
    const int d = c.dimension();
    if (d < 3) fail("DimensionTooLow", "genus needs dimension >= 3");
    require_balanced_normal(c, "rho");
    const auto& fv = flag_vectors(c);
    const std::int64_t fd = fv.f[static_cast<std::size_t>(d) + 1];
    std::int64_t flags_total = 0;
    const std::size_t n = cyclic_order.size();
    for (std::size_t i = 0; i < n; ++i) {
        const ColorSet pair =
            color_mask({cyclic_order[i], cyclic_order[(i + 1) % n]});
        flags_total += fv.flag_f(full_mask(d) & ~pair);
    }
    // twice rho = 2 - (1-d) f_d / 2 - flags_total; (1-d) f_d is always even
    return Dyadic{2 - (1 - d) * fd / 2 - flags_total};
}

/// rho for a necklace, evaluated from the embedding cell counts and from the
/// flag counts; the two routes must agree exactly.
inline Dyadic rho(const ColoredComplex& c, const Necklace& eps) {
    const EmbeddingSummary s = embedding_summary(c, eps);
    const Dyadic from_embedding{2 - s.euler};
    const Dyadic from_flags = rho_raw(c, eps.order);
    if (from_embedding != from_flags)
        fail("CrossCheckFailed", "rho mismatch for " + eps.str() + ": embedding " +
                                     from_embedding.str() + " vs flags " +
                                     from_flags.str());
    return from_embedding;
}

/// Dimension 3: rho = 1 + f_{e0 e2} - f_{e0} - f_{e2}.
/// Dimension 4: rho = 1 + 2 chi + f_1 - sum of adjacent-pair flag counts - 2 f_0.
/// Requires the matching Dehn-Sommerville identity; its failure signals that
/// the caller's manifold assertion is false.
inline Dyadic rho_closed_form(const ColoredComplex& c, const Necklace& eps) {
    const int d = c.dimension();
    if (d != 3 && d != 4)
        fail("UnsupportedDimension",
             "closed-form genus covers dimensions 3 and 4, got " + std::to_string(d));
    if (!dehn_sommerville_check(c))
        fail("DehnSommervilleViolated",
             "Dehn-Sommerville identity fails; input is not a triangulated manifold");
    const auto& fv = flag_vectors(c);
    if (d == 3) {
        const int e0 = eps.order[0], e2 = eps.order[2];
        const std::int64_t v = 1 + fv.flag_f(color_mask({e0, e2})) -
                               fv.flag_f(ColorSet{1} << e0) - fv.flag_f(ColorSet{1} << e2);
        return Dyadic{2 * v};
    }
    std::int64_t pair_sum = 0;
    for (const auto& [a, b] : eps.adjacent_pairs())
        pair_sum += fv.flag_f(color_mask({a, b}));
    const std::int64_t v = 1 + 2 * fv.euler + fv.f[2] - pair_sum - 2 * fv.f[1];
    return Dyadic{2 * v};
}

/// Evaluate every necklace, cross-check all applicable formulas, and take the
/// minimum. The full argmin set is recorded; ties are the norm on symmetric
/// inputs.
inline GenusRecord balanced_genus(const ColoredComplex& c) {
    const int d = c.dimension();
    if (d < 3) fail("DimensionTooLow", "genus needs dimension >= 3");
    require_balanced_normal(c, "balanced_genus");

    const DualGraph g = dual_graph(c);
    const auto counts = detail::all_pair_cycle_counts(g);
    const auto& fv = flag_vectors(c);
    const std::int64_t fd = fv.f[static_cast<std::size_t>(d) + 1];

    GenusRecord rec;
    rec.d = d;
    rec.orientable = is_bipartite(g);
    rec.closed_form_used = (d == 3 || d == 4) && dehn_sommerville_check(c);

    for (const Necklace& eps : necklaces(d)) {
        NecklaceEval ev;
        ev.eps = eps;
        std::int64_t faces = 0, flags_total = 0;
        for (const auto& [a, b] : eps.adjacent_pairs()) {
            const std::int64_t cyc =
                counts[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
            ev.cycle_counts.push_back(cyc);
            faces += cyc;
            flags_total += fv.flag_f(full_mask(d) & ~color_mask({a, b}));
        }
        ev.surface_euler = fd - (d + 1) * fd / 2 + faces;
        ev.rho_from_embedding = Dyadic{2 - ev.surface_euler};
        ev.rho_from_flags = Dyadic{2 - (1 - d) * fd / 2 - flags_total};
        if (ev.rho_from_embedding != ev.rho_from_flags)
            fail("CrossCheckFailed", "rho mismatch for necklace " + eps.str());
        ev.rho = ev.rho_from_embedding;
        if (rec.closed_form_used) {
            ev.rho_closed_form = rho_closed_form(c, eps);
            if (*ev.rho_closed_form != ev.rho)
                fail("CrossCheckFailed", "closed-form rho mismatch for necklace " +
                                             eps.str() + ": " +
                                             ev.rho_closed_form->str() + " vs " +
                                             ev.rho.str());
            if (!ev.rho.is_integer())
                fail("CrossCheckFailed",
                     "manifold genus must be an integer, got " + ev.rho.str());
        }
        rec.evals.push_back(std::move(ev));
    }

    rec.genus = rec.evals.front().rho;
    for (const NecklaceEval& ev : rec.evals) rec.genus = std::min(rec.genus, ev.rho);
    for (std::size_t i = 0; i < rec.evals.size(); ++i)
        if (rec.evals[i].rho == rec.genus) rec.argmin.push_back(i);
    return rec;
}

/// One instantiated inequality or certificate line in the bounds report.
struct BoundCheck {
    std::string name;
    std::string detail;
    bool applicable = false;
    bool pass = false;
};

struct BoundsReport {
    std::vector<BoundCheck> checks;
    std::vector<std::string> sphere_certificates;

    bool all_pass() const {
        for (const BoundCheck& c : checks)
            if (c.applicable && !c.pass) return false;
        return true;
    }
};

/// Instantiates every inequality the input qualifies for, plus the sphere
/// recognition criteria. The fundamental-group rank m is taken from the
/// caller when known; rank-dependent bounds are skipped without it, and the
/// non-sphere hypotheses are only assumed when m >= 1 makes them sound.
inline BoundsReport verify_bounds(const ColoredComplex& c,
                                  std::optional<std::int64_t> asserted_m = {}) {
    const GenusRecord rec = balanced_genus(c);
    const int d = rec.d;
    const auto& fv = flag_vectors(c);
    const std::int64_t fd = fv.f[static_cast<std::size_t>(d) + 1];
    const std::int64_t twice_g = rec.genus.twice;

    BoundsReport out;

    {
        // G >= 1 + (d-3)/8 f_d, via 8G >= 8 + (d-3) f_d
        BoundCheck b;
        b.name = "facet count bound";
        b.applicable = true;
        b.pass = 4 * twice_g >= 8 + (d - 3) * fd;
        b.detail = "G = " + rec.genus.str() + " >= 1 + (" + std::to_string(d) +
                   "-3)/8 * " + std::to_string(fd);
        out.checks.push_back(b);
    }
    {
        const std::int64_t floor_val = 1 + (d - 3) * (std::int64_t{1} << (d - 2));
        BoundCheck b;
        b.name = "dimension floor";
        b.applicable = true;
        b.pass = twice_g >= 2 * floor_val;
        b.detail = "G = " + rec.genus.str() + " >= 1 + (d-3)*2^(d-2) = " +
                   std::to_string(floor_val);
        out.checks.push_back(b);
    }

    // The sphere criteria are statements about manifolds. In dimensions 3
    // and 4 the Dehn-Sommerville identity is a computable necessary
    // condition, so a failing identity suppresses the certificates; beyond
    // that the manifold hypothesis stays with the caller.
    const bool manifold_plausible = (d != 3 && d != 4) || dehn_sommerville_check(c);
    const char* caveat = d >= 5 ? " (manifold input assumed)" : "";

    if (manifold_plausible) {
        if (d == 3 && twice_g <= 6) {
            out.sphere_certificates.push_back(
                "certified sphere (genus <= 3 criterion): G = " + rec.genus.str());
        }
        if (d == 4) {
            const std::int64_t threshold = 2 * fv.euler + 10;
            if (twice_g <= 2 * threshold) {
                out.sphere_certificates.push_back(
                    "certified sphere (genus <= 2*chi+10 criterion): G = " +
                    rec.genus.str() + " <= " + std::to_string(threshold));
            }
        }

        std::optional<std::pair<std::pair<int, int>, std::int64_t>> min_gamma;
        for (int p = 0; p <= d; ++p)
            for (int q = p + 1; q <= d; ++q) {
                const std::int64_t gpq = gamma(c, color_mask({p, q})).value;
                if (!min_gamma || gpq < min_gamma->second)
                    min_gamma = {{p, q}, gpq};
            }
        if (min_gamma && min_gamma->second <= 1) {
            out.sphere_certificates.push_back(
                "sphere by join/ball decomposition: Gamma_{" +
                std::to_string(min_gamma->first.first) + "," +
                std::to_string(min_gamma->first.second) + "} = " +
                std::to_string(min_gamma->second) + caveat);
        }
    }

    if (asserted_m) {
        const std::int64_t m = *asserted_m;
        bool has_two = false;
        for (int p = 0; p <= d; ++p)
            for (int q = p + 1; q <= d; ++q) {
                const std::int64_t gpq = gamma(c, color_mask({p, q})).value;
                if (gpq == 2) has_two = true;
                if (gpq < 2) continue;
                BoundCheck b;
                b.name = "pair rank bound";
                b.applicable = true;
                b.pass = gpq >= m + 2;
                b.detail = "Gamma_{" + std::to_string(p) + "," + std::to_string(q) +
                           "} = " + std::to_string(gpq) + " >= m+2 = " +
                           std::to_string(m + 2);
                out.checks.push_back(b);
            }
        if (has_two) {
            BoundCheck b;
            b.name = "Gamma = 2 forces m = 0";
            b.applicable = true;
            b.pass = m == 0;
            b.detail = "some Gamma_S = 2, asserted m = " + std::to_string(m);
            out.checks.push_back(b);
        }
        if (m >= 1) {  // m >= 1 soundly rules out the sphere
            if (d == 3) {
                BoundCheck b;
                b.name = "3-manifold rank bound";
                b.applicable = true;
                b.pass = twice_g >= 2 * (m + 3);
                b.detail = "G = " + rec.genus.str() + " >= m+3 = " + std::to_string(m + 3);
                out.checks.push_back(b);
            }
            if (d == 4) {
                const std::int64_t bound = 2 * fv.euler + 5 * m + 11;
                BoundCheck b;
                b.name = "4-manifold rank bound";
                b.applicable = true;
                b.pass = twice_g >= 2 * bound;
                b.detail = "G = " + rec.genus.str() + " >= 2chi+5m+11 = " +
                           std::to_string(bound);
                out.checks.push_back(b);
            }
        }
    }

    return out;
}

}  // namespace balgen
