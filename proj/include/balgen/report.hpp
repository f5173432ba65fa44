#pragma once

#include <cstdint>
#include <iomanip>
#include <sstream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "balgen/complex.hpp"
#include "balgen/edge_path.hpp"
#include "balgen/flags.hpp"
#include "balgen/genus.hpp"

namespace balgen {

inline constexpr const char* kToolVersion = "0.1.0";

inline std::string fnv1a64_hex(std::string_view data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : data) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

inline nlohmann::json validation_to_json(const ValidationReport& r) {
    return nlohmann::json{{"pure", r.pure},
                          {"balanced", r.balanced},
                          {"ridge_condition", r.ridge_condition},
                          {"links_connected", r.links_connected},
                          {"connected", r.connected},
                          {"facet_strongly_connected", r.facet_strongly_connected},
                          {"normal_pseudomanifold", r.normal_pseudomanifold()}};
}

inline nlohmann::json flags_to_json(const ColoredComplex& c) {
    const auto& fv = flag_vectors(c);
    nlohmann::json flag_f = nlohmann::json::array();
    nlohmann::json flag_h = nlohmann::json::array();
    const ColorSet all = full_mask(c.dimension());
    for (ColorSet m = 0; m <= all; ++m) {
        flag_f.push_back({{"colors", mask_colors(m)}, {"count", fv.flag_f(m)}});
        flag_h.push_back({{"colors", mask_colors(m)}, {"count", fv.flag_h(m)}});
        if (m == all) break;  // guards d = -1 fragments where all = 0
    }
    nlohmann::json gammas = nlohmann::json::array();
    for (int p = 0; p <= c.dimension(); ++p)
        for (int q = p + 1; q <= c.dimension(); ++q)
            gammas.push_back({{"colors", std::vector<int>{p, q}},
                              {"value", gamma(c, color_mask({p, q})).value}});
    return nlohmann::json{{"f_vector", fv.f},       {"h_vector", fv.h},
                          {"euler", fv.euler},      {"flag_f", flag_f},
                          {"flag_h", flag_h},       {"gamma", gammas}};
}

inline nlohmann::json genus_to_json(const GenusRecord& rec) {
    nlohmann::json evals = nlohmann::json::array();
    for (const NecklaceEval& ev : rec.evals) {
        nlohmann::json e{{"order", ev.eps.order},
                         {"cycle_counts", ev.cycle_counts},
                         {"surface_euler", ev.surface_euler},
                         {"rho", ev.rho.str()},
                         {"rho_twice", ev.rho.twice}};
        if (ev.rho_closed_form) e["rho_closed_form"] = ev.rho_closed_form->str();
        evals.push_back(std::move(e));
    }
    return nlohmann::json{{"orientable", rec.orientable},
                          {"genus", rec.genus.str()},
                          {"genus_twice", rec.genus.twice},
                          {"necklaces", evals},
                          {"argmin", rec.argmin}};
}

inline nlohmann::json bounds_to_json(const BoundsReport& rep) {
    nlohmann::json checks = nlohmann::json::array();
    for (const BoundCheck& b : rep.checks)
        checks.push_back({{"name", b.name}, {"detail", b.detail}, {"pass", b.pass}});
    return nlohmann::json{{"checks", checks},
                          {"sphere_certificates", rep.sphere_certificates},
                          {"all_pass", rep.all_pass()}};
}

inline nlohmann::json rank_bounds_to_json(const RankBounds& rb) {
    nlohmann::json j{{"generators_before", rb.generators_before},
                     {"lower", rb.lower},
                     {"upper", rb.upper},
                     {"trivialized_by_links", rb.trivialized_by_links},
                     {"surviving_global", rb.surviving_global},
                     {"simply_connected_witness", rb.simply_connected_witness}};
    if (rb.pair) {
        j["pair"] = {{"colors", std::vector<int>{rb.pair->p, rb.pair->q}},
                     {"generators", rb.pair->generators},
                     {"trivialized_by_links", rb.pair->trivialized_by_links},
                     {"link_bound", rb.pair->link_bound()},
                     {"surviving", rb.pair->surviving},
                     {"subgraph_in_one_link", rb.pair->subgraph_in_one_link}};
    }
    return j;
}

/// Full pipeline over one input: validation, flag tables, genus table, bound
/// verdicts, fundamental-group rank bounds. Sections that do not apply are
/// listed under "skipped" with the reason.
inline nlohmann::json full_report(const ColoredComplex& c, const std::string& input_bytes,
                                  std::optional<std::int64_t> asserted_m = {}) {
    nlohmann::json doc{{"version", kToolVersion},
                       {"input_digest", fnv1a64_hex(input_bytes)}};
    const ValidationReport& v = c.validation();
    doc["validation"] = validation_to_json(v);
    doc["flags"] = flags_to_json(c);

    nlohmann::json skipped = nlohmann::json::object();
    if (c.dimension() >= 3 && v.balanced_normal_pseudomanifold()) {
        doc["genus"] = genus_to_json(balanced_genus(c));
        doc["bounds"] = bounds_to_json(verify_bounds(c, asserted_m));
    } else if (c.dimension() < 3) {
        skipped["genus"] = "dimension below 3";
    } else {
        skipped["genus"] = "not a balanced normal pseudomanifold";
    }
    if (v.connected) {
        doc["pi1"] = rank_bounds_to_json(rank_bounds(c));
    } else {
        skipped["pi1"] = "1-skeleton not connected";
    }
    doc["skipped"] = skipped;
    return doc;
}

}  // namespace balgen
