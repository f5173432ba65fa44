#pragma once

#include <istream>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "balgen/complex.hpp"

namespace balgen {

/// Canonical document form:
///   {"dimension": d, "colors": {"label": int, ...}, "facets": [["label", ...], ...]}
inline ColoredComplex complex_from_json(const nlohmann::json& doc) {
    if (!doc.is_object()) fail("ParseError", "top-level JSON value must be an object");
    for (const char* key : {"dimension", "colors", "facets"})
        if (!doc.contains(key))
            fail("ParseError", std::string("missing required key \"") + key + "\"");
    if (!doc["dimension"].is_number_integer())
        fail("ParseError", "\"dimension\" must be an integer");
    if (!doc["colors"].is_object()) fail("ParseError", "\"colors\" must be an object");
    if (!doc["facets"].is_array()) fail("ParseError", "\"facets\" must be an array");

    std::map<std::string, int> coloring;
    for (const auto& [label, value] : doc["colors"].items()) {
        if (!value.is_number_integer())
            fail("ParseError", "color of \"" + label + "\" must be an integer");
        coloring[label] = value.get<int>();
    }

    std::vector<std::vector<std::string>> facets;
    for (const auto& facet : doc["facets"]) {
        if (!facet.is_array()) fail("ParseError", "each facet must be an array of labels");
        std::vector<std::string> f;
        for (const auto& label : facet) {
            if (!label.is_string()) fail("ParseError", "facet entries must be strings");
            f.push_back(label.get<std::string>());
        }
        facets.push_back(std::move(f));
    }

    ColoredComplex out = build_complex(facets, coloring);
    const int declared = doc["dimension"].get<int>();
    if (declared != out.dimension())
        fail("DimensionMismatch", "declared dimension " + std::to_string(declared) +
                                      " but facets have dimension " +
                                      std::to_string(out.dimension()));
    return out;
}

inline ColoredComplex complex_from_json_text(const std::string& text) {
    nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
    if (doc.is_discarded()) fail("ParseError", "input is not valid JSON");
    return complex_from_json(doc);
}

inline ColoredComplex load_complex(std::istream& in) {
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    return complex_from_json_text(text);
}

/// Canonical serialization: keys sorted, facets in label-lexicographic order.
inline nlohmann::json complex_to_json(const ColoredComplex& c) {
    nlohmann::json colors = nlohmann::json::object();
    for (VertexId v = 0; v < c.vertex_count(); ++v) colors[c.label(v)] = c.color(v);
    nlohmann::json facets = nlohmann::json::array();
    for (const Simplex& f : c.facets()) {
        nlohmann::json jf = nlohmann::json::array();
        for (VertexId v : f) jf.push_back(c.label(v));
        facets.push_back(std::move(jf));
    }
    return nlohmann::json{
        {"dimension", c.dimension()}, {"colors", colors}, {"facets", facets}};
}

}  // namespace balgen
