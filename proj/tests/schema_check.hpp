#pragma once

#include <string>

#include <json.hpp>

namespace schema_check {

/// Validates a document against the subset of JSON Schema the shipped schema
/// uses: "type", "required", "properties", "items". Returns an error path or
/// an empty string when the document conforms.
inline std::string validate(const nlohmann::json& schema, const nlohmann::json& doc,
                            const std::string& path = "$") {
    if (schema.contains("type")) {
        const std::string type = schema["type"].get<std::string>();
        const bool ok = (type == "object" && doc.is_object()) ||
                        (type == "array" && doc.is_array()) ||
                        (type == "string" && doc.is_string()) ||
                        (type == "integer" && doc.is_number_integer()) ||
                        (type == "number" && doc.is_number()) ||
                        (type == "boolean" && doc.is_boolean());
        if (!ok) return path + ": expected " + type;
    }
    if (schema.contains("required")) {
        for (const auto& key : schema["required"])
            if (!doc.contains(key.get<std::string>()))
                return path + ": missing " + key.get<std::string>();
    }
    if (schema.contains("properties") && doc.is_object()) {
        for (const auto& [key, sub] : schema["properties"].items()) {
            if (!doc.contains(key)) continue;
            const std::string res = validate(sub, doc[key], path + "." + key);
            if (!res.empty()) return res;
        }
    }
    if (schema.contains("items") && doc.is_array()) {
        for (std::size_t i = 0; i < doc.size(); ++i) {
            const std::string res =
                validate(schema["items"], doc[i], path + "[" + std::to_string(i) + "]");
            if (!res.empty()) return res;
        }
    }
    return "";
}

}  // namespace schema_check
