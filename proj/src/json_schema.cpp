#include "blocklab/json_schema.hpp"

namespace blocklab {

namespace {

using json = nlohmann::ordered_json;

bool type_matches(const json& doc, const std::string& t) {
    if (t == "object") return doc.is_object();
    if (t == "array") return doc.is_array();
    if (t == "string") return doc.is_string();
    if (t == "boolean") return doc.is_boolean();
    if (t == "integer") return doc.is_number_integer();
    if (t == "number") return doc.is_number();
    if (t == "null") return doc.is_null();
    return false;
}

void validate(const json& doc, const json& schema, const std::string& path, std::vector<std::string>& errs) {
    if (schema.contains("type")) {
        const json& t = schema["type"];
        bool ok = false;
        if (t.is_string()) {
            ok = type_matches(doc, t.get<std::string>());
        } else if (t.is_array()) {
            for (const auto& one : t)
                if (type_matches(doc, one.get<std::string>())) ok = true;
        }
        if (!ok) {
            errs.push_back(path + ": type mismatch (expected " + t.dump() + ")");
            return;
        }
    }
    if (schema.contains("enum")) {
        bool ok = false;
        for (const auto& v : schema["enum"])
            if (doc == v) ok = true;
        if (!ok) errs.push_back(path + ": value not in enum");
    }
    if (schema.contains("minimum") && doc.is_number()) {
        if (doc.get<double>() < schema["minimum"].get<double>())
            errs.push_back(path + ": below minimum " + schema["minimum"].dump());
    }
    if (doc.is_object()) {
        if (schema.contains("required"))
            for (const auto& key : schema["required"])
                if (!doc.contains(key.get<std::string>()))
                    errs.push_back(path + ": missing required '" + key.get<std::string>() + "'");
        const json* props = schema.contains("properties") ? &schema["properties"] : nullptr;
        bool allow_extra = true;
        if (schema.contains("additionalProperties") && schema["additionalProperties"].is_boolean())
            allow_extra = schema["additionalProperties"].get<bool>();
        for (auto it = doc.begin(); it != doc.end(); ++it) {
            if (props && props->contains(it.key())) {
                validate(it.value(), (*props)[it.key()], path + "/" + it.key(), errs);
            } else if (!allow_extra) {
                errs.push_back(path + ": unexpected property '" + it.key() + "'");
            }
        }
    }
    if (doc.is_array() && schema.contains("items")) {
        std::size_t i = 0;
        for (const auto& el : doc) {
            validate(el, schema["items"], path + "/" + std::to_string(i), errs);
            ++i;
        }
    }
}

}  // namespace

std::vector<std::string> validate_against_schema(const nlohmann::ordered_json& doc,
                                                 const nlohmann::ordered_json& schema) {
    std::vector<std::string> errs;
    validate(doc, schema, "$", errs);
    return errs;
}

}  // namespace blocklab
