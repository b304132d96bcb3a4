#include "schema_validate.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace centlab::testing {

namespace {

using nlohmann::json;

std::string type_of(const json &value) {
    if (value.is_object()) return "object";
    if (value.is_array()) return "array";
    if (value.is_string()) return "string";
    if (value.is_boolean()) return "boolean";
    if (value.is_number_integer() || value.is_number_unsigned()) return "integer";
    if (value.is_number()) return "number";
    return "null";
}

bool type_matches(const std::string &expected, const json &value) {
    const std::string actual = type_of(value);
    if (expected == actual) {
        return true;
    }
    return expected == "number" && actual == "integer"; // integers are numbers
}

void check(const json &value, const json &schema, const std::string &path,
           std::vector<std::string> &problems) {
    if (schema.contains("type")) {
        const json &type = schema["type"];
        bool ok = false;
        if (type.is_array()) {
            for (const auto &t : type) {
                ok = ok || type_matches(t.get<std::string>(), value);
            }
        } else {
            ok = type_matches(type.get<std::string>(), value);
        }
        if (!ok) {
            problems.push_back(path + ": expected type " + type.dump() + ", got " +
                               type_of(value));
            return;
        }
    }
    if (schema.contains("enum")) {
        bool ok = false;
        for (const auto &candidate : schema["enum"]) {
            ok = ok || candidate == value;
        }
        if (!ok) {
            problems.push_back(path + ": value " + value.dump() + " not in enum");
        }
    }
    if (value.is_object()) {
        if (schema.contains("required")) {
            for (const auto &key : schema["required"]) {
                if (!value.contains(key.get<std::string>())) {
                    problems.push_back(path + ": missing required key '" +
                                       key.get<std::string>() + "'");
                }
            }
        }
        const json properties =
            schema.contains("properties") ? schema["properties"] : json::object();
        for (const auto &[key, member] : value.items()) {
            if (properties.contains(key)) {
                check(member, properties[key], path + "." + key, problems);
            } else if (schema.contains("additionalProperties")) {
                const json &extra = schema["additionalProperties"];
                if (extra.is_boolean() && !extra.get<bool>()) {
                    problems.push_back(path + ": unexpected key '" + key + "'");
                } else if (extra.is_object()) {
                    check(member, extra, path + "." + key, problems);
                }
            }
        }
    }
    if (value.is_array() && schema.contains("items")) {
        for (std::size_t i = 0; i < value.size(); ++i) {
            check(value[i], schema["items"], path + "[" + std::to_string(i) + "]", problems);
        }
    }
}

} // namespace

std::vector<std::string> validate_against_schema(const std::string &document_text,
                                                 const std::string &schema_text) {
    std::vector<std::string> problems;
    json document, schema;
    try {
        document = json::parse(document_text);
    } catch (const json::parse_error &e) {
        problems.push_back(std::string("document is not JSON: ") + e.what());
        return problems;
    }
    try {
        schema = json::parse(schema_text);
    } catch (const json::parse_error &e) {
        problems.push_back(std::string("schema is not JSON: ") + e.what());
        return problems;
    }
    check(document, schema, "$", problems);
    return problems;
}

std::string load_schema(const std::string &filename) {
    const std::string path = std::string(CENTLAB_SCHEMA_DIR) + "/" + filename;
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open schema " + path);
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace centlab::testing
