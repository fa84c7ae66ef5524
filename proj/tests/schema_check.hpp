// Copyright 2026 The numstate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>

namespace numstate::testing {

// Interpreter for the JSON-schema subset the shipped schema uses: type,
// enum, required, properties, additionalProperties (boolean), items, oneOf.
// Returns the first violation as "path: message", or nothing when valid.

inline bool matches_type(const nlohmann::json& value, const std::string& type) {
    if (type == "object") return value.is_object();
    if (type == "array") return value.is_array();
    if (type == "string") return value.is_string();
    if (type == "integer") return value.is_number_integer();
    if (type == "number") return value.is_number();
    if (type == "boolean") return value.is_boolean();
    if (type == "null") return value.is_null();
    return false;
}

inline std::optional<std::string> schema_violation(
    const nlohmann::json& value, const nlohmann::json& schema,
    const std::string& path = "$") {
    if (schema.contains("type")) {
        if (!matches_type(value, schema["type"].get<std::string>())) {
            return path + ": expected type " +
                   schema["type"].get<std::string>();
        }
    }
    if (schema.contains("enum")) {
        bool found = false;
        for (const auto& allowed : schema["enum"]) {
            if (value == allowed) found = true;
        }
        if (!found) return path + ": value not in enum";
    }
    if (schema.contains("oneOf")) {
        int matched = 0;
        for (const auto& alternative : schema["oneOf"]) {
            if (!schema_violation(value, alternative, path)) ++matched;
        }
        if (matched != 1) {
            return path + ": matched " + std::to_string(matched) +
                   " oneOf alternatives";
        }
    }
    if (value.is_object()) {
        if (schema.contains("required")) {
            for (const auto& field : schema["required"]) {
                if (!value.contains(field.get<std::string>())) {
                    return path + ": missing required field " +
                           field.get<std::string>();
                }
            }
        }
        const bool allow_extra =
            !schema.contains("additionalProperties") ||
            schema["additionalProperties"].get<bool>();
        for (const auto& [key, member] : value.items()) {
            if (schema.contains("properties") &&
                schema["properties"].contains(key)) {
                if (auto violation = schema_violation(
                        member, schema["properties"][key], path + "." + key)) {
                    return violation;
                }
            } else if (!allow_extra) {
                return path + ": unexpected field " + key;
            }
        }
    }
    if (value.is_array() && schema.contains("items")) {
        for (std::size_t i = 0; i < value.size(); ++i) {
            if (auto violation =
                    schema_violation(value[i], schema["items"],
                                     path + "[" + std::to_string(i) + "]")) {
                return violation;
            }
        }
    }
    return std::nullopt;
}

}  // namespace numstate::testing
