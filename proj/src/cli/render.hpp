#pragma once

#include <string>

#include <json.hpp>

#include "ncproj/core/scalar.hpp"

namespace ncproj::cli {

using json = nlohmann::json;

/// Number when it fits a machine integer, decimal string otherwise.
json to_json(const Integer& v);
json to_json(const std::vector<Integer>& v);
json to_json(const std::vector<long>& v);

/// Pretty JSON with sorted keys, or an aligned key/value table.
std::string render(const json& report, const std::string& format, const std::string& title);

}  // namespace ncproj::cli
