#include "render.hpp"

#include <unistd.h>

#include <cstdlib>
#include <utility>
#include <vector>

namespace ncproj::cli {

json to_json(const Integer& v) {
  if (v.fits_long()) return v.to_long();
  return v.to_string();
}

json to_json(const std::vector<Integer>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

json to_json(const std::vector<long>& v) { return json(v); }

namespace {

bool use_color() {
  const char* env = std::getenv("NCPROJ_COLOR");
  if (env && std::string(env) == "0") return false;
  return isatty(STDOUT_FILENO) != 0;
}

bool is_flat(const json& v) {
  if (!v.is_array()) return !v.is_object();
  for (const auto& x : v) {
    if (x.is_object()) return false;
  }
  return true;
}

void flatten(const json& v, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
  if (is_flat(v)) {
    rows.emplace_back(prefix, v.is_string() ? v.get<std::string>() : v.dump());
    return;
  }
  if (v.is_object()) {
    for (const auto& [k, x] : v.items()) flatten(x, prefix.empty() ? k : prefix + "." + k, rows);
    return;
  }
  for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], prefix + "[" + std::to_string(i) + "]", rows);
}

}  // namespace

std::string render(const json& report, const std::string& format, const std::string& title) {
  if (format == "json") return report.dump(2) + "\n";
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(report, "", rows);
  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  const bool color = use_color();
  std::string out = color ? "\x1b[1m" + title + "\x1b[0m\n" : title + "\n";
  for (const auto& [k, v] : rows) {
    const std::string key = k + std::string(width - k.size(), ' ');
    out += "  " + (color ? "\x1b[36m" + key + "\x1b[0m" : key) + "  " + v + "\n";
  }
  return out;
}

}  // namespace ncproj::cli
