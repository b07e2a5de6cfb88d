#include "cornell/config.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <istream>

namespace cornell::config {
namespace {

constexpr std::array<const char*, 10> kKeys{
    "mu", "b", "alpha", "C", "quark_mass", "preset", "method", "format", "precision", "xi_max",
};

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

}  // namespace

bool ConfigFile::is_known_key(const std::string& key) {
    return std::find(kKeys.begin(), kKeys.end(), key) != kKeys.end();
}

std::optional<std::string> ConfigFile::get(const std::string& key) const {
    const auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    return it->second;
}

std::optional<double> ConfigFile::get_number(const std::string& key) const {
    const auto raw = get(key);
    if (!raw) return std::nullopt;
    double v = 0.0;
    const auto* end = raw->data() + raw->size();
    const auto [ptr, ec] = std::from_chars(raw->data(), end, v);
    if (ec != std::errc{} || ptr != end) {
        throw ConfigError("config: value of '" + key + "' is not a number: " + *raw);
    }
    return v;
}

void ConfigFile::set(const std::string& key, std::string value) { values_[key] = std::move(value); }

ConfigFile parse(std::istream& in) {
    ConfigFile cfg;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("config line " + std::to_string(line_no) + ": expected key = value");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) {
            throw ConfigError("config line " + std::to_string(line_no) + ": empty key or value");
        }
        if (!ConfigFile::is_known_key(key)) {
            throw ConfigError("config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
        }
        if (cfg.contains(key)) {
            throw ConfigError("config line " + std::to_string(line_no) + ": repeated key '" + key + "'");
        }
        cfg.set(key, value);
    }
    return cfg;
}

ConfigFile load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open " + path.string());
    return parse(in);
}

}  // namespace cornell::config
