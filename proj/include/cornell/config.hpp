#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

// Plain-text run configuration: one `key = value` pair per line, `#` starts
// a comment, blank lines are ignored.

namespace cornell::config {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ConfigFile {
public:
    /// Keys accepted in a config file.
    static bool is_known_key(const std::string& key);

    std::optional<std::string> get(const std::string& key) const;
    std::optional<double> get_number(const std::string& key) const;
    bool contains(const std::string& key) const { return values_.count(key) != 0; }

    void set(const std::string& key, std::string value);

private:
    std::map<std::string, std::string> values_;
};

/// Throws ConfigError (with the line number) on malformed lines, unknown
/// keys, or repeated keys.
ConfigFile parse(std::istream& in);

ConfigFile load(const std::filesystem::path& path);

}  // namespace cornell::config
