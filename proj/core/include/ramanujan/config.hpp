#pragma once

/**
 * @file config.hpp
 * @brief Flat key-value configuration with [section] headers.
 *
 * Grammar (one entry per line):
 *     # comment
 *     [section]
 *     key = value
 *
 * Keys are addressed as "section.key"; keys before any section header
 * have no prefix.  Values are free text; typed getters parse on demand.
 */

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace ramanujan::config {

class Config {
public:
    Config() = default;

    void set(const std::string& key, const std::string& value) { values_[key] = value; }
    bool has(const std::string& key) const { return values_.count(key) != 0; }

    std::string get_string(const std::string& key, const std::string& fallback = "") const;
    double get_double(const std::string& key, double fallback) const;
    int get_int(const std::string& key, int fallback) const;
    bool get_bool(const std::string& key, bool fallback) const;
    /// comma-separated list of reals
    std::vector<double> get_list(const std::string& key,
                                 const std::vector<double>& fallback = {}) const;

    const std::map<std::string, std::string>& entries() const { return values_; }

    /// Canonical serialization: sorted "key = value" lines.  Hash input
    /// and the round-trippable on-disk form.
    std::string canonical() const;

private:
    std::map<std::string, std::string> values_;
};

/// Throws std::runtime_error with line diagnostics on malformed input.
Config parse_string(const std::string& text);
/// Throws std::runtime_error when the file cannot be read.
Config parse_file(const std::string& path);

/// FNV-1a 64-bit over the canonical serialization.
std::uint64_t hash(const Config& cfg);

}  // namespace ramanujan::config
