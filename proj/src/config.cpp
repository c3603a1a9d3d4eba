// Copyright 2026 The kik authors
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

#include "kik/config.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace kik {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    std::stringstream ss(s);
    while (std::getline(ss, cur, ',')) {
        std::string t = trim(cur);
        if (!t.empty()) out.push_back(t);
    }
    return out;
}

}  // namespace

void ConfigTree::set(const std::string& section, const std::string& key,
                     const std::string& value) {
    if (data_.find(section) == data_.end()) section_order_.push_back(section);
    auto& sec = data_[section];
    if (sec.find(key) == sec.end()) key_order_[section].push_back(key);
    sec[key] = value;
}

bool ConfigTree::has(const std::string& section, const std::string& key) const {
    auto it = data_.find(section);
    return it != data_.end() && it->second.find(key) != it->second.end();
}

const std::string& ConfigTree::get(const std::string& section, const std::string& key) const {
    auto it = data_.find(section);
    if (it == data_.end())
        throw ConfigError("missing section [" + section + "]");
    auto jt = it->second.find(key);
    if (jt == it->second.end())
        throw ConfigError("missing key '" + key + "' in section [" + section + "]");
    return jt->second;
}

std::string ConfigTree::get_or(const std::string& section, const std::string& key,
                               const std::string& fallback) const {
    return has(section, key) ? get(section, key) : fallback;
}

double ConfigTree::get_double(const std::string& section, const std::string& key) const {
    const std::string& v = get(section, key);
    char* end = nullptr;
    double x = std::strtod(v.c_str(), &end);
    if (end == v.c_str() || *end != '\0')
        throw ConfigError("key '" + key + "' in [" + section + "] is not a number: " + v);
    return x;
}

long ConfigTree::get_long(const std::string& section, const std::string& key) const {
    const std::string& v = get(section, key);
    char* end = nullptr;
    long x = std::strtol(v.c_str(), &end, 10);
    if (end == v.c_str() || *end != '\0')
        throw ConfigError("key '" + key + "' in [" + section + "] is not an integer: " + v);
    return x;
}

bool ConfigTree::get_bool(const std::string& section, const std::string& key) const {
    const std::string& v = get(section, key);
    if (v == "true" || v == "on" || v == "1") return true;
    if (v == "false" || v == "off" || v == "0") return false;
    throw ConfigError("key '" + key + "' in [" + section + "] is not a boolean: " + v);
}

std::vector<double> ConfigTree::get_double_list(const std::string& section,
                                                const std::string& key) const {
    std::vector<double> out;
    for (const auto& t : split_list(get(section, key))) {
        char* end = nullptr;
        double x = std::strtod(t.c_str(), &end);
        if (end == t.c_str() || *end != '\0')
            throw ConfigError("list key '" + key + "' has a non-numeric item: " + t);
        out.push_back(x);
    }
    if (out.empty()) throw ConfigError("list key '" + key + "' is empty");
    return out;
}

std::vector<long> ConfigTree::get_long_list(const std::string& section,
                                            const std::string& key) const {
    std::vector<long> out;
    for (double x : get_double_list(section, key)) {
        long v = long(x);
        if (double(v) != x)
            throw ConfigError("list key '" + key + "' has a non-integer item");
        out.push_back(v);
    }
    return out;
}

std::vector<std::string> ConfigTree::get_string_list(const std::string& section,
                                                     const std::string& key) const {
    auto out = split_list(get(section, key));
    if (out.empty()) throw ConfigError("list key '" + key + "' is empty");
    return out;
}

void ConfigTree::validate_keys(
    const std::map<std::string, std::vector<std::string>>& allowed) const {
    for (const auto& sec : section_order_) {
        auto it = allowed.find(sec);
        if (it == allowed.end()) throw ConfigError("unknown section [" + sec + "]");
        for (const auto& key : key_order_.at(sec)) {
            if (std::find(it->second.begin(), it->second.end(), key) == it->second.end())
                throw ConfigError("unknown key '" + key + "' in section [" + sec + "]");
        }
    }
}

std::string ConfigTree::emit() const {
    std::string out;
    for (size_t i = 0; i < section_order_.size(); ++i) {
        const std::string& sec = section_order_[i];
        if (i) out += "\n";
        out += "[" + sec + "]\n";
        for (const auto& key : key_order_.at(sec))
            out += key + " = " + data_.at(sec).at(key) + "\n";
    }
    return out;
}

ConfigTree ConfigTree::parse(const std::string& text) {
    ConfigTree t;
    std::stringstream ss(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        std::string s = trim(line);
        if (s.empty() || s[0] == '#') continue;
        if (s.front() == '[') {
            if (s.back() != ']')
                throw ConfigError("line " + std::to_string(lineno) + ": unterminated section header");
            section = trim(s.substr(1, s.size() - 2));
            if (section.empty())
                throw ConfigError("line " + std::to_string(lineno) + ": empty section name");
            if (t.data_.find(section) == t.data_.end()) {
                t.section_order_.push_back(section);
                t.data_[section];
                t.key_order_[section];
            }
            continue;
        }
        size_t eq = s.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno) + ": expected 'key = value'");
        if (section.empty())
            throw ConfigError("line " + std::to_string(lineno) + ": key outside any section");
        std::string key = trim(s.substr(0, eq));
        std::string value = trim(s.substr(eq + 1));
        if (key.empty())
            throw ConfigError("line " + std::to_string(lineno) + ": empty key");
        if (t.data_[section].count(key))
            throw ConfigError("line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
        t.data_[section][key] = value;
        t.key_order_[section].push_back(key);
    }
    return t;
}

ConfigTree ConfigTree::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

uint64_t ConfigTree::hash() const {
    std::string text = emit();
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

const std::vector<std::string>& ConfigTree::key_order(const std::string& section) const {
    auto it = key_order_.find(section);
    if (it == key_order_.end()) throw ConfigError("missing section [" + section + "]");
    return it->second;
}

}  // namespace kik
