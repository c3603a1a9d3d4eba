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

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "kik/types.hpp"

namespace kik {

// Key-value tree with [section] headers, `key = value` lines and '#' comments.
// Section and key order is preserved so emit -> parse -> emit is the identity.
class ConfigTree {
   public:
    void set(const std::string& section, const std::string& key, const std::string& value);
    bool has(const std::string& section, const std::string& key) const;
    const std::string& get(const std::string& section, const std::string& key) const;
    std::string get_or(const std::string& section, const std::string& key,
                       const std::string& fallback) const;

    double get_double(const std::string& section, const std::string& key) const;
    long get_long(const std::string& section, const std::string& key) const;
    bool get_bool(const std::string& section, const std::string& key) const;
    std::vector<double> get_double_list(const std::string& section, const std::string& key) const;
    std::vector<long> get_long_list(const std::string& section, const std::string& key) const;
    std::vector<std::string> get_string_list(const std::string& section,
                                             const std::string& key) const;

    // Rejects keys outside the allowed set; every allowed section must be
    // listed, unknown sections are errors too.
    void validate_keys(
        const std::map<std::string, std::vector<std::string>>& allowed) const;

    std::string emit() const;
    static ConfigTree parse(const std::string& text);
    static ConfigTree parse_file(const std::string& path);

    uint64_t hash() const;  // FNV-1a of the canonical emitted text

    const std::vector<std::string>& section_order() const { return section_order_; }
    const std::vector<std::string>& key_order(const std::string& section) const;

   private:
    std::vector<std::string> section_order_;
    std::map<std::string, std::vector<std::string>> key_order_;
    std::map<std::string, std::map<std::string, std::string>> data_;
};

}  // namespace kik
