// SPDX-License-Identifier: Apache-2.0
//
// a2gchan - air-to-ground massive-MIMO channel synthesis and stationarity analysis
// Copyright (C) 2026 the a2gchan authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "a2g/types.hpp"

namespace a2g {

/// Line-oriented `key = value` text files. '#' starts a comment, blank lines
/// are skipped, keys may repeat (e.g. scatterer entries).
class KeyValueFile {
  public:
    static KeyValueFile parse(const std::filesystem::path& file);
    static KeyValueFile parse_text(const std::string& text, const std::string& origin);

    bool has(const std::string& key) const;
    std::size_t count(const std::string& key) const;

    /// Single-valued accessors; throw config_error on absence or bad syntax.
    std::string get_string(const std::string& key) const;
    double get_double(const std::string& key) const;
    std::int64_t get_int(const std::string& key) const;
    Vec3 get_vec3(const std::string& key) const;

    std::string get_string_or(const std::string& key, const std::string& fallback) const;
    double get_double_or(const std::string& key, double fallback) const;
    std::int64_t get_int_or(const std::string& key, std::int64_t fallback) const;
    Vec3 get_vec3_or(const std::string& key, const Vec3& fallback) const;

    std::vector<std::string> get_all(const std::string& key) const;

    /// Keys present in the file but not in `known`; used to reject typos.
    std::vector<std::string> unknown_keys(const std::vector<std::string>& known) const;

    const std::string& origin() const { return origin_; }

  private:
    std::string origin_;
    std::vector<std::pair<std::string, std::string>> entries_;
};

double parse_double(const std::string& text, const std::string& what);
std::int64_t parse_int(const std::string& text, const std::string& what);
Vec3 parse_vec3(const std::string& text, const std::string& what);

}  // namespace a2g
