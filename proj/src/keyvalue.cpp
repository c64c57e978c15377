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

#include "a2g/keyvalue.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace a2g {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) {
        return {};
    }
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

}  // namespace

double parse_double(const std::string& text, const std::string& what) {
    const char* begin = text.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin || trim(std::string(end)) != "") {
        throw config_error(what + ": expected a number, got '" + text + "'");
    }
    return v;
}

std::int64_t parse_int(const std::string& text, const std::string& what) {
    const char* begin = text.c_str();
    char* end = nullptr;
    const long long v = std::strtoll(begin, &end, 10);
    if (end == begin || trim(std::string(end)) != "") {
        throw config_error(what + ": expected an integer, got '" + text + "'");
    }
    return v;
}

Vec3 parse_vec3(const std::string& text, const std::string& what) {
    std::istringstream in(text);
    Vec3 v;
    if (!(in >> v.x >> v.y >> v.z)) {
        throw config_error(what + ": expected three numbers, got '" + text + "'");
    }
    std::string rest;
    if (in >> rest) {
        throw config_error(what + ": trailing content in '" + text + "'");
    }
    return v;
}

KeyValueFile KeyValueFile::parse(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) {
        throw config_error("cannot open config file: " + file.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_text(buf.str(), file.string());
}

KeyValueFile KeyValueFile::parse_text(const std::string& text, const std::string& origin) {
    KeyValueFile kv;
    kv.origin_ = origin;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.resize(hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw config_error(origin + ":" + std::to_string(lineno) + ": expected 'key = value'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) {
            throw config_error(origin + ":" + std::to_string(lineno) + ": empty key");
        }
        kv.entries_.emplace_back(key, value);
    }
    return kv;
}

bool KeyValueFile::has(const std::string& key) const { return count(key) > 0; }

std::size_t KeyValueFile::count(const std::string& key) const {
    return static_cast<std::size_t>(std::count_if(
        entries_.begin(), entries_.end(), [&](const auto& e) { return e.first == key; }));
}

std::string KeyValueFile::get_string(const std::string& key) const {
    for (const auto& [k, v] : entries_) {
        if (k == key) {
            return v;
        }
    }
    throw config_error(origin_ + ": missing key '" + key + "'");
}

double KeyValueFile::get_double(const std::string& key) const {
    return parse_double(get_string(key), origin_ + ": " + key);
}

std::int64_t KeyValueFile::get_int(const std::string& key) const {
    return parse_int(get_string(key), origin_ + ": " + key);
}

Vec3 KeyValueFile::get_vec3(const std::string& key) const {
    return parse_vec3(get_string(key), origin_ + ": " + key);
}

std::string KeyValueFile::get_string_or(const std::string& key, const std::string& fallback) const {
    return has(key) ? get_string(key) : fallback;
}

double KeyValueFile::get_double_or(const std::string& key, double fallback) const {
    return has(key) ? get_double(key) : fallback;
}

std::int64_t KeyValueFile::get_int_or(const std::string& key, std::int64_t fallback) const {
    return has(key) ? get_int(key) : fallback;
}

Vec3 KeyValueFile::get_vec3_or(const std::string& key, const Vec3& fallback) const {
    return has(key) ? get_vec3(key) : fallback;
}

std::vector<std::string> KeyValueFile::get_all(const std::string& key) const {
    std::vector<std::string> out;
    for (const auto& [k, v] : entries_) {
        if (k == key) {
            out.push_back(v);
        }
    }
    return out;
}

std::vector<std::string> KeyValueFile::unknown_keys(const std::vector<std::string>& known) const {
    std::vector<std::string> out;
    for (const auto& [k, v] : entries_) {
        if (std::find(known.begin(), known.end(), k) == known.end() &&
            std::find(out.begin(), out.end(), k) == out.end()) {
            out.push_back(k);
        }
    }
    return out;
}

}  // namespace a2g
