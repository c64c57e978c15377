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

#include <filesystem>
#include <sstream>
#include <string>

#include "a2g/types.hpp"

namespace a2g {

/// Fixed "%.12g" rendering so identical runs emit identical bytes.
std::string format_number(double value);

/// Buffered CSV sink; the file is written to <name>.tmp and renamed into
/// place on commit so readers never observe partial output.
class CsvWriter {
  public:
    explicit CsvWriter(std::filesystem::path file) : file_(std::move(file)) {}
    ~CsvWriter();

    CsvWriter(const CsvWriter&) = delete;
    CsvWriter& operator=(const CsvWriter&) = delete;

    void header(const std::string& line) { buffer_ << line << "\n"; }

    template <typename... Fields>
    void row(const Fields&... fields) {
        bool first = true;
        ((buffer_ << (first ? "" : ",") << render(fields), first = false), ...);
        buffer_ << "\n";
    }

    void commit();

  private:
    static std::string render(double v) { return format_number(v); }
    static std::string render(const std::string& v) { return v; }
    static std::string render(const char* v) { return v; }
    static std::string render(std::size_t v) { return std::to_string(v); }
    static std::string render(int v) { return std::to_string(v); }

    std::filesystem::path file_;
    std::ostringstream buffer_;
    bool committed_ = false;
};

}  // namespace a2g
