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

#include "a2g/csv.hpp"

#include <cstdio>
#include <fstream>

namespace a2g {

std::string format_number(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

CsvWriter::~CsvWriter() {
    if (!committed_) {
        try {
            commit();
        } catch (...) {
            // destructor must not throw; callers wanting the error call commit()
        }
    }
}

void CsvWriter::commit() {
    if (committed_) {
        return;
    }
    const std::filesystem::path tmp = file_.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw data_error("cannot open for writing: " + tmp.string());
        }
        out << buffer_.str();
        if (!out) {
            throw data_error("write failure: " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, file_);
    committed_ = true;
}

}  // namespace a2g
