/*
   Copyright 2026 The tokentrace Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/
#pragma once

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace tokentrace {

// nlohmann::json keeps object keys in std::map order, which makes every
// serialized artifact byte-stable across runs and thread counts.
using json = nlohmann::json;

inline bool is_blank(std::string_view line) {
    for (char c : line)
        if (c != ' ' && c != '\t' && c != '\r') return false;
    return true;
}

/// Streams a JSONL file line by line. Blank lines are skipped. Lines that
/// fail to parse as a JSON object go to `on_bad(line_no, reason)`; parsed
/// objects go to `on_object(line_no, obj)`. Line numbers are 1-based.
template <typename OnObject, typename OnBad>
void for_each_jsonl(const std::filesystem::path& path, OnObject&& on_object, OnBad&& on_bad) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error("cannot open " + path.string());
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (is_blank(line)) continue;
        json obj = json::parse(line, nullptr, false);
        if (obj.is_discarded()) {
            on_bad(line_no, std::string("invalid JSON"));
            continue;
        }
        if (!obj.is_object()) {
            on_bad(line_no, std::string("line is not a JSON object"));
            continue;
        }
        on_object(line_no, obj);
    }
}

inline void write_text_file(const std::filesystem::path& path, std::string_view content) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw error("cannot write " + path.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw error("write failed: " + path.string());
}

inline std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error("cannot open " + path.string());
    std::string out((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return out;
}

} // namespace tokentrace
