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

#include <string>
#include <string_view>

#include "../chain/types.hpp"
#include "../util/text.hpp"

namespace tokentrace::detect {

struct target_token {
    chain::address addr{};
    std::string name{};
    std::string symbol{};
    int64_t cap_rank = 0;
};

enum class match_status : uint8_t { identical, combo, unrelated };

inline std::string_view to_string(match_status s) {
    switch (s) {
        case match_status::identical: return "identical";
        case match_status::combo: return "combo";
        case match_status::unrelated: return "unrelated";
    }
    return "unrelated";
}

struct match_class {
    match_status name_status = match_status::unrelated;
    match_status symbol_status = match_status::unrelated;

    bool is_match() const {
        return name_status != match_status::unrelated || symbol_status != match_status::unrelated;
    }
};

// Targets shorter than this many codepoints get special treatment: a
// containment hit on such a symbol alone ("HT" somewhere in "XHTZ") is too
// weak to auto-confirm, so the filter stage quarantines it for review.
inline constexpr size_t boundary_rule_limit = 4;

/// True when needle occurs in hay with non-alphanumeric (or string-edge)
/// neighbours on both sides, as in "HT Coin" or "HT_huobi" but not
/// "LIGHTNING". Review tooling uses this to rank quarantined matches.
inline bool contains_at_word_boundary(const std::u32string& hay, const std::u32string& needle) {
    if (needle.empty() || needle.size() > hay.size()) return false;
    for (size_t pos = hay.find(needle); pos != std::u32string::npos; pos = hay.find(needle, pos + 1)) {
        const bool left_ok = pos == 0 || !is_alnum(hay[pos - 1]);
        const bool right_ok = pos + needle.size() == hay.size() || !is_alnum(hay[pos + needle.size()]);
        if (left_ok && right_ok) return true;
    }
    return false;
}

/// One identifier dimension. Inputs are raw; normalization happens here.
inline match_status classify_dimension(std::string_view candidate, std::string_view target) {
    const std::string target_norm = normalize(target);
    if (target_norm.empty()) return match_status::unrelated;
    const std::string cand_norm = normalize(candidate);
    if (cand_norm == target_norm) return match_status::identical;
    if (to_codepoints(cand_norm).find(to_codepoints(target_norm)) != std::u32string::npos)
        return match_status::combo;
    return match_status::unrelated;
}

inline match_class classify_match(std::string_view candidate_name, std::string_view candidate_symbol,
                                  const target_token& target) {
    match_class out;
    out.name_status = classify_dimension(candidate_name, target.name);
    out.symbol_status = classify_dimension(candidate_symbol, target.symbol);
    return out;
}

} // namespace tokentrace::detect
