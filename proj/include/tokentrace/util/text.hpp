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

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include <string>
#include <string_view>

#include "errors.hpp"

namespace tokentrace {

inline const icu::Normalizer2& nfkc_casefold() {
    static const icu::Normalizer2* inst = [] {
        UErrorCode status = U_ZERO_ERROR;
        const icu::Normalizer2* p = icu::Normalizer2::getNFKCCasefoldInstance(status);
        if (U_FAILURE(status) || p == nullptr) throw error("ICU NFKC_Casefold data unavailable");
        return p;
    }();
    return *inst;
}

/// Canonical form for name/symbol comparison: Unicode NFKC + case folding,
/// whitespace runs collapsed to a single space, leading/trailing stripped.
/// Full-width "ＵＳＤＴ" and "usdt" normalize to the same string.
inline std::string normalize(std::string_view raw) {
    UErrorCode status = U_ZERO_ERROR;
    const icu::UnicodeString in =
        icu::UnicodeString::fromUTF8(icu::StringPiece(raw.data(), static_cast<int32_t>(raw.size())));
    const icu::UnicodeString norm = nfkc_casefold().normalize(in, status);
    if (U_FAILURE(status)) throw error("unicode normalization failed");

    icu::UnicodeString collapsed;
    bool pending_space = false;
    for (int32_t i = 0; i < norm.length();) {
        const UChar32 c = norm.char32At(i);
        i += U16_LENGTH(c);
        if (u_isUWhiteSpace(c)) {
            if (!collapsed.isEmpty()) pending_space = true;
            continue;
        }
        if (pending_space) {
            collapsed.append(static_cast<UChar32>(' '));
            pending_space = false;
        }
        collapsed.append(c);
    }
    std::string out;
    collapsed.toUTF8String(out);
    return out;
}

/// Decodes UTF-8 into codepoints; malformed sequences become U+FFFD.
inline std::u32string to_codepoints(std::string_view utf8) {
    const icu::UnicodeString us =
        icu::UnicodeString::fromUTF8(icu::StringPiece(utf8.data(), static_cast<int32_t>(utf8.size())));
    std::u32string out;
    out.reserve(static_cast<size_t>(us.countChar32()));
    for (int32_t i = 0; i < us.length();) {
        const UChar32 c = us.char32At(i);
        i += U16_LENGTH(c);
        out.push_back(static_cast<char32_t>(c));
    }
    return out;
}

inline bool is_alnum(char32_t c) { return u_isalnum(static_cast<UChar32>(c)) != 0; }

} // namespace tokentrace
