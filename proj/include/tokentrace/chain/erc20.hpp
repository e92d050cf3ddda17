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

#include <array>
#include <cstdint>
#include <vector>

namespace tokentrace::chain {

// 4-byte dispatch selectors of the six mandatory ERC-20 functions.
inline constexpr std::array<std::array<uint8_t, 4>, 6> erc20_selectors = {{
    {0x18, 0x16, 0x0d, 0xdd}, // totalSupply()
    {0x70, 0xa0, 0x82, 0x31}, // balanceOf(address)
    {0xa9, 0x05, 0x9c, 0xbb}, // transfer(address,uint256)
    {0x23, 0xb8, 0x72, 0xdd}, // transferFrom(address,address,uint256)
    {0x09, 0x5e, 0xa7, 0xb3}, // approve(address,uint256)
    {0xdd, 0x62, 0xed, 0x3e}, // allowance(address,address)
}};

inline bool contains_bytes(const std::vector<uint8_t>& haystack, const std::array<uint8_t, 4>& needle) {
    if (haystack.size() < needle.size()) return false;
    const size_t last = haystack.size() - needle.size();
    for (size_t i = 0; i <= last; ++i) {
        if (haystack[i] == needle[0] && haystack[i + 1] == needle[1] && haystack[i + 2] == needle[2]
            && haystack[i + 3] == needle[3])
            return true;
    }
    return false;
}

/// True iff the runtime bytecode contains all six mandatory ERC-20
/// selectors as contiguous byte sequences. Optional functions (name,
/// symbol, decimals) are deliberately not required.
inline bool detect_erc20(const std::vector<uint8_t>& bytecode) {
    for (const auto& sel : erc20_selectors)
        if (!contains_bytes(bytecode, sel)) return false;
    return true;
}

} // namespace tokentrace::chain
