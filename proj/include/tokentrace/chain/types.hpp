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
#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "../util/bigint.hpp"
#include "../util/hex.hpp"

namespace tokentrace::chain {

template <size_t N>
struct fixed_bytes {
    std::array<uint8_t, N> bytes{};

    auto operator<=>(const fixed_bytes&) const = default;

    bool is_zero() const {
        for (uint8_t b : bytes)
            if (b != 0) return false;
        return true;
    }

    static std::optional<fixed_bytes> from_hex(std::string_view text) {
        const auto raw = hex::decode(text);
        if (!raw || raw->size() != N) return std::nullopt;
        fixed_bytes out;
        std::copy(raw->begin(), raw->end(), out.bytes.begin());
        return out;
    }

    std::string to_hex() const { return hex::encode(bytes.data(), bytes.size()); }
};

using address = fixed_bytes<20>;
using hash32 = fixed_bytes<32>;

struct block {
    uint64_t number = 0;
    uint64_t timestamp = 0;
};

enum class call_type : uint8_t { call, create, suicide, staticcall, delegatecall };

inline std::optional<call_type> parse_call_type(std::string_view s) {
    if (s == "call") return call_type::call;
    if (s == "create") return call_type::create;
    if (s == "suicide") return call_type::suicide;
    if (s == "staticcall") return call_type::staticcall;
    if (s == "delegatecall") return call_type::delegatecall;
    return std::nullopt;
}

inline std::string_view to_string(call_type t) {
    switch (t) {
        case call_type::call: return "call";
        case call_type::create: return "create";
        case call_type::suicide: return "suicide";
        case call_type::staticcall: return "staticcall";
        case call_type::delegatecall: return "delegatecall";
    }
    return "call";
}

struct external_tx {
    hash32 hash{};
    uint64_t block = 0;
    address from{};
    std::optional<address> to{}; // absent for contract creation
    bigint value_wei = 0;
    std::vector<uint8_t> input{};
    bool status = false;
};

struct internal_tx {
    hash32 parent_hash{};
    uint64_t trace_index = 0;
    address from{};
    address to{};
    bigint value_wei = 0;
    call_type type = call_type::call;
};

struct contract_record {
    address addr{};
    address creator{};
    hash32 creation_tx{};
    std::vector<uint8_t> bytecode{};
    uint64_t created_block = 0;
    bool created_via_internal = false;
};

struct token_record {
    address addr{};
    std::string name{};
    std::string symbol{};
    uint32_t decimals = 0;
    bigint total_supply_raw = 0;
};

struct transfer_event {
    hash32 tx_hash{};
    uint64_t log_index = 0;
    address token{};
    address from{};
    address to{};
    bigint amount_raw = 0;
};

struct label_set {
    std::set<address> exchanges{};
    std::set<address> trusted_creators{};
    std::set<address> official_tokens{};
    std::set<address> migrated_tokens{};
};

/// One skipped input line: malformed JSON, schema violation or a
/// referential failure. Ingestion reports these instead of aborting.
struct rejection {
    std::string file{};
    size_t line = 0;
    std::string reason{};
};

} // namespace tokentrace::chain
