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

#include <cstdint>
#include <filesystem>

#include "../util/bigint.hpp"
#include "../util/jsonl.hpp"

namespace tokentrace::scam {

struct detector_config {
    uint64_t window_seconds = 7200;        // return must land within 2 hours
    rational rate_rel_tol = rational(1, 100);
    uint32_t min_airdrop_txs = 2;
    bigint min_eth_wei = bigint(10000000000000000LL); // 0.01 ETH dust floor
    rational usd_rate = rational(23364, 100);         // USD per ETH
};

namespace detail {

inline rational parse_config_decimal(const json& v, const char* key) {
    std::optional<rational> r;
    if (v.is_string())
        r = parse_decimal(v.get<std::string>());
    else if (v.is_number_integer())
        r = rational(bigint(v.get<int64_t>()));
    else if (v.is_number_float())
        r = parse_decimal(v.dump()); // shortest round-trip text of the literal
    if (!r) throw error(std::string("config: '") + key + "' is not a decimal number");
    return *r;
}

inline bigint parse_config_wei(const json& v, const char* key) {
    std::optional<bigint> r;
    if (v.is_string())
        r = parse_uint(v.get<std::string>());
    else if (v.is_number_unsigned())
        r = bigint(v.get<uint64_t>());
    if (!r) throw error(std::string("config: '") + key + "' is not a non-negative integer");
    return *r;
}

} // namespace detail

/// Reads a JSON config file; absent keys keep their defaults. Decimal
/// values may be strings ("0.01") to stay exact; float literals are
/// accepted and parsed from their shortest decimal form.
inline detector_config load_config(const std::filesystem::path& path) {
    const json doc = json::parse(read_text_file(path), nullptr, false);
    if (doc.is_discarded() || !doc.is_object()) throw error("config: " + path.string() + " is not a JSON object");
    detector_config cfg;
    for (const auto& [key, v] : doc.items()) {
        if (key == "window_seconds") {
            if (!v.is_number_unsigned()) throw error("config: 'window_seconds' is not a non-negative integer");
            cfg.window_seconds = v.get<uint64_t>();
        } else if (key == "rate_rel_tol") {
            cfg.rate_rel_tol = detail::parse_config_decimal(v, "rate_rel_tol");
        } else if (key == "min_airdrop_txs") {
            if (!v.is_number_unsigned()) throw error("config: 'min_airdrop_txs' is not a non-negative integer");
            cfg.min_airdrop_txs = static_cast<uint32_t>(v.get<uint64_t>());
        } else if (key == "min_eth_wei") {
            cfg.min_eth_wei = detail::parse_config_wei(v, "min_eth_wei");
        } else if (key == "usd_rate") {
            cfg.usd_rate = detail::parse_config_decimal(v, "usd_rate");
            if (cfg.usd_rate <= 0) throw error("config: 'usd_rate' must be positive");
        } else {
            throw error("config: unknown key '" + key + "'");
        }
    }
    return cfg;
}

} // namespace tokentrace::scam
