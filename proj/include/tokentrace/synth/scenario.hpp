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
#include <string>
#include <vector>

#include "../util/bigint.hpp"
#include "../util/jsonl.hpp"

namespace tokentrace::synth {

struct counterfeit_mix {
    uint32_t both_identical = 0;
    uint32_t name_identical = 0;   // name matches, symbol unrelated
    uint32_t symbol_identical = 0; // symbol matches, name unrelated
    uint32_t both_combo = 0;
    uint32_t name_combo = 0;
    uint32_t symbol_combo = 0;

    uint32_t total() const {
        return both_identical + name_identical + symbol_identical + both_combo + name_combo + symbol_combo;
    }
};

struct airdrop_campaign_cfg {
    uint32_t victims = 0;
    rational rate_tokens_per_eth = 0;
    bigint eth_per_victim_wei = 0; // every victim sends exactly this much
};

struct arbitrage_campaign_cfg {
    uint32_t victims = 0;
    bigint eth_per_victim_wei = 0;
    rational secondary_fraction = 0; // victims scammed through two rounds
    rational type2_fraction = 0;     // victims baited with official tokens first
    rational no_return_fraction = 0; // victims who get nothing back (undetectable)
};

struct scenario_config {
    uint64_t seed = 0;
    uint32_t targets = 0;
    counterfeit_mix counterfeits_per_target{};
    std::vector<airdrop_campaign_cfg> airdrop_campaigns{};
    std::vector<arbitrage_campaign_cfg> arbitrage_campaigns{};
    uint32_t noise_txs = 0;
    uint32_t noise_tokens = 0;
    uint32_t noise_contracts = 0;
    uint32_t laundering_depth = 1; // intermediate hops between receiver and exchange
    uint32_t exchange_count = 1;
};

namespace detail {

inline uint32_t fraction_count(uint32_t total, const rational& fraction) {
    const bigint n = numerator(fraction) * total / denominator(fraction);
    return static_cast<uint32_t>(n.convert_to<uint64_t>());
}

inline bool in_unit_interval(const rational& r) { return r >= 0 && r <= 1; }

} // namespace detail

/// Rejects configs the generator cannot turn into a consistent,
/// detectable-under-default-thresholds ledger, before any file is written.
inline void validate(const scenario_config& cfg) {
    const bigint dust_floor = bigint(10000000000000000LL); // 0.01 ETH
    if (cfg.targets == 0
        && (cfg.counterfeits_per_target.total() > 0 || !cfg.airdrop_campaigns.empty()
            || !cfg.arbitrage_campaigns.empty()))
        throw error("scenario: counterfeits and campaigns need at least one target");
    if (cfg.exchange_count == 0 && (!cfg.airdrop_campaigns.empty() || !cfg.arbitrage_campaigns.empty()))
        throw error("scenario: campaigns need at least one exchange to launder into");
    if (cfg.laundering_depth > 32) throw error("scenario: laundering_depth above 32 is not supported");
    for (size_t i = 0; i < cfg.airdrop_campaigns.size(); ++i) {
        const auto& c = cfg.airdrop_campaigns[i];
        const std::string where = "scenario: airdrop campaign " + std::to_string(i);
        if (c.victims < 2) throw error(where + ": needs at least 2 victims to clear the evidence floor");
        if (c.rate_tokens_per_eth <= 0) throw error(where + ": rate must be positive");
        if (c.eth_per_victim_wei < dust_floor) throw error(where + ": per-victim ETH below the 0.01 dust floor");
        const bigint tokens_num = numerator(c.rate_tokens_per_eth) * c.eth_per_victim_wei;
        if (tokens_num % denominator(c.rate_tokens_per_eth) != 0)
            throw error(where + ": rate times per-victim ETH is not a whole token amount");
    }
    for (size_t i = 0; i < cfg.arbitrage_campaigns.size(); ++i) {
        const auto& c = cfg.arbitrage_campaigns[i];
        const std::string where = "scenario: arbitrage campaign " + std::to_string(i);
        if (c.victims == 0) throw error(where + ": needs at least 1 victim");
        if (c.eth_per_victim_wei < dust_floor) throw error(where + ": per-victim ETH below the 0.01 dust floor");
        if (!detail::in_unit_interval(c.secondary_fraction) || !detail::in_unit_interval(c.type2_fraction)
            || !detail::in_unit_interval(c.no_return_fraction))
            throw error(where + ": fractions must lie in [0, 1]");
        const uint64_t assigned = uint64_t(detail::fraction_count(c.victims, c.secondary_fraction))
            + detail::fraction_count(c.victims, c.type2_fraction)
            + detail::fraction_count(c.victims, c.no_return_fraction);
        if (assigned > c.victims) throw error(where + ": victim class fractions overlap");
    }
}

inline scenario_config load_scenario(const std::filesystem::path& path) {
    const json doc = json::parse(read_text_file(path), nullptr, false);
    if (doc.is_discarded() || !doc.is_object())
        throw error("scenario: " + path.string() + " is not a JSON object");

    const auto u32 = [&](const json& o, const char* key, uint32_t fallback) -> uint32_t {
        const auto it = o.find(key);
        if (it == o.end()) return fallback;
        if (!it->is_number_unsigned()) throw error(std::string("scenario: '") + key + "' must be a non-negative integer");
        return static_cast<uint32_t>(it->get<uint64_t>());
    };
    const auto decimal = [&](const json& o, const char* key, const rational& fallback) -> rational {
        const auto it = o.find(key);
        if (it == o.end()) return fallback;
        std::optional<rational> r;
        if (it->is_string()) r = parse_decimal(it->get<std::string>());
        else if (it->is_number_unsigned()) r = rational(bigint(it->get<uint64_t>()));
        else if (it->is_number_float()) r = parse_decimal(it->dump());
        if (!r) throw error(std::string("scenario: '") + key + "' must be a decimal number");
        return *r;
    };
    const auto eth_amount = [&](const json& o, const char* key) -> bigint {
        const rational eth = decimal(o, key, 0);
        const rational wei = eth * wei_per_eth();
        if (denominator(wei) != 1) throw error(std::string("scenario: '") + key + "' is finer than 1 wei");
        return numerator(wei);
    };

    scenario_config cfg;
    if (const auto it = doc.find("seed"); it != doc.end()) {
        if (!it->is_number_unsigned()) throw error("scenario: 'seed' must be a non-negative integer");
        cfg.seed = it->get<uint64_t>();
    }
    cfg.targets = u32(doc, "targets", 0);
    if (const auto it = doc.find("counterfeits_per_target"); it != doc.end()) {
        if (!it->is_object()) throw error("scenario: 'counterfeits_per_target' must be an object");
        cfg.counterfeits_per_target.both_identical = u32(*it, "both_identical", 0);
        cfg.counterfeits_per_target.name_identical = u32(*it, "name_identical", 0);
        cfg.counterfeits_per_target.symbol_identical = u32(*it, "symbol_identical", 0);
        cfg.counterfeits_per_target.both_combo = u32(*it, "both_combo", 0);
        cfg.counterfeits_per_target.name_combo = u32(*it, "name_combo", 0);
        cfg.counterfeits_per_target.symbol_combo = u32(*it, "symbol_combo", 0);
    }
    if (const auto it = doc.find("airdrop_campaigns"); it != doc.end()) {
        if (!it->is_array()) throw error("scenario: 'airdrop_campaigns' must be an array");
        for (const auto& o : *it) {
            if (!o.is_object()) throw error("scenario: airdrop campaign entries must be objects");
            airdrop_campaign_cfg c;
            c.victims = u32(o, "victims", 0);
            c.rate_tokens_per_eth = decimal(o, "rate_tokens_per_eth", 0);
            c.eth_per_victim_wei = eth_amount(o, "eth_per_victim");
            cfg.airdrop_campaigns.push_back(std::move(c));
        }
    }
    if (const auto it = doc.find("arbitrage_campaigns"); it != doc.end()) {
        if (!it->is_array()) throw error("scenario: 'arbitrage_campaigns' must be an array");
        for (const auto& o : *it) {
            if (!o.is_object()) throw error("scenario: arbitrage campaign entries must be objects");
            arbitrage_campaign_cfg c;
            c.victims = u32(o, "victims", 0);
            c.eth_per_victim_wei = eth_amount(o, "eth_per_victim");
            c.secondary_fraction = decimal(o, "secondary_fraction", 0);
            c.type2_fraction = decimal(o, "type2_fraction", 0);
            c.no_return_fraction = decimal(o, "no_return_fraction", 0);
            cfg.arbitrage_campaigns.push_back(std::move(c));
        }
    }
    cfg.noise_txs = u32(doc, "noise_txs", 0);
    cfg.noise_tokens = u32(doc, "noise_tokens", 0);
    cfg.noise_contracts = u32(doc, "noise_contracts", 0);
    cfg.laundering_depth = u32(doc, "laundering_depth", 1);
    cfg.exchange_count = u32(doc, "exchange_count", 1);
    validate(cfg);
    return cfg;
}

} // namespace tokentrace::synth
