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

#include <cstring>
#include <filesystem>
#include <set>
#include <string>
#include <vector>

#include "../chain/erc20.hpp"
#include "../chain/types.hpp"
#include "../detect/lexical.hpp"
#include "../util/rng.hpp"
#include "scenario.hpp"

namespace tokentrace::synth {

struct planted_counterfeit {
    chain::address token{};
    chain::address target{};
    std::string name_status{};
    std::string symbol_status{};
};

struct airdrop_truth {
    chain::address token{};
    chain::address creator{};
    chain::address distributor{};
    chain::address scam_receiver{};
    rational rate = 0;
    std::vector<chain::address> victims{};
    bigint eth_total_wei = 0;
    std::vector<chain::hash32> evidence_txs{};
};

struct arbitrage_expected {
    chain::address victim{};
    chain::hash32 eth_tx{};
    chain::hash32 transfer_tx{};
    uint64_t delta_seconds = 0;
    bigint eth_wei = 0;
};

struct arbitrage_truth {
    chain::address token{};
    chain::address creator{};
    chain::address distributor{};
    chain::address scam_receiver{};
    std::vector<chain::address> victims{};
    std::vector<chain::address> no_return_victims{};
    std::vector<chain::address> secondary_victims{};
    std::vector<chain::address> type2_victims{};
    std::vector<arbitrage_expected> expected{};
    bigint detectable_eth_wei = 0;
};

struct ground_truth {
    uint64_t seed = 0;
    std::vector<detect::target_token> targets{};
    std::vector<planted_counterfeit> counterfeits{}; // campaign tokens included
    std::vector<airdrop_truth> airdrops{};
    std::vector<arbitrage_truth> arbitrages{};
    std::vector<chain::address> exchanges{};
    std::vector<std::vector<chain::address>> laundering_chains{};
};

inline constexpr uint64_t genesis_timestamp = 1500000000;
inline constexpr uint64_t seconds_per_block = 15;

/// Minimal dispatcher-shaped runtime code carrying all six selectors.
inline std::string token_stub_bytecode() {
    std::vector<uint8_t> code = {0x60, 0x80, 0x60, 0x40, 0x52};
    for (const auto& sel : chain::erc20_selectors) {
        code.push_back(0x63); // PUSH4
        code.insert(code.end(), sel.begin(), sel.end());
        code.push_back(0x14); // EQ
    }
    code.push_back(0x00);
    return hex::encode(code.data(), code.size());
}

/// Every ERC-20 selector contains a byte above 0x0f, so code drawn from
/// 0x00..0x0f can never false-positive.
inline std::string plain_stub_bytecode(uint64_t variant) {
    std::vector<uint8_t> code;
    code.reserve(24);
    for (uint64_t j = 0; j < 24; ++j) code.push_back(static_cast<uint8_t>((variant + j) % 16));
    return hex::encode(code.data(), code.size());
}

namespace detail {

class generator {
public:
    generator(const scenario_config& cfg) : cfg_(cfg) { truth_.seed = cfg.seed; }

    ground_truth run(const std::filesystem::path& out_dir) {
        make_exchanges();
        make_targets();
        make_planted_counterfeits();
        for (uint32_t c = 0; c < cfg_.airdrop_campaigns.size(); ++c) make_airdrop_campaign(c);
        for (uint32_t c = 0; c < cfg_.arbitrage_campaigns.size(); ++c) make_arbitrage_campaign(c);
        make_laundering();
        make_noise();
        write_files(out_dir);
        return std::move(truth_);
    }

private:
    // --- deterministic identity derivation -------------------------------

    chain::address make_addr(std::string_view domain, uint64_t i) {
        rng_stream s(cfg_.seed, domain);
        chain::address a;
        for (int w = 0; w < 3; ++w) {
            const uint64_t v = s.at(i * 3 + w);
            const size_t off = size_t(w) * 8;
            for (size_t b = 0; b < 8 && off + b < 20; ++b)
                a.bytes[off + b] = static_cast<uint8_t>(v >> (8 * b));
        }
        if (!used_addrs_.insert(a).second) throw error("synth: address collision, change the seed");
        return a;
    }

    chain::hash32 make_hash(std::string_view domain, uint64_t i) {
        rng_stream s(cfg_.seed, domain);
        chain::hash32 h;
        for (int w = 0; w < 4; ++w) {
            const uint64_t v = s.at(i * 4 + w);
            for (size_t b = 0; b < 8; ++b) h.bytes[size_t(w) * 8 + b] = static_cast<uint8_t>(v >> (8 * b));
        }
        return h;
    }

    // --- record emission --------------------------------------------------

    chain::hash32 add_tx(uint64_t block, const chain::address& from, const chain::address* to,
                         const bigint& value, bool status = true, std::string_view input = "0x") {
        const chain::hash32 h = make_hash("tx", tx_counter_++);
        json o;
        o["hash"] = h.to_hex();
        o["block"] = block;
        o["from"] = from.to_hex();
        if (to)
            o["to"] = to->to_hex();
        else
            o["to"] = nullptr;
        o["value_wei"] = value.str();
        o["input"] = std::string(input);
        o["status"] = status;
        txs_.push_back(std::move(o));
        bump_block(block);
        return h;
    }

    void add_internal(const chain::hash32& parent, uint64_t trace, const chain::address& from,
                      const chain::address& to, const bigint& value) {
        json o;
        o["parent_hash"] = parent.to_hex();
        o["trace_index"] = trace;
        o["from"] = from.to_hex();
        o["to"] = to.to_hex();
        o["value_wei"] = value.str();
        o["call_type"] = "call";
        internal_.push_back(std::move(o));
    }

    void add_transfer(const chain::hash32& tx, uint64_t log_index, const chain::address& token,
                      const chain::address& from, const chain::address& to, const bigint& amount) {
        json o;
        o["tx_hash"] = tx.to_hex();
        o["log_index"] = log_index;
        o["token"] = token.to_hex();
        o["from"] = from.to_hex();
        o["to"] = to.to_hex();
        o["amount_raw"] = amount.str();
        transfers_.push_back(std::move(o));
    }

    void add_contract(const chain::address& addr, const chain::address& creator, const chain::hash32& ctx,
                      const std::string& bytecode, uint64_t block) {
        json o;
        o["address"] = addr.to_hex();
        o["creator"] = creator.to_hex();
        o["creation_tx"] = ctx.to_hex();
        o["bytecode"] = bytecode;
        o["created_block"] = block;
        contracts_.push_back(std::move(o));
    }

    void add_metadata(const chain::address& addr, const std::string& name, const std::string& symbol,
                      const bigint& supply) {
        json o;
        o["address"] = addr.to_hex();
        o["name"] = name;
        o["symbol"] = symbol;
        o["decimals"] = 18;
        o["total_supply_raw"] = supply.str();
        metadata_.push_back(std::move(o));
    }

    /// Creation tx + contract + metadata; the creation tx carries the mint
    /// when a treasury is named so replayed balances start funded.
    void add_token(const chain::address& token, const chain::address& creator, const std::string& name,
                   const std::string& symbol, const bigint& supply, const chain::address* treasury) {
        const uint64_t block = cursor_++;
        const chain::hash32 ctx = add_tx(block, creator, nullptr, 0);
        add_contract(token, creator, ctx, token_bytecode_, block);
        add_metadata(token, name, symbol, supply);
        if (treasury && supply > 0) add_transfer(ctx, 0, token, chain::address{}, *treasury, supply);
    }

    void bump_block(uint64_t b) {
        if (b > max_block_) max_block_ = b;
    }

    // --- scenario phases ---------------------------------------------------

    void make_exchanges() {
        for (uint32_t i = 0; i < cfg_.exchange_count; ++i)
            truth_.exchanges.push_back(make_addr("exchange", i));
    }

    std::string random_word(rng_stream& s, uint64_t i, size_t len, bool upper) {
        std::string w;
        for (size_t k = 0; k < len; ++k)
            w.push_back(static_cast<char>((upper ? 'A' : 'a') + s.at(i * 16 + k) % 26));
        if (!upper) w[0] = static_cast<char>(w[0] - 'a' + 'A');
        return w;
    }

    bool clashes(const std::string& norm) const {
        for (const auto& existing : reserved_identifiers_)
            if (existing.find(norm) != std::string::npos || norm.find(existing) != std::string::npos)
                return true;
        return false;
    }

    void make_targets() {
        // "classic" is the combo filler and plain words ride along in noise
        // names; no target identifier may collide with them
        reserved_identifiers_ = {"classic", "coin", "token", "x"};
        rng_stream sym_stream(cfg_.seed, "target_symbol");
        rng_stream name_stream(cfg_.seed, "target_name");
        for (uint32_t t = 0; t < cfg_.targets; ++t) {
            for (uint64_t attempt = 0;; ++attempt) {
                if (attempt > 512) throw error("synth: cannot draw distinct target identifiers");
                const uint64_t slot = uint64_t(t) * 1024 + attempt;
                const std::string symbol = random_word(sym_stream, slot, 4, true);
                const std::string name = random_word(name_stream, slot, 7, false);
                const std::string symbol_norm = normalize(symbol);
                const std::string name_norm = normalize(name);
                if (symbol_norm == name_norm || clashes(symbol_norm) || clashes(name_norm)) continue;
                reserved_identifiers_.insert(symbol_norm);
                reserved_identifiers_.insert(name_norm);
                detect::target_token target;
                target.addr = make_addr("target", t);
                target.name = name;
                target.symbol = symbol;
                target.cap_rank = int64_t(t) + 1;
                truth_.targets.push_back(target);
                break;
            }
        }
        // official contracts with supply minted to a per-target foundation
        for (uint32_t t = 0; t < cfg_.targets; ++t) {
            const chain::address foundation = make_addr("foundation", t);
            foundations_.push_back(foundation);
            add_token(truth_.targets[t].addr, foundation, truth_.targets[t].name, truth_.targets[t].symbol,
                      pow10(27), &foundation);
        }
    }

    void plant(const chain::address& token, const detect::target_token& target, const std::string& name,
               const std::string& symbol, const char* name_status, const char* symbol_status,
               const chain::address& creator, bool via_factory) {
        const uint64_t block = cursor_++;
        chain::hash32 ctx;
        if (via_factory) {
            ctx = add_tx(block, factory_owner_, &factory_, 0);
            add_contract(token, factory_, ctx, token_bytecode_, block);
        } else {
            ctx = add_tx(block, creator, nullptr, 0);
            add_contract(token, creator, ctx, token_bytecode_, block);
        }
        add_metadata(token, name, symbol, pow10(24));
        truth_.counterfeits.push_back({token, target.addr, name_status, symbol_status});
    }

    void make_planted_counterfeits() {
        const auto& mix = cfg_.counterfeits_per_target;
        if (cfg_.targets == 0 || mix.total() == 0) return;

        const uint32_t total_plants = mix.total() * cfg_.targets;
        const uint32_t creator_pool = std::max(1u, total_plants / 3); // some creators repeat
        const bool use_factory = total_plants >= 7;
        if (use_factory) {
            factory_owner_ = make_addr("factory_owner", 0);
            factory_ = make_addr("factory", 0);
            const uint64_t block = cursor_++;
            const chain::hash32 ctx = add_tx(block, factory_owner_, nullptr, 0);
            add_contract(factory_, factory_owner_, ctx, plain_stub_bytecode(7), block);
        }

        uint32_t plant_index = 0;
        const auto unrelated = [&](uint64_t i) { return "x" + std::to_string(100 + i); };
        for (uint32_t t = 0; t < cfg_.targets; ++t) {
            const auto& target = truth_.targets[t];
            const auto next_creator = [&]() {
                const uint32_t slot = plant_index % creator_pool;
                if (slot >= plant_creators_.size()) plant_creators_.push_back(make_addr("cf_creator", slot));
                return plant_creators_[slot];
            };
            const auto emit = [&](const std::string& name, const std::string& symbol, const char* ns,
                                  const char* ss) {
                const chain::address token = make_addr("cf_token", plant_index);
                const bool via_factory = use_factory && plant_index % 7 == 3;
                plant(token, target, name, symbol, ns, ss, next_creator(), via_factory);
                ++plant_index;
            };
            for (uint32_t i = 0; i < mix.both_identical; ++i)
                emit(target.name, target.symbol, "identical", "identical");
            for (uint32_t i = 0; i < mix.name_identical; ++i)
                emit(target.name, unrelated(plant_index), "identical", "unrelated");
            for (uint32_t i = 0; i < mix.symbol_identical; ++i)
                emit(unrelated(plant_index), target.symbol, "unrelated", "identical");
            for (uint32_t i = 0; i < mix.both_combo; ++i)
                emit(target.name + " Classic " + std::to_string(i + 1),
                     target.symbol + std::to_string(i + 1), "combo", "combo");
            for (uint32_t i = 0; i < mix.name_combo; ++i)
                emit(target.name + " Classic " + std::to_string(i + 1), unrelated(plant_index), "combo",
                     "unrelated");
            for (uint32_t i = 0; i < mix.symbol_combo; ++i)
                emit(unrelated(plant_index), target.symbol + std::to_string(i + 1), "unrelated", "combo");
        }
    }

    void make_airdrop_campaign(uint32_t c) {
        const auto& cc = cfg_.airdrop_campaigns[c];
        const auto& target = truth_.targets[c % cfg_.targets];

        airdrop_truth truth;
        truth.creator = make_addr("airdrop_creator", c);
        truth.distributor = make_addr("airdrop_distributor", c);
        truth.scam_receiver = c % 3 == 0 ? truth.distributor : make_addr("airdrop_receiver", c);
        truth.token = make_addr("airdrop_token", c);
        truth.rate = cc.rate_tokens_per_eth;

        const bigint eth_each = cc.eth_per_victim_wei;
        const bigint tokens_each =
            numerator(cc.rate_tokens_per_eth) * eth_each / denominator(cc.rate_tokens_per_eth);
        const bigint supply = tokens_each * cc.victims * 2;
        add_token(truth.token, truth.creator, target.name, target.symbol, supply, &truth.distributor);
        truth_.counterfeits.push_back({truth.token, target.addr, "identical", "identical"});

        for (uint32_t v = 0; v < cc.victims; ++v) {
            const chain::address victim = make_addr("victim", victim_counter_++);
            const uint64_t block = cursor_++;
            const chain::hash32 h = add_tx(block, victim, &truth.token, eth_each);
            add_transfer(h, 0, truth.token, truth.distributor, victim, tokens_each);
            if (v % 5 == 0 && eth_each > 1) {
                // forwarding split across two internal txs still sums exactly
                const bigint first = eth_each / 2;
                add_internal(h, 0, truth.token, truth.scam_receiver, first);
                add_internal(h, 1, truth.token, truth.scam_receiver, eth_each - first);
            } else {
                add_internal(h, 0, truth.token, truth.scam_receiver, eth_each);
            }
            truth.victims.push_back(victim);
            truth.evidence_txs.push_back(h);
            truth.eth_total_wei += eth_each;
        }
        laundering_sources_.push_back({truth.scam_receiver, truth.eth_total_wei});
        truth_.airdrops.push_back(std::move(truth));
    }

    void make_arbitrage_campaign(uint32_t c) {
        const auto& cc = cfg_.arbitrage_campaigns[c];
        const uint32_t target_idx = (c + uint32_t(cfg_.airdrop_campaigns.size())) % cfg_.targets;
        const auto& target = truth_.targets[target_idx];

        arbitrage_truth truth;
        truth.creator = make_addr("arb_creator", c);
        truth.distributor = make_addr("arb_distributor", c);
        truth.scam_receiver = c % 3 == 0 ? truth.distributor : make_addr("arb_receiver", c);
        truth.token = make_addr("arb_token", c);

        const uint32_t n_no_return = detail::fraction_count(cc.victims, cc.no_return_fraction);
        const uint32_t n_type2 = detail::fraction_count(cc.victims, cc.type2_fraction);
        const uint32_t n_secondary = detail::fraction_count(cc.victims, cc.secondary_fraction);

        const bigint return_amount = bigint(1000) * pow10(18);
        const bigint bait_amount = bigint(5) * pow10(18);
        bigint supply = return_amount * (bigint(cc.victims) * 2 + 2);
        add_token(truth.token, truth.creator, target.name, target.symbol, supply, &truth.distributor);
        truth_.counterfeits.push_back({truth.token, target.addr, "identical", "identical"});

        if (n_type2 > 0) {
            // the bait pool: real official tokens bought by the scam side
            const uint64_t block = cursor_++;
            const chain::hash32 h = add_tx(block, foundations_[target_idx], &target.addr, 0);
            add_transfer(h, 0, target.addr, foundations_[target_idx], truth.distributor,
                         bait_amount * n_type2);
        }

        rng_stream gaps(cfg_.seed, "arb_gap");
        rng_stream offsets(cfg_.seed, "arb_offset");
        uint64_t rng_slot = uint64_t(c) << 16;

        const auto send = [&](const chain::address& victim, uint64_t block, const bigint& value) {
            return add_tx(block, victim, &truth.scam_receiver, value);
        };
        const auto ret = [&](const chain::address& victim, uint64_t block) {
            const chain::hash32 h = add_tx(block, truth.distributor, &truth.token, 0);
            add_transfer(h, 0, truth.token, truth.distributor, victim, return_amount);
            return h;
        };
        const auto round = [&](const chain::address& victim, const bigint& value) {
            const uint64_t send_block = cursor_++;
            const uint64_t gap = gaps.range(rng_slot, 4, 466); // 60 s .. 6,990 s
            ++rng_slot;
            const chain::hash32 eth_tx = send(victim, send_block, value);
            const chain::hash32 transfer_tx = ret(victim, send_block + gap);
            cursor_ = std::max(cursor_, send_block + gap + 1);
            truth.expected.push_back({victim, eth_tx, transfer_tx, gap * seconds_per_block, value});
            truth.detectable_eth_wei += value;
        };

        for (uint32_t v = 0; v < cc.victims; ++v) {
            const chain::address victim = make_addr("victim", victim_counter_++);
            truth.victims.push_back(victim);
            const bigint base = cc.eth_per_victim_wei * (1 + v % 3);

            if (v < n_no_return) {
                const uint64_t block = cursor_++;
                send(victim, block, base);
                truth.no_return_victims.push_back(victim);
            } else if (v < n_no_return + n_type2) {
                round(victim, base);
                const uint64_t bait_block = cursor_ + offsets.range(rng_slot, 1, 5);
                ++rng_slot;
                const chain::hash32 h = add_tx(bait_block, truth.distributor, &target.addr, 0);
                add_transfer(h, 0, target.addr, truth.distributor, victim, bait_amount);
                cursor_ = bait_block + 1;
                round(victim, base * 2); // the repeat loss exceeds the first
                truth.type2_victims.push_back(victim);
            } else if (v < n_no_return + n_type2 + n_secondary) {
                round(victim, base);
                cursor_ += offsets.range(rng_slot, 1, 10);
                ++rng_slot;
                round(victim, base);
                truth.secondary_victims.push_back(victim);
            } else {
                round(victim, base);
            }
        }

        bigint received = truth.detectable_eth_wei;
        for (uint32_t v = 0; v < n_no_return; ++v) received += cc.eth_per_victim_wei * (1 + v % 3);
        laundering_sources_.push_back({truth.scam_receiver, received});
        truth_.arbitrages.push_back(std::move(truth));
    }

    void make_laundering() {
        for (size_t i = 0; i < laundering_sources_.size(); ++i) {
            const auto& [receiver, amount] = laundering_sources_[i];
            if (amount == 0) continue;
            std::vector<chain::address> chain_addrs{receiver};
            for (uint32_t d = 0; d < cfg_.laundering_depth; ++d)
                chain_addrs.push_back(make_addr("hop", i * 64 + d));
            chain_addrs.push_back(truth_.exchanges[i % truth_.exchanges.size()]);
            for (size_t k = 0; k + 1 < chain_addrs.size(); ++k)
                add_tx(cursor_++, chain_addrs[k], &chain_addrs[k + 1], amount);
            truth_.laundering_chains.push_back(std::move(chain_addrs));
        }
    }

    void make_noise() {
        const uint32_t pool_size = std::max(4u, cfg_.noise_txs / 8);
        std::vector<chain::address> pool;
        for (uint32_t i = 0; i < pool_size; ++i) pool.push_back(make_addr("noise_eoa", i));

        rng_stream pick(cfg_.seed, "noise_pick");
        rng_stream amount(cfg_.seed, "noise_amount");
        rng_stream place(cfg_.seed, "noise_block");
        const uint64_t span = std::max<uint64_t>(cursor_, 2);

        for (uint32_t i = 0; i < cfg_.noise_txs; ++i) {
            const chain::address& from = pool[pick.at(i * 2) % pool.size()];
            const chain::address& to = pool[pick.at(i * 2 + 1) % pool.size()];
            if (from == to) continue; // deterministic skip keeps streams aligned
            const uint64_t block = place.range(i, 1, span - 1);
            bigint value = bigint(amount.range(i, 1, 10000)) * pow10(15);
            if (i % 13 == 0) value = 0;
            const bool status = i % 10 != 0;
            const std::string_view input = i % 6 == 0 ? "0xdeadbeef" : "0x";
            add_tx(block, from, &to, value, status, input);
        }

        for (uint32_t i = 0; i < cfg_.noise_contracts; ++i) {
            const chain::address owner = pool[pick.at(0x10000 + i) % pool.size()];
            const chain::address addr = make_addr("noise_contract", i);
            const uint64_t block = cursor_++;
            const chain::hash32 ctx = add_tx(block, owner, nullptr, 0);
            add_contract(addr, owner, ctx, plain_stub_bytecode(i), block);
        }

        for (uint32_t i = 0; i < cfg_.noise_tokens; ++i) {
            const chain::address owner = pool[pick.at(0x20000 + i) % pool.size()];
            const chain::address token = make_addr("noise_token", i);
            const std::string ident = "x" + std::to_string(500 + i);
            add_token(token, owner, ident, ident, pow10(24), &owner);
            for (uint32_t k = 0; k < 3; ++k) {
                const chain::address& to = pool[pick.at(0x30000 + i * 8 + k) % pool.size()];
                if (to == owner) continue;
                const uint64_t block = cursor_++;
                const chain::hash32 h = add_tx(block, owner, &token, 0);
                add_transfer(h, 0, token, owner, to, pow10(18));
            }
        }
    }

    // --- output -------------------------------------------------------------

    void write_files(const std::filesystem::path& dir) {
        std::filesystem::create_directories(dir);

        std::string blocks;
        for (uint64_t b = 0; b <= max_block_ + 1; ++b) {
            json o;
            o["number"] = b;
            o["timestamp"] = genesis_timestamp + b * seconds_per_block;
            blocks += o.dump();
            blocks += '\n';
        }
        write_text_file(dir / "blocks.jsonl", blocks);
        write_jsonl(dir / "transactions.jsonl", txs_);
        write_jsonl(dir / "internal_transactions.jsonl", internal_);
        write_jsonl(dir / "contracts.jsonl", contracts_);
        write_jsonl(dir / "token_metadata.jsonl", metadata_);
        write_jsonl(dir / "token_transfers.jsonl", transfers_);

        json labels;
        labels["exchanges"] = json::array();
        for (const auto& e : truth_.exchanges) labels["exchanges"].push_back(e.to_hex());
        labels["trusted_creators"] = json::array();
        labels["official_tokens"] = json::array();
        for (const auto& t : truth_.targets) labels["official_tokens"].push_back(t.addr.to_hex());
        labels["migrated_tokens"] = json::array();
        write_text_file(dir / "labels.json", labels.dump(2) + "\n");

        json targets = json::array();
        for (const auto& t : truth_.targets) {
            json o;
            o["address"] = t.addr.to_hex();
            o["name"] = t.name;
            o["symbol"] = t.symbol;
            o["cap_rank"] = t.cap_rank;
            targets.push_back(std::move(o));
        }
        write_text_file(dir / "targets.json", targets.dump(2) + "\n");
        write_text_file(dir / "ground_truth.json", truth_json().dump(2) + "\n");
    }

    void write_jsonl(const std::filesystem::path& path, const std::vector<json>& rows) {
        std::string out;
        for (const auto& o : rows) {
            out += o.dump();
            out += '\n';
        }
        write_text_file(path, out);
    }

    json truth_json() const {
        json root;
        root["seed"] = truth_.seed;
        root["targets"] = json::array();
        for (const auto& t : truth_.targets) root["targets"].push_back(t.addr.to_hex());
        root["exchanges"] = json::array();
        for (const auto& e : truth_.exchanges) root["exchanges"].push_back(e.to_hex());
        root["planted_counterfeits"] = json::array();
        for (const auto& p : truth_.counterfeits) {
            json o;
            o["token"] = p.token.to_hex();
            o["target"] = p.target.to_hex();
            o["name_status"] = p.name_status;
            o["symbol_status"] = p.symbol_status;
            root["planted_counterfeits"].push_back(std::move(o));
        }
        root["airdrop_campaigns"] = json::array();
        for (const auto& a : truth_.airdrops) {
            json o;
            o["token"] = a.token.to_hex();
            o["creator"] = a.creator.to_hex();
            o["distributor"] = a.distributor.to_hex();
            o["scam_receiver"] = a.scam_receiver.to_hex();
            o["rate_tokens_per_eth"] = format_rational(a.rate, 18);
            o["eth_total_wei"] = a.eth_total_wei.str();
            o["victims"] = json::array();
            for (const auto& v : a.victims) o["victims"].push_back(v.to_hex());
            o["evidence_txs"] = json::array();
            for (const auto& h : a.evidence_txs) o["evidence_txs"].push_back(h.to_hex());
            root["airdrop_campaigns"].push_back(std::move(o));
        }
        root["arbitrage_campaigns"] = json::array();
        for (const auto& a : truth_.arbitrages) {
            json o;
            o["token"] = a.token.to_hex();
            o["creator"] = a.creator.to_hex();
            o["distributor"] = a.distributor.to_hex();
            o["scam_receiver"] = a.scam_receiver.to_hex();
            o["detectable_eth_wei"] = a.detectable_eth_wei.str();
            const auto addr_array = [](const std::vector<chain::address>& v) {
                json arr = json::array();
                for (const auto& a2 : v) arr.push_back(a2.to_hex());
                return arr;
            };
            o["victims"] = addr_array(a.victims);
            o["no_return_victims"] = addr_array(a.no_return_victims);
            o["secondary_victims"] = addr_array(a.secondary_victims);
            o["type2_victims"] = addr_array(a.type2_victims);
            o["expected_evidences"] = json::array();
            for (const auto& e : a.expected) {
                json ev;
                ev["victim"] = e.victim.to_hex();
                ev["eth_tx"] = e.eth_tx.to_hex();
                ev["transfer_tx"] = e.transfer_tx.to_hex();
                ev["delta_seconds"] = e.delta_seconds;
                ev["eth_wei"] = e.eth_wei.str();
                o["expected_evidences"].push_back(std::move(ev));
            }
            root["arbitrage_campaigns"].push_back(std::move(o));
        }
        root["laundering_chains"] = json::array();
        for (const auto& chain_addrs : truth_.laundering_chains) {
            json arr = json::array();
            for (const auto& a : chain_addrs) arr.push_back(a.to_hex());
            root["laundering_chains"].push_back(std::move(arr));
        }
        return root;
    }

    const scenario_config& cfg_;
    ground_truth truth_;
    std::set<chain::address> used_addrs_;
    std::set<std::string> reserved_identifiers_;
    std::vector<chain::address> foundations_;
    std::vector<chain::address> plant_creators_;
    chain::address factory_{};
    chain::address factory_owner_{};
    std::vector<std::pair<chain::address, bigint>> laundering_sources_;
    std::vector<json> txs_, internal_, contracts_, metadata_, transfers_;
    const std::string token_bytecode_ = token_stub_bytecode();
    uint64_t cursor_ = 1;
    uint64_t max_block_ = 1;
    uint64_t tx_counter_ = 0;
    uint64_t victim_counter_ = 0;
};

} // namespace detail

/// Generates the full file set (six JSONL inputs, labels.json,
/// targets.json, ground_truth.json) under out_dir. Identical (config,
/// seed) pairs produce byte-identical files.
inline ground_truth generate(const scenario_config& cfg, const std::filesystem::path& out_dir) {
    validate(cfg);
    detail::generator g(cfg);
    return g.run(out_dir);
}

} // namespace tokentrace::synth
