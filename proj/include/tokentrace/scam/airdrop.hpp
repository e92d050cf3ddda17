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

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "../chain/ledger.hpp"
#include "config.hpp"

namespace tokentrace::scam {

/// One qualifying airdrop-purchase transaction: the victim pays the token
/// contract, the same transaction credits them with tokens and forwards
/// the full payment onward.
struct airdrop_evidence {
    chain::hash32 tx_hash{};
    chain::address victim{};
    bigint eth_in_wei = 0;
    bigint tokens_out_raw = 0;
    rational rate_tokens_per_eth = 0; // decimals-adjusted tokens per 1 ETH
    chain::address eth_forward_to{};
    chain::address token_distributor{};
};

struct airdrop_finding {
    chain::address token{};
    rational rate = 0;
    std::vector<airdrop_evidence> evidences{};
    std::set<chain::address> victims{};
    bigint eth_total_wei = 0;
};

inline rational median_rate(std::vector<rational> rates) {
    std::sort(rates.begin(), rates.end());
    const size_t n = rates.size();
    if (n % 2 == 1) return rates[n / 2];
    return (rates[n / 2 - 1] + rates[n / 2]) / 2;
}

/// Scans every payment into the token contract for the three-legged
/// pattern. Returns a finding only when at least cfg.min_airdrop_txs
/// evidences exist and every per-transaction exchange rate stays within
/// cfg.rate_rel_tol of the median rate.
inline std::optional<airdrop_finding> detect_airdrop(const chain::indexed_ledger& ledger,
                                                     const chain::address& token,
                                                     const detector_config& cfg) {
    const auto* tok = ledger.token(token);
    if (!tok) throw error("detect_airdrop: unknown token " + token.to_hex());

    std::vector<airdrop_evidence> evidences;
    for (uint32_t seq : ledger.incoming_of(token)) {
        const chain::external_tx& t = ledger.tx_at(seq);
        if (!t.status || t.value_wei < cfg.min_eth_wei || t.value_wei == 0) continue;

        // leg 2: token credit back to the payer, same transaction
        bigint tokens_out = 0;
        bigint largest_credit = -1;
        chain::address distributor{};
        for (const chain::transfer_event& e : ledger.transfers_in_tx(t.hash)) {
            if (!(e.token == token) || !(e.to == t.from)) continue;
            tokens_out += e.amount_raw;
            if (e.amount_raw > largest_credit) {
                largest_credit = e.amount_raw;
                distributor = e.from;
            }
        }
        if (tokens_out == 0) continue;

        // leg 3: the contract forwards everything it received; the scam
        // address is the one taking the largest share, ties to the lowest
        // trace index
        bigint forwarded = 0;
        std::map<chain::address, bigint> shares;
        std::map<chain::address, uint64_t> first_trace;
        for (const chain::internal_tx& itx : ledger.internal_txs_of(t.hash)) {
            if (!(itx.from == token) || itx.value_wei == 0) continue;
            forwarded += itx.value_wei;
            auto [it, fresh] = shares.emplace(itx.to, itx.value_wei);
            if (!fresh) it->second += itx.value_wei;
            first_trace.emplace(itx.to, itx.trace_index);
        }
        if (forwarded != t.value_wei) continue; // conservation violated or nothing forwarded

        chain::address forward_to{};
        bigint best_share = -1;
        uint64_t best_trace = 0;
        for (const auto& [addr, share] : shares) {
            const uint64_t trace = first_trace.at(addr);
            if (share > best_share || (share == best_share && trace < best_trace)) {
                best_share = share;
                best_trace = trace;
                forward_to = addr;
            }
        }

        airdrop_evidence ev;
        ev.tx_hash = t.hash;
        ev.victim = t.from;
        ev.eth_in_wei = t.value_wei;
        ev.tokens_out_raw = tokens_out;
        ev.rate_tokens_per_eth =
            rational(tokens_out * wei_per_eth(), t.value_wei * pow10(tok->decimals));
        ev.eth_forward_to = forward_to;
        ev.token_distributor = distributor;
        evidences.push_back(std::move(ev));
    }

    if (evidences.size() < cfg.min_airdrop_txs) return std::nullopt;

    std::vector<rational> rates;
    rates.reserve(evidences.size());
    for (const auto& ev : evidences) rates.push_back(ev.rate_tokens_per_eth);
    const rational median = median_rate(rates);
    if (median <= 0) return std::nullopt;
    for (const rational& r : rates) {
        const rational dev = r > median ? r - median : median - r;
        if (dev > cfg.rate_rel_tol * median) return std::nullopt; // rate is not fixed
    }

    airdrop_finding out;
    out.token = token;
    out.rate = median;
    for (const auto& ev : evidences) {
        out.victims.insert(ev.victim);
        out.eth_total_wei += ev.eth_in_wei;
    }
    out.evidences = std::move(evidences);
    return out;
}

} // namespace tokentrace::scam
