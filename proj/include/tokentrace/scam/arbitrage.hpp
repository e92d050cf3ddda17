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
#include <vector>

#include "../chain/ledger.hpp"
#include "config.hpp"

namespace tokentrace::scam {

/// A counterfeit-token transfer paired with the receiver's most recent
/// preceding ETH payment: the fake "exchange" leg and the victim's real
/// money leg.
struct arbitrage_evidence {
    chain::address victim{};
    chain::hash32 eth_tx{};
    bigint eth_amount_wei = 0;
    chain::address scam_eth_receiver{};
    chain::hash32 transfer_tx{};
    uint64_t transfer_log_index = 0;
    chain::address token{};
    chain::address token_distributor{};
    uint64_t delta_seconds = 0;
};

/// For every transfer of the token, looks back through the receiver's
/// outgoing ETH within the open window (t - window, t) and picks the
/// latest qualifying send; chain order breaks timestamp ties. Transfers
/// with no qualifying send yield nothing.
inline std::vector<arbitrage_evidence> detect_arbitrage(const chain::indexed_ledger& ledger,
                                                        const chain::address& token,
                                                        const detector_config& cfg) {
    if (!ledger.token(token)) throw error("detect_arbitrage: unknown token " + token.to_hex());

    std::vector<arbitrage_evidence> out;
    for (const chain::transfer_event* e : ledger.transfers_of(token)) {
        const uint64_t t = ledger.tx_timestamp(e->tx_hash);
        if (t < 1) continue; // no strictly-earlier second can exist

        const auto& sends = ledger.outgoing_of(e->to);
        // first posting with timestamp > t - window (open left edge);
        // everything qualifies when the window reaches below zero
        auto lo = t > cfg.window_seconds
                      ? std::upper_bound(sends.begin(), sends.end(), t - cfg.window_seconds,
                                         [&](uint64_t ts, uint32_t seq) { return ts < ledger.tx_time_at(seq); })
                      : sends.begin();
        // first posting with timestamp >= t (open right edge)
        auto hi = std::lower_bound(lo, sends.end(), t,
                                   [&](uint32_t seq, uint64_t ts) { return ledger.tx_time_at(seq) < ts; });
        const chain::external_tx* chosen = nullptr;
        uint64_t chosen_time = 0;
        while (hi != lo) {
            --hi;
            const chain::external_tx& send = ledger.tx_at(*hi);
            if (!send.status || !send.to || send.value_wei < cfg.min_eth_wei || send.value_wei == 0) continue;
            chosen = &send;
            chosen_time = ledger.tx_time_at(*hi);
            break;
        }
        if (!chosen) continue;

        arbitrage_evidence ev;
        ev.victim = e->to;
        ev.eth_tx = chosen->hash;
        ev.eth_amount_wei = chosen->value_wei;
        ev.scam_eth_receiver = *chosen->to;
        ev.transfer_tx = e->tx_hash;
        ev.transfer_log_index = e->log_index;
        ev.token = token;
        ev.token_distributor = e->from;
        ev.delta_seconds = t - chosen_time;
        out.push_back(std::move(ev));
    }
    return out;
}

} // namespace tokentrace::scam
