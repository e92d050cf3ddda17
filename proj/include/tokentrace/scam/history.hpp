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

#include <map>
#include <set>
#include <vector>

#include "../chain/ledger.hpp"
#include "arbitrage.hpp"

namespace tokentrace::scam {

struct victim_history {
    chain::address victim{};
    uint64_t sends_to_scam = 0;        // successful value-bearing ETH sends to scam receivers
    bool secondary = false;            // deceived more than once
    bool type2 = false;                // got real tokens from the scam side before the last send
    bool resent_after_official = false;
    bool repeat_amount_greater = false;
};

struct victim_history_stats {
    std::map<chain::address, victim_history> per_victim{};
    size_t secondary_count = 0;
    size_t type2_count = 0;
    size_t type2_resent_count = 0;
    size_t type2_repeat_greater_count = 0;
};

/// Post-processes arbitrage evidence: counts how often each victim paid an
/// identified scam address, and detects the bait pattern where the scam
/// side first sends genuine official tokens to build trust.
inline victim_history_stats classify_victim_history(const chain::indexed_ledger& ledger,
                                                    const std::vector<arbitrage_evidence>& evidences,
                                                    const std::set<chain::address>& official_tokens) {
    std::set<chain::address> victims;
    std::set<chain::address> scam_receivers;
    std::set<chain::address> scam_side;
    for (const auto& ev : evidences) {
        victims.insert(ev.victim);
        scam_receivers.insert(ev.scam_eth_receiver);
        scam_side.insert(ev.scam_eth_receiver);
        scam_side.insert(ev.token_distributor);
    }

    // earliest official-token receipt from the scam side, per victim,
    // positioned by the chain ordinal of its carrying transaction
    std::map<chain::address, uint32_t> first_official_seq;
    for (const chain::address& token : official_tokens) {
        for (const chain::transfer_event* e : ledger.transfers_of(token)) {
            if (!victims.count(e->to) || !scam_side.count(e->from)) continue;
            const auto seq = ledger.tx_seq(e->tx_hash);
            if (!seq) continue;
            const auto [it, fresh] = first_official_seq.emplace(e->to, *seq);
            if (!fresh && *seq < it->second) it->second = *seq;
        }
    }

    victim_history_stats out;
    for (const chain::address& victim : victims) {
        victim_history h;
        h.victim = victim;

        std::vector<uint32_t> send_seqs; // ascending chain order
        for (uint32_t seq : ledger.outgoing_of(victim)) {
            const chain::external_tx& t = ledger.tx_at(seq);
            if (!t.status || !t.to || t.value_wei == 0) continue;
            if (!scam_receivers.count(*t.to)) continue;
            send_seqs.push_back(seq);
        }
        h.sends_to_scam = send_seqs.size();
        h.secondary = h.sends_to_scam > 1;

        const auto official = first_official_seq.find(victim);
        if (official != first_official_seq.end() && !send_seqs.empty()
            && official->second < send_seqs.back()) {
            h.type2 = true;
            const bigint first_amount = ledger.tx_at(send_seqs.front()).value_wei;
            for (uint32_t seq : send_seqs) {
                if (seq <= official->second) continue;
                h.resent_after_official = true;
                if (ledger.tx_at(seq).value_wei > first_amount) h.repeat_amount_greater = true;
            }
        }

        if (h.secondary) ++out.secondary_count;
        if (h.type2) ++out.type2_count;
        if (h.resent_after_official) ++out.type2_resent_count;
        if (h.repeat_amount_greater) ++out.type2_repeat_greater_count;
        out.per_victim.emplace(victim, std::move(h));
    }
    return out;
}

} // namespace tokentrace::scam
