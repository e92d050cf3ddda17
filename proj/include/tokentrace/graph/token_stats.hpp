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

#include "../chain/ledger.hpp"

namespace tokentrace::graph {

struct token_stats_row {
    chain::address token{};
    size_t tx_count = 0;
    uint64_t first_transfer = 0;
    uint64_t last_transfer = 0;
    uint64_t active_days = 0;
    size_t holder_count = 0;
    bigint total_supply_raw = 0;
    bool inconsistent = false; // a replayed balance went negative
};

/// Replays every transfer of the token. Transfers from the zero address
/// mint, transfers to it burn; a balance that dips negative marks the
/// token inconsistent but the stats are still produced.
inline token_stats_row token_stats(const chain::indexed_ledger& ledger, const chain::address& token) {
    const auto* tok = ledger.token(token);
    if (!tok) throw error("token_stats: unknown token " + token.to_hex());

    token_stats_row row;
    row.token = token;
    row.total_supply_raw = tok->total_supply_raw;

    const chain::address zero{};
    std::map<chain::address, bigint> balances;
    const auto transfers = ledger.transfers_of(token);
    row.tx_count = transfers.size();
    for (const chain::transfer_event* e : transfers) {
        if (!(e->from == zero)) {
            bigint& b = balances[e->from];
            b -= e->amount_raw;
            if (b < 0) row.inconsistent = true;
        }
        if (!(e->to == zero)) balances[e->to] += e->amount_raw;
    }
    if (!transfers.empty()) {
        row.first_transfer = ledger.tx_timestamp(transfers.front()->tx_hash);
        row.last_transfer = ledger.tx_timestamp(transfers.back()->tx_hash);
        row.active_days = (row.last_transfer - row.first_transfer) / 86400;
    }
    for (const auto& [addr, balance] : balances)
        if (balance > 0) ++row.holder_count;
    return row;
}

} // namespace tokentrace::graph
