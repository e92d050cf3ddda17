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

#include <set>
#include <vector>

#include "airdrop.hpp"
#include "arbitrage.hpp"
#include "history.hpp"

namespace tokentrace::scam {

struct role_sets {
    std::set<chain::address> token_contracts{};
    std::set<chain::address> token_creators{};
    std::set<chain::address> eth_receivers{};
    std::set<chain::address> token_distributors{};

    std::set<chain::address> distinct_union() const {
        std::set<chain::address> all = token_contracts;
        all.insert(token_creators.begin(), token_creators.end());
        all.insert(eth_receivers.begin(), eth_receivers.end());
        all.insert(token_distributors.begin(), token_distributors.end());
        return all;
    }
};

struct scam_type_summary {
    size_t tx_count = 0;
    size_t victim_count = 0;
    bigint eth_total_wei = 0;
    bigint usd_cents = 0;
    role_sets roles{};
    std::set<chain::address> victims{};
};

struct scam_summary {
    scam_type_summary airdrop{};
    scam_type_summary arbitrage{};
    size_t victims_in_both = 0;
    size_t secondary_victims = 0;
    size_t type2_victims = 0;
    size_t type2_resent = 0;
    size_t type2_repeat_greater = 0;
    size_t overall_victims = 0;
    size_t overall_tokens = 0;
    size_t overall_distinct_addresses = 0;
    bigint overall_eth_wei = 0;
    bigint overall_usd_cents = 0;
};

inline void add_creator(const chain::indexed_ledger& ledger, const chain::address& token, role_sets& roles) {
    roles.token_contracts.insert(token);
    if (const auto* c = ledger.contract(token)) roles.token_creators.insert(c->creator);
}

/// Folds detector output into the per-type and overall totals: evidence
/// counts, distinct victims, ETH sums, USD at the configured rate, and the
/// four scam-address roles with their distinct union.
inline scam_summary aggregate(const chain::indexed_ledger& ledger,
                              const std::vector<airdrop_finding>& airdrops,
                              const std::vector<arbitrage_evidence>& arbitrage,
                              const victim_history_stats& history, const rational& usd_rate) {
    if (usd_rate <= 0) throw error("aggregate: usd rate must be positive");
    scam_summary out;

    for (const auto& f : airdrops) {
        add_creator(ledger, f.token, out.airdrop.roles);
        out.airdrop.tx_count += f.evidences.size();
        out.airdrop.eth_total_wei += f.eth_total_wei;
        out.airdrop.victims.insert(f.victims.begin(), f.victims.end());
        for (const auto& ev : f.evidences) {
            out.airdrop.roles.eth_receivers.insert(ev.eth_forward_to);
            out.airdrop.roles.token_distributors.insert(ev.token_distributor);
        }
    }
    out.airdrop.victim_count = out.airdrop.victims.size();
    out.airdrop.usd_cents = usd_cents(out.airdrop.eth_total_wei, usd_rate);

    for (const auto& ev : arbitrage) {
        add_creator(ledger, ev.token, out.arbitrage.roles);
        ++out.arbitrage.tx_count;
        out.arbitrage.eth_total_wei += ev.eth_amount_wei;
        out.arbitrage.victims.insert(ev.victim);
        out.arbitrage.roles.eth_receivers.insert(ev.scam_eth_receiver);
        out.arbitrage.roles.token_distributors.insert(ev.token_distributor);
    }
    out.arbitrage.victim_count = out.arbitrage.victims.size();
    out.arbitrage.usd_cents = usd_cents(out.arbitrage.eth_total_wei, usd_rate);

    for (const auto& v : out.airdrop.victims)
        if (out.arbitrage.victims.count(v)) ++out.victims_in_both;
    out.secondary_victims = history.secondary_count;
    out.type2_victims = history.type2_count;
    out.type2_resent = history.type2_resent_count;
    out.type2_repeat_greater = history.type2_repeat_greater_count;

    std::set<chain::address> all_victims = out.airdrop.victims;
    all_victims.insert(out.arbitrage.victims.begin(), out.arbitrage.victims.end());
    out.overall_victims = all_victims.size();

    std::set<chain::address> all_tokens = out.airdrop.roles.token_contracts;
    all_tokens.insert(out.arbitrage.roles.token_contracts.begin(), out.arbitrage.roles.token_contracts.end());
    out.overall_tokens = all_tokens.size();

    std::set<chain::address> all_roles = out.airdrop.roles.distinct_union();
    const auto arb_roles = out.arbitrage.roles.distinct_union();
    all_roles.insert(arb_roles.begin(), arb_roles.end());
    out.overall_distinct_addresses = all_roles.size();

    out.overall_eth_wei = out.airdrop.eth_total_wei + out.arbitrage.eth_total_wei;
    out.overall_usd_cents = usd_cents(out.overall_eth_wei, usd_rate);
    return out;
}

} // namespace tokentrace::scam
