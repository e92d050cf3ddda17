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

#include "../chain/ledger.hpp"

namespace tokentrace::graph {

enum class flow_node_type : uint8_t { scam, fund_transfer, exchange, frontier };

inline std::string_view to_string(flow_node_type t) {
    switch (t) {
        case flow_node_type::scam: return "scam";
        case flow_node_type::fund_transfer: return "fund_transfer";
        case flow_node_type::exchange: return "exchange";
        case flow_node_type::frontier: return "frontier";
    }
    return "frontier";
}

struct money_flow_graph {
    std::map<chain::address, flow_node_type> nodes{};
    std::map<std::pair<chain::address, chain::address>, bigint> edges{}; // weight = summed wei
    uint32_t max_depth = 0;

    size_t in_degree(const chain::address& a) const {
        size_t n = 0;
        for (const auto& [edge, weight] : edges)
            if (edge.second == a) ++n;
        return n;
    }
};

inline const bigint& default_min_flow_wei() {
    static const bigint v = bigint(1000000000000000LL); // 0.001 ETH
    return v;
}

/// Breadth-first expansion from the scam addresses along outgoing ETH
/// value (external and internal txs summed per address pair). Exchange
/// labels are sinks; depth counts node levels with the scam set at level
/// 1. Pair sums below min_edge_wei are pruned.
inline money_flow_graph trace_money_flow(const chain::indexed_ledger& ledger,
                                         const std::set<chain::address>& scam_addresses,
                                         const chain::label_set& labels, uint32_t max_depth = 4,
                                         const bigint& min_edge_wei = default_min_flow_wei()) {
    if (max_depth < 1) throw error("trace_money_flow: max_depth must be >= 1");
    money_flow_graph g;
    g.max_depth = max_depth;

    std::set<chain::address> level = scam_addresses;
    for (const auto& a : level)
        g.nodes.emplace(a, labels.exchanges.count(a) ? flow_node_type::exchange : flow_node_type::scam);

    for (uint32_t depth = 1; depth < max_depth && !level.empty(); ++depth) {
        std::set<chain::address> next;
        const bool next_expands = depth + 1 < max_depth;
        for (const chain::address& u : level) {
            if (g.nodes.at(u) == flow_node_type::exchange) continue; // sink

            std::map<chain::address, bigint> sums;
            for (uint32_t seq : ledger.outgoing_of(u)) {
                const chain::external_tx& t = ledger.tx_at(seq);
                if (!t.status || !t.to || t.value_wei == 0 || *t.to == u) continue;
                sums[*t.to] += t.value_wei;
            }
            for (uint32_t idx : ledger.internal_outgoing_of(u)) {
                const chain::internal_tx& t = ledger.all_internal()[idx];
                if (t.to == u) continue;
                sums[t.to] += t.value_wei;
            }
            for (const auto& [v, weight] : sums) {
                if (weight < min_edge_wei) continue;
                g.edges[{u, v}] = weight;
                if (g.nodes.count(v)) continue; // first discovery fixes the type
                const flow_node_type t = labels.exchanges.count(v) ? flow_node_type::exchange
                                         : next_expands           ? flow_node_type::fund_transfer
                                                                  : flow_node_type::frontier;
                g.nodes.emplace(v, t);
                next.insert(v);
            }
        }
        level = std::move(next);
    }
    return g;
}

} // namespace tokentrace::graph
