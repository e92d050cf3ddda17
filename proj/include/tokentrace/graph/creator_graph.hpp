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
#include <map>
#include <set>
#include <vector>

#include "../chain/ledger.hpp"
#include "../detect/scan.hpp"

namespace tokentrace::graph {

enum class creator_node_type : uint8_t { eoa_creator, contract_creator, counterfeit_token };

inline std::string_view to_string(creator_node_type t) {
    switch (t) {
        case creator_node_type::eoa_creator: return "eoa_creator";
        case creator_node_type::contract_creator: return "contract_creator";
        case creator_node_type::counterfeit_token: return "counterfeit_token";
    }
    return "eoa_creator";
}

/// Who created which counterfeit token. Factory-created tokens chain the
/// invoking EOA through the factory contract.
struct creator_graph {
    std::map<chain::address, creator_node_type> nodes{};
    std::set<std::pair<chain::address, chain::address>> edges{};
    std::map<chain::address, std::set<chain::address>> tokens_by_creator{};
    std::map<chain::address, std::set<chain::address>> targets_by_creator{};
    size_t contract_created_tokens = 0;

    void upgrade_node(const chain::address& a, creator_node_type t) {
        const auto [it, fresh] = nodes.emplace(a, t);
        if (!fresh && static_cast<uint8_t>(t) > static_cast<uint8_t>(it->second)) it->second = t;
    }
};

inline creator_graph build_creator_graph(const chain::indexed_ledger& ledger,
                                         const std::vector<detect::counterfeit_candidate>& counterfeits) {
    creator_graph g;
    std::set<chain::address> seen_tokens;
    for (const auto& c : counterfeits) {
        g.targets_by_creator[c.creator].insert(c.target.addr);
        if (!seen_tokens.insert(c.token).second) continue; // one token, many matched targets
        g.upgrade_node(c.token, creator_node_type::counterfeit_token);
        const bool factory_made = ledger.contract(c.creator) != nullptr;
        g.upgrade_node(c.creator,
                       factory_made ? creator_node_type::contract_creator : creator_node_type::eoa_creator);
        g.edges.emplace(c.creator, c.token);
        g.tokens_by_creator[c.creator].insert(c.token);
        if (factory_made) {
            ++g.contract_created_tokens;
            // the EOA that drove the factory, via the token's creation tx
            if (const auto* rec = ledger.contract(c.token)) {
                if (const auto* tx = ledger.tx(rec->creation_tx)) {
                    g.upgrade_node(tx->from, creator_node_type::eoa_creator);
                    g.edges.emplace(tx->from, c.creator);
                }
            }
        }
    }
    return g;
}

/// Symmetric matrix over the target list (cap_rank order): cell (A,B)
/// counts distinct creators with counterfeits of both A and B; the
/// diagonal counts creators per single target.
struct cooccurrence_matrix {
    std::vector<detect::target_token> targets{};
    std::vector<std::vector<size_t>> cells{};

    size_t at(size_t a, size_t b) const { return cells[a][b]; }
};

inline cooccurrence_matrix creator_cooccurrence(const creator_graph& g,
                                                std::vector<detect::target_token> targets) {
    std::stable_sort(targets.begin(), targets.end(), [](const auto& a, const auto& b) {
        if (a.cap_rank != b.cap_rank) return a.cap_rank < b.cap_rank;
        return a.addr < b.addr;
    });
    std::map<chain::address, size_t> index;
    for (size_t i = 0; i < targets.size(); ++i) index.emplace(targets[i].addr, i);

    cooccurrence_matrix m;
    m.targets = std::move(targets);
    m.cells.assign(m.targets.size(), std::vector<size_t>(m.targets.size(), 0));
    for (const auto& [creator, target_addrs] : g.targets_by_creator) {
        std::vector<size_t> cols;
        for (const auto& a : target_addrs) {
            const auto it = index.find(a);
            if (it != index.end()) cols.push_back(it->second);
        }
        for (size_t i = 0; i < cols.size(); ++i)
            for (size_t j = i; j < cols.size(); ++j) {
                m.cells[cols[i]][cols[j]] += 1;
                if (cols[i] != cols[j]) m.cells[cols[j]][cols[i]] += 1;
            }
    }
    return m;
}

} // namespace tokentrace::graph
