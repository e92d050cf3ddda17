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
#include <filesystem>
#include <vector>

#include "../chain/ledger.hpp"
#include "lexical.hpp"

namespace tokentrace::detect {

enum class filter_verdict : uint8_t {
    confirmed,
    filtered_rule1, // token migrated to a new address
    filtered_rule2, // trusted creator releasing test tokens
    filtered_rule3, // official token sharing the identifier
    needs_review,
};

inline std::string_view to_string(filter_verdict v) {
    switch (v) {
        case filter_verdict::confirmed: return "confirmed";
        case filter_verdict::filtered_rule1: return "filtered_rule1";
        case filter_verdict::filtered_rule2: return "filtered_rule2";
        case filter_verdict::filtered_rule3: return "filtered_rule3";
        case filter_verdict::needs_review: return "needs_review";
    }
    return "needs_review";
}

struct counterfeit_candidate {
    chain::address token{};
    target_token target{};
    match_class match{};
    chain::address creator{};
    filter_verdict verdict = filter_verdict::confirmed;
};

/// Lexical pass over every ERC-20 token in the ledger. A token matching
/// several targets yields one candidate per target. Target contracts
/// themselves are excluded. Output order: (target cap_rank, target
/// address, token address).
inline std::vector<counterfeit_candidate> scan(const chain::indexed_ledger& ledger,
                                               const std::vector<target_token>& targets) {
    std::set<chain::address> target_addrs;
    for (const auto& t : targets) target_addrs.insert(t.addr);

    std::vector<counterfeit_candidate> out;
    for (const auto& target : targets) {
        for (const auto& [addr, token] : ledger.tokens()) {
            if (target_addrs.count(addr)) continue;
            const match_class match = classify_match(token.name, token.symbol, target);
            if (!match.is_match()) continue;
            counterfeit_candidate c;
            c.token = addr;
            c.target = target;
            c.match = match;
            const auto* contract = ledger.contract(addr);
            if (contract) c.creator = contract->creator;
            out.push_back(std::move(c));
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const counterfeit_candidate& a, const counterfeit_candidate& b) {
        if (a.target.cap_rank != b.target.cap_rank) return a.target.cap_rank < b.target.cap_rank;
        if (!(a.target.addr == b.target.addr)) return a.target.addr < b.target.addr;
        return a.token < b.token;
    });
    return out;
}

struct filter_partition {
    std::vector<counterfeit_candidate> confirmed;
    std::vector<counterfeit_candidate> filtered;
    std::vector<counterfeit_candidate> needs_review;

    size_t total() const { return confirmed.size() + filtered.size() + needs_review.size(); }
};

inline bool needs_short_symbol_review(const counterfeit_candidate& c) {
    if (c.match.name_status != match_status::unrelated) return false;
    if (c.match.symbol_status != match_status::combo) return false;
    return to_codepoints(normalize(c.target.symbol)).size() < boundary_rule_limit;
}

/// Applies the three allowlist rules, then routes weak short-symbol combo
/// matches to a review bin. Every input candidate lands in exactly one bin
/// with its verdict recorded.
inline filter_partition apply_filters(std::vector<counterfeit_candidate> candidates,
                                      const chain::label_set& labels) {
    filter_partition out;
    for (auto& c : candidates) {
        if (labels.migrated_tokens.count(c.token)) {
            c.verdict = filter_verdict::filtered_rule1;
            out.filtered.push_back(std::move(c));
        } else if (labels.trusted_creators.count(c.creator)) {
            c.verdict = filter_verdict::filtered_rule2;
            out.filtered.push_back(std::move(c));
        } else if (labels.official_tokens.count(c.token)) {
            c.verdict = filter_verdict::filtered_rule3;
            out.filtered.push_back(std::move(c));
        } else if (needs_short_symbol_review(c)) {
            c.verdict = filter_verdict::needs_review;
            out.needs_review.push_back(std::move(c));
        } else {
            c.verdict = filter_verdict::confirmed;
            out.confirmed.push_back(std::move(c));
        }
    }
    return out;
}

inline std::vector<target_token> load_targets(const std::filesystem::path& path) {
    const json doc = json::parse(read_text_file(path), nullptr, false);
    if (doc.is_discarded() || !doc.is_array()) throw error("targets: " + path.string() + " is not a JSON array");
    std::vector<target_token> out;
    for (const auto& v : doc) {
        if (!v.is_object()) throw error("targets: entries must be objects");
        target_token t;
        const auto addr = v.find("address");
        const auto name = v.find("name");
        const auto symbol = v.find("symbol");
        const auto rank = v.find("cap_rank");
        if (addr == v.end() || !addr->is_string()) throw error("targets: missing 'address'");
        const auto a = chain::address::from_hex(addr->get<std::string>());
        if (!a) throw error("targets: invalid address " + addr->get<std::string>());
        t.addr = *a;
        if (name != v.end() && name->is_string()) t.name = name->get<std::string>();
        if (symbol != v.end() && symbol->is_string()) t.symbol = symbol->get<std::string>();
        if (rank != v.end() && rank->is_number_integer()) t.cap_rank = rank->get<int64_t>();
        if (t.name.empty() && t.symbol.empty()) throw error("targets: entry needs a name or a symbol");
        out.push_back(std::move(t));
    }
    return out;
}

} // namespace tokentrace::detect
