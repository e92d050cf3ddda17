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

#include <atomic>
#include <mutex>
#include <thread>

#include "chain/ledger.hpp"
#include "detect/scan.hpp"
#include "graph/creator_graph.hpp"
#include "graph/money_flow.hpp"
#include "graph/token_stats.hpp"
#include "scam/aggregate.hpp"
#include "scam/config.hpp"
#include "util/sha256.hpp"
#include "version.hpp"

namespace tokentrace::pipeline {

/// Applies f to every item on up to `threads` workers; results land at
/// their input's index, so the output is independent of scheduling.
template <typename In, typename F>
auto parallel_map(const std::vector<In>& items, unsigned threads, F&& f)
    -> std::vector<std::invoke_result_t<F&, const In&>> {
    using Out = std::invoke_result_t<F&, const In&>;
    std::vector<Out> out(items.size());
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    if (items.size() < threads) threads = static_cast<unsigned>(items.empty() ? 1 : items.size());
    if (threads <= 1) {
        for (size_t i = 0; i < items.size(); ++i) out[i] = f(items[i]);
        return out;
    }
    std::atomic<size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr first_error;
    std::vector<std::thread> workers;
    workers.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
        workers.emplace_back([&] {
            while (true) {
                const size_t i = next.fetch_add(1);
                if (i >= items.size()) return;
                try {
                    out[i] = f(items[i]);
                } catch (...) {
                    const std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : workers) t.join();
    if (first_error) std::rethrow_exception(first_error);
    return out;
}

struct options {
    std::filesystem::path ledger_dir{};
    std::filesystem::path targets_path{};
    std::filesystem::path labels_path{};  // optional
    std::filesystem::path config_path{};  // optional
    std::filesystem::path out_dir{};
    unsigned threads = 0; // 0 = all cores
    uint32_t max_depth = 4;
};

struct analysis {
    std::vector<detect::target_token> targets{};
    chain::label_set labels{};
    chain::indexed_ledger ledger{};
    scam::detector_config config{};
    std::vector<detect::counterfeit_candidate> candidates{}; // verdicts set, scan order
    std::vector<detect::counterfeit_candidate> confirmed{};
    std::vector<chain::address> confirmed_tokens{}; // sorted, distinct
    std::vector<scam::airdrop_finding> airdrops{};  // token order
    std::vector<scam::arbitrage_evidence> arbitrage{};
    scam::victim_history_stats history{};
    scam::scam_summary summary{};

    std::set<chain::address> scam_eth_receivers() const {
        std::set<chain::address> out;
        for (const auto& f : airdrops)
            for (const auto& ev : f.evidences) out.insert(ev.eth_forward_to);
        for (const auto& ev : arbitrage) out.insert(ev.scam_eth_receiver);
        return out;
    }
};

inline analysis run_analysis(const options& opt) {
    analysis a;
    a.targets = detect::load_targets(opt.targets_path);
    if (a.targets.empty()) throw usage_error("targets file lists no targets");
    a.config = opt.config_path.empty() ? scam::detector_config{} : scam::load_config(opt.config_path);
    a.labels = opt.labels_path.empty() ? chain::label_set{} : chain::load_labels(opt.labels_path);
    for (const auto& t : a.targets) a.labels.official_tokens.insert(t.addr); // targets are official by definition
    a.ledger = chain::ingest(opt.ledger_dir, a.labels);

    auto partition = detect::apply_filters(detect::scan(a.ledger, a.targets), a.labels);
    a.confirmed = partition.confirmed;
    a.candidates.reserve(partition.total());
    for (auto& bin : {&partition.confirmed, &partition.filtered, &partition.needs_review})
        a.candidates.insert(a.candidates.end(), bin->begin(), bin->end());
    std::stable_sort(a.candidates.begin(), a.candidates.end(), [](const auto& x, const auto& y) {
        if (x.target.cap_rank != y.target.cap_rank) return x.target.cap_rank < y.target.cap_rank;
        if (!(x.target.addr == y.target.addr)) return x.target.addr < y.target.addr;
        return x.token < y.token;
    });

    std::set<chain::address> confirmed_set;
    for (const auto& c : a.confirmed) confirmed_set.insert(c.token);
    a.confirmed_tokens.assign(confirmed_set.begin(), confirmed_set.end());

    // airdrop first; tokens with a finding are excluded from arbitrage
    const auto findings = parallel_map(a.confirmed_tokens, opt.threads, [&](const chain::address& t) {
        return scam::detect_airdrop(a.ledger, t, a.config);
    });
    std::set<chain::address> airdrop_tokens;
    for (const auto& f : findings)
        if (f) {
            airdrop_tokens.insert(f->token);
            a.airdrops.push_back(*f);
        }
    std::vector<chain::address> arb_candidates;
    for (const auto& t : a.confirmed_tokens)
        if (!airdrop_tokens.count(t)) arb_candidates.push_back(t);
    const auto evidence_lists = parallel_map(arb_candidates, opt.threads, [&](const chain::address& t) {
        return scam::detect_arbitrage(a.ledger, t, a.config);
    });
    for (const auto& list : evidence_lists) a.arbitrage.insert(a.arbitrage.end(), list.begin(), list.end());

    a.history = scam::classify_victim_history(a.ledger, a.arbitrage, a.labels.official_tokens);
    a.summary = scam::aggregate(a.ledger, a.airdrops, a.arbitrage, a.history, a.config.usd_rate);
    return a;
}

struct graph_products {
    graph::creator_graph creators{};
    graph::cooccurrence_matrix cooc{};
    std::vector<graph::token_stats_row> stats{};
    graph::money_flow_graph flow{};
};

inline graph_products run_graphs(const analysis& a, uint32_t max_depth, unsigned threads) {
    graph_products g;
    g.creators = graph::build_creator_graph(a.ledger, a.confirmed);
    g.cooc = graph::creator_cooccurrence(g.creators, a.targets);
    g.stats = parallel_map(a.confirmed_tokens, threads,
                           [&](const chain::address& t) { return graph::token_stats(a.ledger, t); });
    g.flow = graph::trace_money_flow(a.ledger, a.scam_eth_receivers(), a.labels, max_depth);
    return g;
}

// --- serialization ---------------------------------------------------------

inline json candidate_json(const detect::counterfeit_candidate& c) {
    json o;
    o["token"] = c.token.to_hex();
    o["target"] = c.target.addr.to_hex();
    o["target_name"] = c.target.name;
    o["target_symbol"] = c.target.symbol;
    o["cap_rank"] = c.target.cap_rank;
    o["name_status"] = std::string(detect::to_string(c.match.name_status));
    o["symbol_status"] = std::string(detect::to_string(c.match.symbol_status));
    o["creator"] = c.creator.to_hex();
    o["verdict"] = std::string(detect::to_string(c.verdict));
    return o;
}

inline std::string candidates_jsonl(const std::vector<detect::counterfeit_candidate>& candidates) {
    std::string out;
    for (const auto& c : candidates) {
        out += candidate_json(c).dump();
        out += '\n';
    }
    return out;
}

inline std::string airdrop_findings_jsonl(const std::vector<scam::airdrop_finding>& findings) {
    std::string out;
    for (const auto& f : findings) {
        json o;
        o["token"] = f.token.to_hex();
        o["rate_tokens_per_eth"] = format_rational(f.rate, 18);
        o["evidence_count"] = f.evidences.size();
        o["victim_count"] = f.victims.size();
        o["eth_total_wei"] = f.eth_total_wei.str();
        o["eth_total"] = format_eth(f.eth_total_wei);
        o["evidences"] = json::array();
        for (const auto& ev : f.evidences) {
            json e;
            e["tx_hash"] = ev.tx_hash.to_hex();
            e["victim"] = ev.victim.to_hex();
            e["eth_in_wei"] = ev.eth_in_wei.str();
            e["tokens_out_raw"] = ev.tokens_out_raw.str();
            e["eth_forward_to"] = ev.eth_forward_to.to_hex();
            e["token_distributor"] = ev.token_distributor.to_hex();
            o["evidences"].push_back(std::move(e));
        }
        out += o.dump();
        out += '\n';
    }
    return out;
}

inline std::string arbitrage_evidence_jsonl(const std::vector<scam::arbitrage_evidence>& evidences) {
    std::string out;
    for (const auto& ev : evidences) {
        json o;
        o["victim"] = ev.victim.to_hex();
        o["eth_tx"] = ev.eth_tx.to_hex();
        o["eth_amount_wei"] = ev.eth_amount_wei.str();
        o["scam_eth_receiver"] = ev.scam_eth_receiver.to_hex();
        o["transfer_tx"] = ev.transfer_tx.to_hex();
        o["transfer_log_index"] = ev.transfer_log_index;
        o["token"] = ev.token.to_hex();
        o["token_distributor"] = ev.token_distributor.to_hex();
        o["delta_seconds"] = ev.delta_seconds;
        out += o.dump();
        out += '\n';
    }
    return out;
}

inline json summary_json(const scam::scam_summary& s) {
    const auto type_json = [](const scam::scam_type_summary& t) {
        json o;
        o["transactions"] = t.tx_count;
        o["victims"] = t.victim_count;
        o["eth_total"] = format_eth(t.eth_total_wei);
        o["eth_total_wei"] = t.eth_total_wei.str();
        o["usd_total"] = format_usd_cents(t.usd_cents);
        json roles;
        roles["token_contracts"] = t.roles.token_contracts.size();
        roles["token_creators"] = t.roles.token_creators.size();
        roles["eth_receivers"] = t.roles.eth_receivers.size();
        roles["token_distributors"] = t.roles.token_distributors.size();
        roles["distinct_addresses"] = t.roles.distinct_union().size();
        o["roles"] = std::move(roles);
        return o;
    };
    json o;
    o["airdrop"] = type_json(s.airdrop);
    o["arbitrage"] = type_json(s.arbitrage);
    json overall;
    overall["victims"] = s.overall_victims;
    overall["tokens"] = s.overall_tokens;
    overall["distinct_addresses"] = s.overall_distinct_addresses;
    overall["eth_total"] = format_eth(s.overall_eth_wei);
    overall["eth_total_wei"] = s.overall_eth_wei.str();
    overall["usd_total"] = format_usd_cents(s.overall_usd_cents);
    o["overall"] = std::move(overall);
    json overlap;
    overlap["victims_in_both"] = s.victims_in_both;
    overlap["secondary_victims"] = s.secondary_victims;
    overlap["type2_victims"] = s.type2_victims;
    overlap["type2_resent"] = s.type2_resent;
    overlap["type2_repeat_amount_greater"] = s.type2_repeat_greater;
    o["overlap"] = std::move(overlap);
    return o;
}

/// Table-2-style cell for one candidate: (row, column) where row is which
/// dimensions matched and column is identical only when every matched
/// dimension is identical.
inline std::pair<std::string, std::string> lexical_cell(const detect::match_class& m) {
    const bool name = m.name_status != detect::match_status::unrelated;
    const bool symbol = m.symbol_status != detect::match_status::unrelated;
    std::string row = name && symbol ? "both" : name ? "name" : "symbol";
    bool identical;
    if (name && symbol)
        identical = m.name_status == detect::match_status::identical
            && m.symbol_status == detect::match_status::identical;
    else if (name)
        identical = m.name_status == detect::match_status::identical;
    else
        identical = m.symbol_status == detect::match_status::identical;
    return {row, identical ? "identical" : "combo"};
}

inline json report_json(const analysis& a) {
    json per_target = json::array();
    for (const auto& t : a.targets) {
        size_t total = 0, confirmed = 0, filtered = 0, review = 0;
        for (const auto& c : a.candidates) {
            if (!(c.target.addr == t.addr)) continue;
            ++total;
            switch (c.verdict) {
                case detect::filter_verdict::confirmed: ++confirmed; break;
                case detect::filter_verdict::needs_review: ++review; break;
                default: ++filtered; break;
            }
        }
        json o;
        o["cap_rank"] = t.cap_rank;
        o["symbol"] = t.symbol;
        o["name"] = t.name;
        o["candidates"] = total;
        o["confirmed"] = confirmed;
        o["filtered"] = filtered;
        o["needs_review"] = review;
        per_target.push_back(std::move(o));
    }

    json cells;
    for (const char* row : {"symbol", "name", "both"}) {
        cells[row]["combo"] = 0;
        cells[row]["identical"] = 0;
    }
    for (const auto& c : a.candidates) {
        const auto [row, col] = lexical_cell(c.match);
        cells[row][col] = cells[row][col].get<uint64_t>() + 1;
    }

    json o;
    o["targets"] = std::move(per_target);
    o["lexical_cells"] = std::move(cells);
    o["scams"] = summary_json(a.summary);
    json totals;
    totals["tokens_scanned"] = a.ledger.token_count();
    totals["candidates"] = a.candidates.size();
    totals["confirmed_tokens"] = a.confirmed_tokens.size();
    o["totals"] = std::move(totals);
    return o;
}

inline json node_edge_json(const graph::creator_graph& g) {
    json nodes = json::array();
    for (const auto& [addr, type] : g.nodes) {
        json n;
        n["id"] = addr.to_hex();
        n["type"] = std::string(graph::to_string(type));
        nodes.push_back(std::move(n));
    }
    json edges = json::array();
    for (const auto& [src, dst] : g.edges) {
        json e;
        e["src"] = src.to_hex();
        e["dst"] = dst.to_hex();
        edges.push_back(std::move(e));
    }
    json o;
    o["nodes"] = std::move(nodes);
    o["edges"] = std::move(edges);
    o["contract_created_tokens"] = g.contract_created_tokens;
    return o;
}

inline json node_edge_json(const graph::money_flow_graph& g) {
    json nodes = json::array();
    for (const auto& [addr, type] : g.nodes) {
        json n;
        n["id"] = addr.to_hex();
        n["type"] = std::string(graph::to_string(type));
        nodes.push_back(std::move(n));
    }
    json edges = json::array();
    for (const auto& [pair, weight] : g.edges) {
        json e;
        e["src"] = pair.first.to_hex();
        e["dst"] = pair.second.to_hex();
        e["weight_wei"] = weight.str();
        edges.push_back(std::move(e));
    }
    json o;
    o["nodes"] = std::move(nodes);
    o["edges"] = std::move(edges);
    o["max_depth"] = g.max_depth;
    return o;
}

inline json cooccurrence_json(const graph::cooccurrence_matrix& m) {
    json o;
    o["targets"] = json::array();
    for (const auto& t : m.targets) o["targets"].push_back(t.symbol);
    o["matrix"] = json::array();
    for (const auto& row : m.cells) {
        json r = json::array();
        for (size_t v : row) r.push_back(v);
        o["matrix"].push_back(std::move(r));
    }
    return o;
}

inline std::string token_stats_csv(const std::vector<graph::token_stats_row>& rows) {
    std::string out = "token,tx_count,first_ts,last_ts,active_days,holders,total_supply_raw\n";
    for (const auto& r : rows) {
        out += r.token.to_hex();
        out += ',' + std::to_string(r.tx_count);
        out += ',' + std::to_string(r.first_transfer);
        out += ',' + std::to_string(r.last_transfer);
        out += ',' + std::to_string(r.active_days);
        out += ',' + std::to_string(r.holder_count);
        out += ',' + r.total_supply_raw.str();
        out += '\n';
    }
    return out;
}

// --- run manifest ------------------------------------------------------------

/// Collects output files in memory so the manifest can list every one of
/// them with its content hash; wall_ms is the only field that varies
/// between identical runs.
struct output_bundle {
    std::map<std::string, std::string> files{};
    json stages = json::object();

    void add(const std::string& name, std::string content) { files[name] = std::move(content); }
};

inline json ingest_stage_json(const chain::indexed_ledger& led) {
    json o;
    o["blocks"] = led.block_count();
    o["transactions"] = led.tx_count();
    o["internal_transactions"] = led.internal_count();
    o["contracts"] = led.contract_count();
    o["tokens"] = led.token_count();
    o["token_transfers"] = led.transfer_count();
    o["rejections"] = led.rejections().size();
    return o;
}

inline json rejections_json(const chain::indexed_ledger& led) {
    json arr = json::array();
    for (const auto& r : led.rejections()) {
        json o;
        o["file"] = r.file;
        o["line"] = r.line;
        o["reason"] = r.reason;
        arr.push_back(std::move(o));
    }
    return arr;
}

inline void write_outputs(const std::filesystem::path& out_dir, const options& opt, output_bundle& bundle,
                          uint64_t wall_ms) {
    std::filesystem::create_directories(out_dir);
    json outputs = json::object();
    for (const auto& [name, content] : bundle.files) {
        write_text_file(out_dir / name, content);
        json meta;
        meta["sha256"] = sha256_hex(content);
        meta["bytes"] = content.size();
        outputs[name] = std::move(meta);
    }
    json manifest;
    manifest["tool_version"] = std::string(version);
    json inputs;
    inputs["ledger"] = opt.ledger_dir.string();
    inputs["targets"] = opt.targets_path.string();
    inputs["labels"] = opt.labels_path.empty() ? json() : json(opt.labels_path.string());
    inputs["config"] = opt.config_path.empty() ? json() : json(opt.config_path.string());
    if (!opt.config_path.empty()) inputs["config_sha256"] = sha256_hex(read_text_file(opt.config_path));
    manifest["inputs"] = std::move(inputs);
    manifest["stages"] = bundle.stages;
    manifest["outputs"] = std::move(outputs);
    manifest["wall_ms"] = wall_ms;
    write_text_file(out_dir / "run_manifest.json", manifest.dump(2) + "\n");
}

} // namespace tokentrace::pipeline
