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
#include <atomic>
#include <fstream>

#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace testutil;
namespace tt = tokentrace;
using tt::bigint;
using tt::rational;

namespace {

const char* kGeneratedFiles[] = {
    "blocks.jsonl",      "transactions.jsonl",  "internal_transactions.jsonl",
    "contracts.jsonl",   "token_metadata.jsonl", "token_transfers.jsonl",
    "labels.json",       "targets.json",         "ground_truth.json",
};

/// Two targets, one counterfeit of every lexical class per target, one
/// airdrop campaign, one mixed arbitrage campaign, plus noise.
tt::synth::scenario_config demo_scenario(uint64_t seed = 42) {
    tt::synth::scenario_config cfg;
    cfg.seed = seed;
    cfg.targets = 2;
    cfg.counterfeits_per_target = {1, 1, 1, 1, 1, 1};
    tt::synth::airdrop_campaign_cfg air;
    air.victims = 3;
    air.rate_tokens_per_eth = rational(32000);
    air.eth_per_victim_wei = bigint(eth("1"));
    cfg.airdrop_campaigns.push_back(air);
    tt::synth::arbitrage_campaign_cfg arb;
    arb.victims = 10;
    arb.eth_per_victim_wei = bigint(eth("0.5"));
    arb.secondary_fraction = rational(2, 10);
    arb.type2_fraction = rational(1, 10);
    arb.no_return_fraction = rational(1, 10);
    cfg.arbitrage_campaigns.push_back(arb);
    cfg.noise_txs = 60;
    cfg.noise_tokens = 2;
    cfg.noise_contracts = 2;
    cfg.laundering_depth = 2;
    cfg.exchange_count = 2;
    return cfg;
}

tt::pipeline::options options_for(const std::filesystem::path& dir) {
    tt::pipeline::options opt;
    opt.ledger_dir = dir;
    opt.targets_path = dir / "targets.json";
    opt.labels_path = dir / "labels.json";
    opt.threads = 1;
    return opt;
}

} // namespace

TEST_CASE("scenario files parse with defaults and strict keys") {
    temp_dir dir;
    const auto path = dir.path() / "scenario.json";

    SECTION("minimal") {
        tt::write_text_file(path, R"({"seed": 7, "targets": 2})");
        const auto cfg = tt::synth::load_scenario(path);
        CHECK(cfg.seed == 7);
        CHECK(cfg.targets == 2);
        CHECK(cfg.counterfeits_per_target.total() == 0);
        CHECK(cfg.airdrop_campaigns.empty());
        CHECK(cfg.laundering_depth == 1);
        CHECK(cfg.exchange_count == 1);
    }
    SECTION("full") {
        tt::write_text_file(path, R"({
            "seed": 42, "targets": 3,
            "counterfeits_per_target": {"both_identical": 2, "symbol_combo": 1},
            "airdrop_campaigns": [{"victims": 4, "rate_tokens_per_eth": "32000", "eth_per_victim": "1"}],
            "arbitrage_campaigns": [{"victims": 8, "eth_per_victim": "0.25",
                                     "secondary_fraction": "0.25", "type2_fraction": "0.125",
                                     "no_return_fraction": "0.125"}],
            "noise_txs": 100, "noise_tokens": 5, "noise_contracts": 3,
            "laundering_depth": 2, "exchange_count": 2})");
        const auto cfg = tt::synth::load_scenario(path);
        CHECK(cfg.counterfeits_per_target.both_identical == 2);
        CHECK(cfg.counterfeits_per_target.symbol_combo == 1);
        REQUIRE(cfg.airdrop_campaigns.size() == 1);
        CHECK(cfg.airdrop_campaigns[0].rate_tokens_per_eth == rational(32000));
        CHECK(cfg.airdrop_campaigns[0].eth_per_victim_wei == bigint(eth("1")));
        REQUIRE(cfg.arbitrage_campaigns.size() == 1);
        CHECK(cfg.arbitrage_campaigns[0].secondary_fraction == rational(1, 4));
        CHECK(cfg.noise_txs == 100);
        CHECK(cfg.exchange_count == 2);
    }
    SECTION("malformed values") {
        tt::write_text_file(path, R"({"seed": "abc"})");
        CHECK_THROWS_AS(tt::synth::load_scenario(path), tt::error);
        tt::write_text_file(path, R"({"targets": -1})");
        CHECK_THROWS_AS(tt::synth::load_scenario(path), tt::error);
        tt::write_text_file(path, R"({"airdrop_campaigns": {}})");
        CHECK_THROWS_AS(tt::synth::load_scenario(path), tt::error);
        tt::write_text_file(path, "[]");
        CHECK_THROWS_AS(tt::synth::load_scenario(path), tt::error);
        // 19 decimal places: finer than 1 wei
        tt::write_text_file(path, R"({"targets": 1, "arbitrage_campaigns":
            [{"victims": 2, "eth_per_victim": "0.0000000000000000001"}]})");
        CHECK_THROWS_AS(tt::synth::load_scenario(path), tt::error);
    }
}

TEST_CASE("scenario validation rejects inconsistent configs before any write") {
    const auto expect_throw = [](tt::synth::scenario_config cfg) {
        temp_dir dir;
        const auto out = dir.path() / "generated";
        CHECK_THROWS_AS(tt::synth::generate(cfg, out), tt::error);
        CHECK_FALSE(std::filesystem::exists(out)); // nothing was created
    };

    {
        tt::synth::scenario_config cfg; // counterfeits without targets
        cfg.counterfeits_per_target.both_identical = 1;
        expect_throw(cfg);
    }
    {
        tt::synth::scenario_config cfg = demo_scenario();
        cfg.exchange_count = 0; // campaigns with nowhere to launder
        expect_throw(cfg);
    }
    {
        tt::synth::scenario_config cfg = demo_scenario();
        cfg.laundering_depth = 33;
        expect_throw(cfg);
    }
    {
        tt::synth::scenario_config cfg = demo_scenario();
        cfg.airdrop_campaigns[0].victims = 1; // below the evidence floor
        expect_throw(cfg);
    }
    {
        tt::synth::scenario_config cfg = demo_scenario();
        cfg.airdrop_campaigns[0].rate_tokens_per_eth = 0;
        expect_throw(cfg);
    }
    {
        tt::synth::scenario_config cfg = demo_scenario();
        cfg.airdrop_campaigns[0].eth_per_victim_wei = bigint("9000000000000000"); // dust
        expect_throw(cfg);
    }
    {
        tt::synth::scenario_config cfg = demo_scenario();
        // one third of a token per wei never yields whole token amounts
        cfg.airdrop_campaigns[0].rate_tokens_per_eth = rational(1, 3);
        expect_throw(cfg);
    }
    {
        tt::synth::scenario_config cfg = demo_scenario();
        cfg.arbitrage_campaigns[0].victims = 0;
        expect_throw(cfg);
    }
    {
        tt::synth::scenario_config cfg = demo_scenario();
        cfg.arbitrage_campaigns[0].type2_fraction = rational(3, 2); // above 1
        expect_throw(cfg);
    }
    {
        tt::synth::scenario_config cfg = demo_scenario();
        cfg.arbitrage_campaigns[0].secondary_fraction = rational(6, 10);
        cfg.arbitrage_campaigns[0].no_return_fraction = rational(6, 10); // 0.6 + 0.6 overlap
        expect_throw(cfg);
    }
}

TEST_CASE("generator output is byte-identical per (config, seed)") {
    temp_dir dir;
    const auto a = dir.path() / "a";
    const auto b = dir.path() / "b";
    const auto c = dir.path() / "c";
    tt::synth::generate(demo_scenario(), a);
    tt::synth::generate(demo_scenario(), b);
    tt::synth::generate(demo_scenario(43), c);

    bool any_difference = false;
    for (const char* name : kGeneratedFiles) {
        const std::string left = tt::read_text_file(a / name);
        CHECK(tt::sha256_hex(left) == tt::sha256_hex(tt::read_text_file(b / name)));
        if (tt::sha256_hex(left) != tt::sha256_hex(tt::read_text_file(c / name))) any_difference = true;
    }
    CHECK(any_difference); // a different seed must not reproduce the corpus
}

TEST_CASE("generated corpora ingest without a single rejection") {
    temp_dir dir;
    const auto truth = tt::synth::generate(demo_scenario(), dir.path());
    const auto labels = tt::chain::load_labels(dir.path() / "labels.json");
    const auto ledger = tt::chain::ingest(dir.path(), labels);

    CHECK(ledger.rejections().empty());
    // 2 official + 12 planted + 2 campaign + 2 noise tokens
    CHECK(ledger.token_count() == 18);
    CHECK(truth.counterfeits.size() == 14);
    for (const auto& p : truth.counterfeits) CHECK(ledger.token(p.token) != nullptr);
    for (const auto& t : truth.targets) CHECK(ledger.token(t.addr) != nullptr);
}

TEST_CASE("analysis recovers every planted counterfeit and campaign") {
    temp_dir dir;
    const auto truth = tt::synth::generate(demo_scenario(), dir.path());
    const auto a = tt::pipeline::run_analysis(options_for(dir.path()));

    SECTION("counterfeit set matches the plant list exactly") {
        std::set<tt::chain::address> planted;
        for (const auto& p : truth.counterfeits) planted.insert(p.token);
        const std::set<tt::chain::address> found(a.confirmed_tokens.begin(), a.confirmed_tokens.end());
        CHECK(found == planted);

        // per-pair lexical statuses match what was planted
        std::map<std::pair<tt::chain::address, tt::chain::address>, std::pair<std::string, std::string>>
            planted_status;
        for (const auto& p : truth.counterfeits)
            planted_status[{p.token, p.target}] = {p.name_status, p.symbol_status};
        CHECK(a.candidates.size() == planted_status.size());
        for (const auto& c : a.candidates) {
            const auto it = planted_status.find({c.token, c.target.addr});
            REQUIRE(it != planted_status.end());
            CHECK(std::string(tt::detect::to_string(c.match.name_status)) == it->second.first);
            CHECK(std::string(tt::detect::to_string(c.match.symbol_status)) == it->second.second);
            CHECK(c.verdict == tt::detect::filter_verdict::confirmed);
        }
    }

    SECTION("airdrop campaign is recovered with its exact rate") {
        REQUIRE(truth.airdrops.size() == 1);
        const auto& want = truth.airdrops[0];
        REQUIRE(a.airdrops.size() == 1);
        const auto& got = a.airdrops[0];
        CHECK(got.token == want.token);
        CHECK(got.rate == want.rate);
        CHECK(got.eth_total_wei == want.eth_total_wei);
        CHECK(got.victims
              == std::set<tt::chain::address>(want.victims.begin(), want.victims.end()));
        REQUIRE(got.evidences.size() == want.evidence_txs.size());
        for (size_t i = 0; i < got.evidences.size(); ++i) {
            CHECK(got.evidences[i].tx_hash == want.evidence_txs[i]);
            CHECK(got.evidences[i].victim == want.victims[i]);
            CHECK(got.evidences[i].eth_forward_to == want.scam_receiver);
            CHECK(got.evidences[i].token_distributor == want.distributor);
        }
    }

    SECTION("arbitrage evidence matches the expectations one for one") {
        REQUIRE(truth.arbitrages.size() == 1);
        const auto& want = truth.arbitrages[0];
        REQUIRE(a.arbitrage.size() == want.expected.size());
        bigint eth_sum = 0;
        for (size_t i = 0; i < want.expected.size(); ++i) {
            const auto& got = a.arbitrage[i];
            const auto& exp = want.expected[i];
            CHECK(got.victim == exp.victim);
            CHECK(got.eth_tx == exp.eth_tx);
            CHECK(got.transfer_tx == exp.transfer_tx);
            CHECK(got.delta_seconds == exp.delta_seconds);
            CHECK(got.eth_amount_wei == exp.eth_wei);
            CHECK(got.token == want.token);
            CHECK(got.scam_eth_receiver == want.scam_receiver);
            CHECK(got.token_distributor == want.distributor);
            eth_sum += got.eth_amount_wei;
        }
        CHECK(eth_sum == want.detectable_eth_wei);
        for (const auto& v : want.no_return_victims)
            for (const auto& got : a.arbitrage) CHECK_FALSE(got.victim == v);
    }

    SECTION("history and summary align with the planted victim classes") {
        const auto& arb = truth.arbitrages[0];
        CHECK(a.summary.airdrop.victim_count == 3);
        CHECK(a.summary.arbitrage.victim_count == 9); // 10 victims, 1 never paid back
        CHECK(a.summary.overall_victims == 12);
        CHECK(a.summary.victims_in_both == 0);
        CHECK(a.summary.secondary_victims
              == arb.secondary_victims.size() + arb.type2_victims.size());
        CHECK(a.summary.type2_victims == arb.type2_victims.size());
        CHECK(a.summary.type2_resent == arb.type2_victims.size());
        CHECK(a.summary.type2_repeat_greater == arb.type2_victims.size());
        CHECK(a.summary.airdrop.eth_total_wei == truth.airdrops[0].eth_total_wei);
        CHECK(a.summary.arbitrage.eth_total_wei == arb.detectable_eth_wei);

        for (const auto& v : arb.type2_victims) {
            const auto& h = a.history.per_victim.at(v);
            CHECK(h.type2);
            CHECK(h.resent_after_official);
            CHECK(h.repeat_amount_greater);
        }
        for (const auto& v : arb.secondary_victims) {
            const auto& h = a.history.per_victim.at(v);
            CHECK(h.secondary);
            CHECK_FALSE(h.type2);
        }
    }

    SECTION("graphs reach the exchanges through the laundering chains") {
        const auto g = tt::pipeline::run_graphs(a, 4, 1);
        CHECK(g.stats.size() == a.confirmed_tokens.size());

        std::set<tt::chain::address> planted;
        for (const auto& p : truth.counterfeits) planted.insert(p.token);
        size_t token_nodes = 0;
        for (const auto& [node, type] : g.creators.nodes)
            if (type == tt::graph::creator_node_type::counterfeit_token) {
                CHECK(planted.count(node));
                ++token_nodes;
            }
        CHECK(token_nodes == planted.size());

        // cooccurrence stays symmetric with diagonal bounds
        const auto& m = g.cooc;
        REQUIRE(m.targets.size() == 2);
        for (size_t i = 0; i < m.targets.size(); ++i)
            for (size_t j = 0; j < m.targets.size(); ++j) {
                CHECK(m.at(i, j) == m.at(j, i));
                CHECK(m.at(i, j) <= std::min(m.at(i, i), m.at(j, j)));
            }

        REQUIRE(truth.laundering_chains.size() == 2);
        for (const auto& chain_addrs : truth.laundering_chains) {
            REQUIRE(chain_addrs.size() == 4); // receiver, 2 hops, exchange
            CHECK(g.flow.nodes.at(chain_addrs.front()) == tt::graph::flow_node_type::scam);
            CHECK(g.flow.nodes.at(chain_addrs.back()) == tt::graph::flow_node_type::exchange);
            for (size_t k = 0; k + 1 < chain_addrs.size(); ++k)
                CHECK(g.flow.edges.count({chain_addrs[k], chain_addrs[k + 1]}));
            CHECK(g.flow.in_degree(chain_addrs.back()) >= 1);
        }
    }
}

TEST_CASE("campaigns that never pay back produce zero evidence") {
    tt::synth::scenario_config cfg;
    cfg.seed = 5;
    cfg.targets = 1;
    tt::synth::arbitrage_campaign_cfg arb;
    arb.victims = 4;
    arb.eth_per_victim_wei = bigint(eth("1"));
    arb.no_return_fraction = rational(1);
    cfg.arbitrage_campaigns.push_back(arb);

    temp_dir dir;
    const auto truth = tt::synth::generate(cfg, dir.path());
    CHECK(truth.arbitrages[0].expected.empty());
    CHECK(truth.arbitrages[0].no_return_victims.size() == 4);

    const auto a = tt::pipeline::run_analysis(options_for(dir.path()));
    CHECK(a.confirmed_tokens.size() == 1); // the campaign token still counterfeits
    CHECK(a.airdrops.empty());
    CHECK(a.arbitrage.empty());
    CHECK(a.summary.overall_victims == 0);
    CHECK(a.summary.overall_usd_cents == 0);
}

TEST_CASE("parallel map keeps input order and propagates failures") {
    std::vector<int> items(100);
    for (int i = 0; i < 100; ++i) items[size_t(i)] = i;

    SECTION("results land at their input index") {
        for (unsigned threads : {0u, 1u, 4u}) {
            const auto out =
                tt::pipeline::parallel_map(items, threads, [](const int& v) { return v * v; });
            REQUIRE(out.size() == 100);
            for (int i = 0; i < 100; ++i) CHECK(out[size_t(i)] == i * i);
        }
    }
    SECTION("the first thrown exception is rethrown") {
        CHECK_THROWS_AS(tt::pipeline::parallel_map(items, 4,
                                                   [](const int& v) -> int {
                                                       if (v == 37) throw tt::error("boom");
                                                       return v;
                                                   }),
                        tt::error);
    }
    SECTION("more threads than items is fine") {
        const std::vector<int> two = {1, 2};
        const auto out = tt::pipeline::parallel_map(two, 16, [](const int& v) { return v + 1; });
        REQUIRE(out.size() == 2);
        CHECK(out[0] == 2);
        CHECK(out[1] == 3);
    }
}

TEST_CASE("command line drives every stage against generated data") {
    temp_dir dir;
    const auto data = dir.path() / "data";
    tt::synth::generate(demo_scenario(), data);
    const std::string common = "--ledger " + data.string() + " --targets "
        + (data / "targets.json").string() + " --labels " + (data / "labels.json").string();

    SECTION("detect writes findings and a manifest") {
        const auto out = dir.path() / "out";
        REQUIRE(run_cli("detect " + common + " --out " + out.string()) == 0);
        for (const char* name : {"candidates.jsonl", "airdrop_findings.jsonl",
                                 "arbitrage_evidence.jsonl", "summary.json", "run_manifest.json"})
            CHECK(std::filesystem::exists(out / name));

        const auto summary = tt::json::parse(tt::read_text_file(out / "summary.json"));
        CHECK(summary["overall"]["victims"] == 12);
        CHECK(summary["airdrop"]["victims"] == 3);
        CHECK(summary["arbitrage"]["victims"] == 9);
        CHECK(summary["overlap"]["type2_victims"] == 1);

        const auto manifest = tt::json::parse(tt::read_text_file(out / "run_manifest.json"));
        REQUIRE(manifest["outputs"].is_object());
        for (const auto& [name, entry] : manifest["outputs"].items()) {
            const std::string content = tt::read_text_file(out / name);
            CHECK(entry["sha256"] == tt::sha256_hex(content));
            CHECK(entry["bytes"] == content.size());
        }
    }
    SECTION("scan lists one candidate line per planted counterfeit") {
        const auto out = dir.path() / "out_scan";
        REQUIRE(run_cli("scan " + common + " --out " + out.string()) == 0);
        const std::string body = tt::read_text_file(out / "candidates.jsonl");
        size_t lines = 0;
        for (char ch : body) lines += ch == '\n';
        CHECK(lines == 14);
    }
    SECTION("graph emits the four analytics files") {
        const auto out = dir.path() / "out_graph";
        REQUIRE(run_cli("graph " + common + " --out " + out.string() + " --max-depth 4") == 0);
        for (const char* name :
             {"creator_graph.json", "cooccurrence.json", "money_flow.json", "token_stats.csv"})
            CHECK(std::filesystem::exists(out / name));
        const std::string csv = tt::read_text_file(out / "token_stats.csv");
        CHECK(csv.rfind("token,tx_count,first_ts,last_ts,active_days,holders,total_supply_raw\n", 0)
              == 0);
        const auto flow = tt::json::parse(tt::read_text_file(out / "money_flow.json"));
        CHECK(flow["max_depth"] == 4);
    }
    SECTION("report rolls everything into one document") {
        const auto out = dir.path() / "out_report";
        REQUIRE(run_cli("report " + common + " --out " + out.string()) == 0);
        const auto report = tt::json::parse(tt::read_text_file(out / "report.json"));
        CHECK(report["targets"].size() == 2);
        CHECK(report["totals"]["confirmed_tokens"] == 14);
        CHECK(report["scams"]["overall"]["victims"] == 12);
    }
    SECTION("ingest reports stage counts") {
        const auto out = dir.path() / "out_ingest";
        REQUIRE(run_cli("ingest --ledger " + data.string() + " --out " + out.string()) == 0);
        const auto rep = tt::json::parse(tt::read_text_file(out / "ingest_report.json"));
        CHECK(rep["tokens"] == 18);
        CHECK(rep["rejections"].empty());
    }
    SECTION("synth reproduces the corpus under a manifest") {
        const auto scenario = dir.path() / "scenario.json";
        tt::write_text_file(scenario, R"({"seed": 9, "targets": 1,
            "counterfeits_per_target": {"both_identical": 1}})");
        const auto out = dir.path() / "out_synth";
        REQUIRE(run_cli("synth --scenario " + scenario.string() + " --out " + out.string()) == 0);
        const auto manifest = tt::json::parse(tt::read_text_file(out / "run_manifest.json"));
        CHECK(manifest["outputs"].size() == 9);
        for (const char* name : kGeneratedFiles) {
            REQUIRE(std::filesystem::exists(out / name));
            CHECK(manifest["outputs"][name]["sha256"]
                  == tt::sha256_hex(tt::read_text_file(out / name)));
        }
    }
}

TEST_CASE("command line exit codes distinguish usage from data errors") {
    temp_dir dir;

    SECTION("missing required flags") {
        CHECK(run_cli("detect --ledger " + dir.path().string()) == 1);
        CHECK(run_cli("scan") == 1);
        CHECK(run_cli("synth") == 1);
        CHECK(run_cli("definitely-not-a-command") == 1);
        CHECK(run_cli("") == 1); // a subcommand is required
    }
    SECTION("help exits zero") {
        CHECK(run_cli("--help") == 0);
        CHECK(run_cli("detect --help") == 0);
    }
    SECTION("empty target list is a usage error") {
        const auto targets = dir.path() / "targets.json";
        tt::write_text_file(targets, "[]");
        corpus c;
        c.write(dir.path() / "data");
        CHECK(run_cli("detect --ledger " + (dir.path() / "data").string() + " --targets "
                      + targets.string() + " --out " + (dir.path() / "out").string())
              == 1);
    }
    SECTION("unreadable ledger is a data error") {
        const auto targets = dir.path() / "targets.json";
        tt::write_text_file(
            targets, R"([{"address": "0x00000000000000000000000000000000000000aa", "name": "T"}])");
        CHECK(run_cli("detect --ledger " + (dir.path() / "missing").string() + " --targets "
                      + targets.string() + " --out " + (dir.path() / "out").string())
              == 2);
    }
    SECTION("invalid scenario file is a data error") {
        const auto scenario = dir.path() / "scenario.json";
        tt::write_text_file(scenario, R"({"targets": 0, "counterfeits_per_target": {"both_combo": 1}})");
        CHECK(run_cli("synth --scenario " + scenario.string() + " --out "
                      + (dir.path() / "out").string())
              == 2);
    }
}
