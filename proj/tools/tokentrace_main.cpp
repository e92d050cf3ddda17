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
#include <chrono>
#include <iostream>

#include <CLI11.hpp>

#include <tokentrace/tokentrace.hpp>

namespace {

using namespace tokentrace;

uint64_t elapsed_ms(std::chrono::steady_clock::time_point start) {
    const auto d = std::chrono::steady_clock::now() - start;
    return static_cast<uint64_t>(std::chrono::duration_cast<std::chrono::milliseconds>(d).count());
}

int run(int argc, char** argv) {
    const auto start = std::chrono::steady_clock::now();

    CLI::App app{"tokentrace: counterfeit-token and scam forensics over exported ledgers"};
    app.require_subcommand(1);

    pipeline::options opt;
    opt.out_dir = ".";
    std::filesystem::path scenario_path;

    const auto add_ledger = [&](CLI::App* sub) {
        sub->add_option("--ledger", opt.ledger_dir, "directory of exported JSONL ledger files")
            ->required();
        sub->add_option("--labels", opt.labels_path, "labels JSON (exchanges, official tokens, ...)");
    };
    const auto add_targets = [&](CLI::App* sub) {
        sub->add_option("--targets", opt.targets_path, "official target tokens JSON array")->required();
    };
    const auto add_out = [&](CLI::App* sub) {
        sub->add_option("--out", opt.out_dir, "output directory (default: current)");
    };
    const auto add_analysis = [&](CLI::App* sub) {
        add_ledger(sub);
        add_targets(sub);
        add_out(sub);
        sub->add_option("--config", opt.config_path, "detector thresholds JSON");
        sub->add_option("--threads", opt.threads, "worker threads (default: all cores)");
    };

    auto* cmd_ingest = app.add_subcommand("ingest", "build the ledger index and report counts");
    add_ledger(cmd_ingest);
    add_out(cmd_ingest);

    auto* cmd_scan = app.add_subcommand("scan", "find counterfeit candidates and apply filters");
    add_analysis(cmd_scan);

    auto* cmd_detect = app.add_subcommand("detect", "run airdrop and arbitrage detection");
    add_analysis(cmd_detect);

    auto* cmd_graph = app.add_subcommand("graph", "emit creator, co-occurrence, money-flow and stats outputs");
    add_analysis(cmd_graph);
    cmd_graph->add_option("--max-depth", opt.max_depth, "money-flow BFS depth (default 4)");

    auto* cmd_report = app.add_subcommand("report", "merge scan and detection results into one JSON report");
    add_analysis(cmd_report);

    auto* cmd_synth = app.add_subcommand("synth", "generate a synthetic ledger from a scenario file");
    cmd_synth->add_option("--scenario", scenario_path, "scenario JSON")->required();
    add_out(cmd_synth);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    pipeline::output_bundle bundle;

    if (cmd_ingest->parsed()) {
        const auto labels = opt.labels_path.empty() ? chain::label_set{} : chain::load_labels(opt.labels_path);
        const auto ledger = chain::ingest(opt.ledger_dir, labels);
        bundle.stages["ingest"] = pipeline::ingest_stage_json(ledger);
        json report = pipeline::ingest_stage_json(ledger);
        report["rejections"] = pipeline::rejections_json(ledger);
        bundle.add("ingest_report.json", report.dump(2) + "\n");
    } else if (cmd_synth->parsed()) {
        const auto cfg = synth::load_scenario(scenario_path);
        synth::generate(cfg, opt.out_dir);
        for (const char* name :
             {"blocks.jsonl", "transactions.jsonl", "internal_transactions.jsonl", "contracts.jsonl",
              "token_metadata.jsonl", "token_transfers.jsonl", "labels.json", "targets.json",
              "ground_truth.json"})
            bundle.add(name, read_text_file(opt.out_dir / name));
        json stage;
        stage["seed"] = cfg.seed;
        stage["scenario_sha256"] = sha256_hex(read_text_file(scenario_path));
        bundle.stages["synth"] = std::move(stage);
    } else {
        const auto a = pipeline::run_analysis(opt);
        bundle.stages["ingest"] = pipeline::ingest_stage_json(a.ledger);
        json scan_stage;
        scan_stage["candidates"] = a.candidates.size();
        scan_stage["confirmed"] = a.confirmed.size();
        scan_stage["confirmed_tokens"] = a.confirmed_tokens.size();
        bundle.stages["scan"] = std::move(scan_stage);

        if (cmd_scan->parsed()) {
            bundle.add("candidates.jsonl", pipeline::candidates_jsonl(a.candidates));
        } else if (cmd_detect->parsed()) {
            bundle.add("candidates.jsonl", pipeline::candidates_jsonl(a.candidates));
            bundle.add("airdrop_findings.jsonl", pipeline::airdrop_findings_jsonl(a.airdrops));
            bundle.add("arbitrage_evidence.jsonl", pipeline::arbitrage_evidence_jsonl(a.arbitrage));
            bundle.add("summary.json", pipeline::summary_json(a.summary).dump(2) + "\n");
        } else if (cmd_graph->parsed()) {
            const auto g = pipeline::run_graphs(a, opt.max_depth, opt.threads);
            bundle.add("creator_graph.json", pipeline::node_edge_json(g.creators).dump(2) + "\n");
            bundle.add("cooccurrence.json", pipeline::cooccurrence_json(g.cooc).dump(2) + "\n");
            bundle.add("money_flow.json", pipeline::node_edge_json(g.flow).dump(2) + "\n");
            bundle.add("token_stats.csv", pipeline::token_stats_csv(g.stats));
        } else { // report
            bundle.add("report.json", pipeline::report_json(a).dump(2) + "\n");
        }
        if (!cmd_scan->parsed()) {
            json detect_stage;
            detect_stage["airdrop_findings"] = a.airdrops.size();
            detect_stage["arbitrage_evidences"] = a.arbitrage.size();
            detect_stage["victims"] = a.summary.overall_victims;
            bundle.stages["detect"] = std::move(detect_stage);
        }
    }

    pipeline::write_outputs(opt.out_dir, opt, bundle, elapsed_ms(start));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const tokentrace::usage_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
