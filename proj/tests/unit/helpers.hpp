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

#include <cstdlib>
#include <filesystem>
#include <map>
#include <string>

#include <tokentrace/tokentrace.hpp>

namespace testutil {

namespace tt = tokentrace;

inline tt::chain::address addr(uint64_t n) {
    tt::chain::address a{};
    for (int i = 0; i < 8; ++i) a.bytes[19 - i] = static_cast<uint8_t>(n >> (8 * i));
    return a;
}

inline tt::chain::hash32 hash(uint64_t n) {
    tt::chain::hash32 h{};
    for (int i = 0; i < 8; ++i) h.bytes[31 - i] = static_cast<uint8_t>(n >> (8 * i));
    return h;
}

inline std::string ah(uint64_t n) { return addr(n).to_hex(); }
inline std::string hh(uint64_t n) { return hash(n).to_hex(); }

/// Unique scratch directory, removed on destruction.
class temp_dir {
  public:
    temp_dir() {
        auto pattern = (std::filesystem::temp_directory_path() / "tokentrace_test_XXXXXX").string();
        if (!mkdtemp(pattern.data())) throw std::runtime_error("mkdtemp failed");
        path_ = pattern;
    }
    ~temp_dir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    temp_dir(const temp_dir&) = delete;
    temp_dir& operator=(const temp_dir&) = delete;

    const std::filesystem::path& path() const { return path_; }

  private:
    std::filesystem::path path_;
};

inline tt::json jblock(uint64_t number, uint64_t timestamp) {
    tt::json o;
    o["number"] = number;
    o["timestamp"] = timestamp;
    return o;
}

inline tt::json jtx(uint64_t h, uint64_t block, uint64_t from, std::optional<uint64_t> to,
                    const std::string& value, bool status = true, const std::string& input = "0x") {
    tt::json o;
    o["hash"] = hh(h);
    o["block"] = block;
    o["from"] = ah(from);
    o["to"] = to ? tt::json(ah(*to)) : tt::json();
    o["value_wei"] = value;
    o["input"] = input;
    o["status"] = status;
    return o;
}

inline tt::json jitx(uint64_t parent, uint64_t trace, uint64_t from, uint64_t to,
                     const std::string& value, const std::string& call = "call") {
    tt::json o;
    o["parent_hash"] = hh(parent);
    o["trace_index"] = trace;
    o["from"] = ah(from);
    o["to"] = ah(to);
    o["value_wei"] = value;
    o["call_type"] = call;
    return o;
}

inline tt::json jcontract(uint64_t a, uint64_t creator, uint64_t tx, const std::string& bytecode,
                          uint64_t block) {
    tt::json o;
    o["address"] = ah(a);
    o["creator"] = ah(creator);
    o["creation_tx"] = hh(tx);
    o["bytecode"] = bytecode;
    o["created_block"] = block;
    return o;
}

inline tt::json jmeta(uint64_t a, const std::string& name, const std::string& symbol,
                      uint32_t decimals = 18, const std::string& supply = "1000000000000000000000") {
    tt::json o;
    o["address"] = ah(a);
    o["name"] = name;
    o["symbol"] = symbol;
    o["decimals"] = decimals;
    o["total_supply_raw"] = supply;
    return o;
}

inline tt::json jtransfer(uint64_t tx, uint64_t log, uint64_t token, uint64_t from, uint64_t to,
                          const std::string& amount) {
    tt::json o;
    o["tx_hash"] = hh(tx);
    o["log_index"] = log;
    o["token"] = ah(token);
    o["from"] = ah(from);
    o["to"] = ah(to);
    o["amount_raw"] = amount;
    return o;
}

/// Accumulates JSONL rows per file and writes the full six-file corpus.
struct corpus {
    std::map<std::string, std::string> files = {
        {"blocks.jsonl", ""},          {"transactions.jsonl", ""}, {"internal_transactions.jsonl", ""},
        {"contracts.jsonl", ""},       {"token_metadata.jsonl", ""}, {"token_transfers.jsonl", ""},
    };

    void add(const std::string& file, const tt::json& row) { files[file] += row.dump() + "\n"; }
    void add_raw(const std::string& file, const std::string& line) { files[file] += line + "\n"; }

    void block(uint64_t n, uint64_t ts) { add("blocks.jsonl", jblock(n, ts)); }
    void tx(const tt::json& row) { add("transactions.jsonl", row); }
    void itx(const tt::json& row) { add("internal_transactions.jsonl", row); }
    void contract(const tt::json& row) { add("contracts.jsonl", row); }
    void meta(const tt::json& row) { add("token_metadata.jsonl", row); }
    void transfer(const tt::json& row) { add("token_transfers.jsonl", row); }

    /// Adds a contract row carrying the six-selector ERC-20 stub.
    void token_contract(uint64_t a, uint64_t creator, uint64_t tx, uint64_t block) {
        contract(jcontract(a, creator, tx, tt::synth::token_stub_bytecode(), block));
    }

    void write(const std::filesystem::path& dir) const {
        std::filesystem::create_directories(dir);
        for (const auto& [name, content] : files) tt::write_text_file(dir / name, content);
    }

    tt::chain::indexed_ledger ingest(const std::filesystem::path& dir,
                                     tt::chain::label_set labels = {}) const {
        write(dir);
        return tt::chain::ingest(dir, std::move(labels));
    }
};

inline tt::detect::target_token target(uint64_t a, const std::string& name, const std::string& symbol,
                                       int64_t rank) {
    return {addr(a), name, symbol, rank};
}

inline std::string eth(const std::string& whole) { // "1" -> wei string
    return (tt::parse_decimal(whole).value() * tt::wei_per_eth()).convert_to<tt::bigint>().str();
}

inline int run_cli(const std::string& args) {
    const std::string cmd = std::string(TOKENTRACE_BIN) + " " + args + " >/dev/null 2>&1";
    const int rc = std::system(cmd.c_str());
    return rc < 0 ? rc : WEXITSTATUS(rc);
}

} // namespace testutil
