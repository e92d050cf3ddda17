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
#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "../util/jsonl.hpp"
#include "erc20.hpp"
#include "types.hpp"

namespace tokentrace::chain {

namespace detail {

inline const json* find_key(const json& o, const char* key) {
    const auto it = o.find(key);
    return it == o.end() ? nullptr : &*it;
}

inline std::optional<uint64_t> as_u64(const json* v) {
    if (!v) return std::nullopt;
    if (v->is_number_unsigned()) return v->get<uint64_t>();
    if (v->is_number_integer() && v->get<int64_t>() >= 0) return static_cast<uint64_t>(v->get<int64_t>());
    return std::nullopt;
}

inline std::optional<std::string> as_str(const json* v) {
    if (!v || !v->is_string()) return std::nullopt;
    return v->get<std::string>();
}

template <size_t N>
std::optional<fixed_bytes<N>> as_id(const json* v) {
    const auto s = as_str(v);
    if (!s) return std::nullopt;
    return fixed_bytes<N>::from_hex(*s);
}

inline std::optional<bigint> as_amount(const json* v) {
    const auto s = as_str(v);
    if (!s) return std::nullopt;
    return parse_uint(*s);
}

} // namespace detail

/// Read-only store over one exported ledger. Built once by ledger_builder,
/// then queried concurrently. Canonical transaction order ("chain order")
/// is (block number, position in the transactions file); indexes into the
/// transaction vector double as ordinals in that order.
class indexed_ledger {
public:
    size_t block_count() const { return blocks_.size(); }
    size_t tx_count() const { return txs_.size(); }
    size_t internal_count() const { return internal_.size(); }
    size_t transfer_count() const { return transfers_.size(); }
    size_t token_count() const { return tokens_.size(); }
    size_t contract_count() const { return contracts_.size(); }

    std::optional<uint64_t> block_timestamp(uint64_t number) const {
        const auto it = std::lower_bound(blocks_.begin(), blocks_.end(), number,
                                         [](const block& b, uint64_t n) { return b.number < n; });
        if (it == blocks_.end() || it->number != number) return std::nullopt;
        return it->timestamp;
    }

    const external_tx* tx(const hash32& h) const {
        const auto it = tx_index_.find(h);
        return it == tx_index_.end() ? nullptr : &txs_[it->second];
    }

    std::optional<uint32_t> tx_seq(const hash32& h) const {
        const auto it = tx_index_.find(h);
        if (it == tx_index_.end()) return std::nullopt;
        return it->second;
    }

    const external_tx& tx_at(uint32_t seq) const { return txs_[seq]; }
    uint64_t tx_time_at(uint32_t seq) const { return tx_time_[seq]; }

    uint64_t tx_timestamp(const hash32& h) const {
        const auto seq = tx_seq(h);
        if (!seq) throw error("unknown transaction " + h.to_hex());
        return tx_time_[*seq];
    }

    std::vector<const external_tx*> txs_in_block_range(uint64_t lo, uint64_t hi) const {
        std::vector<const external_tx*> out;
        if (lo > hi) return out;
        auto first = std::lower_bound(txs_.begin(), txs_.end(), lo,
                                      [](const external_tx& t, uint64_t n) { return t.block < n; });
        for (auto it = first; it != txs_.end() && it->block <= hi; ++it) out.push_back(&*it);
        return out;
    }

    /// Chain-order ordinals of all external txs sent by `a`.
    const std::vector<uint32_t>& outgoing_of(const address& a) const {
        const auto it = outgoing_.find(a);
        return it == outgoing_.end() ? empty_postings_ : it->second;
    }

    /// Chain-order ordinals of all external txs with `to == a`.
    const std::vector<uint32_t>& incoming_of(const address& a) const {
        const auto it = incoming_.find(a);
        return it == incoming_.end() ? empty_postings_ : it->second;
    }

    /// Successful, value-bearing external txs to `recipient` with timestamp
    /// in the closed interval [t_start, t_end], in chain order.
    std::vector<const external_tx*> eth_sends_to(const address& recipient, uint64_t t_start,
                                                 uint64_t t_end) const {
        if (t_start > t_end) throw error("eth_sends_to: inverted time range");
        std::vector<const external_tx*> out;
        const auto& posting = incoming_of(recipient);
        auto it = std::lower_bound(posting.begin(), posting.end(), t_start,
                                   [this](uint32_t seq, uint64_t t) { return tx_time_[seq] < t; });
        for (; it != posting.end() && tx_time_[*it] <= t_end; ++it) {
            const external_tx& t = txs_[*it];
            if (t.status && t.value_wei > 0) out.push_back(&t);
        }
        return out;
    }

    std::span<const internal_tx> internal_txs_of(const hash32& parent) const {
        const auto it = internal_ranges_.find(parent);
        if (it == internal_ranges_.end()) return {};
        return {internal_.data() + it->second.first, it->second.second - it->second.first};
    }

    /// Indices into all_internal() of value-bearing internal txs sent by `a`.
    const std::vector<uint32_t>& internal_outgoing_of(const address& a) const {
        const auto it = internal_out_.find(a);
        return it == internal_out_.end() ? empty_postings_ : it->second;
    }

    const std::vector<internal_tx>& all_internal() const { return internal_; }

    const contract_record* contract(const address& a) const {
        const auto it = contracts_.find(a);
        return it == contracts_.end() ? nullptr : &it->second;
    }

    const std::map<address, contract_record>& contracts() const { return contracts_; }

    const token_record* token(const address& a) const {
        const auto it = tokens_.find(a);
        return it == tokens_.end() ? nullptr : &it->second;
    }

    const std::map<address, token_record>& tokens() const { return tokens_; }

    /// All transfer events of one token in chain order
    /// (block, tx ordinal, log_index). Unknown token yields an empty list.
    std::vector<const transfer_event*> transfers_of(const address& token) const {
        std::vector<const transfer_event*> out;
        const auto it = transfers_by_token_.find(token);
        if (it == transfers_by_token_.end()) return out;
        out.reserve(it->second.size());
        for (uint32_t i : it->second) out.push_back(&transfers_[i]);
        return out;
    }

    std::span<const transfer_event> transfers_in_tx(const hash32& h) const {
        const auto seq = tx_seq(h);
        if (!seq) return {};
        const auto it = transfers_by_seq_.find(*seq);
        if (it == transfers_by_seq_.end()) return {};
        return {transfers_.data() + it->second.first, it->second.second - it->second.first};
    }

    const std::vector<transfer_event>& all_transfers() const { return transfers_; }
    const std::vector<external_tx>& all_txs() const { return txs_; }
    const label_set& labels() const { return labels_; }
    const std::vector<rejection>& rejections() const { return rejections_; }

private:
    friend class ledger_builder;

    std::vector<block> blocks_;                 // sorted by number
    std::vector<external_tx> txs_;              // chain order
    std::vector<uint64_t> tx_time_;             // parallel to txs_
    std::map<hash32, uint32_t> tx_index_;
    std::map<address, std::vector<uint32_t>> outgoing_;
    std::map<address, std::vector<uint32_t>> incoming_;
    std::vector<internal_tx> internal_;         // sorted by (parent seq, trace_index)
    std::map<hash32, std::pair<uint32_t, uint32_t>> internal_ranges_;
    std::map<address, std::vector<uint32_t>> internal_out_;
    std::map<address, contract_record> contracts_;
    std::map<address, token_record> tokens_;    // ERC-20 contracts only
    std::vector<transfer_event> transfers_;     // sorted by (tx seq, log_index)
    std::map<address, std::vector<uint32_t>> transfers_by_token_;
    std::map<uint32_t, std::pair<uint32_t, uint32_t>> transfers_by_seq_;
    label_set labels_;
    std::vector<rejection> rejections_;

    static const std::vector<uint32_t> empty_postings_;
};

inline const std::vector<uint32_t> indexed_ledger::empty_postings_{};

/// Stages raw rows with (file, line) provenance, then validates and
/// freezes them into an indexed_ledger. Malformed or referentially broken
/// rows become rejection records; only unreadable files abort.
class ledger_builder {
public:
    void load_blocks(const std::filesystem::path& p) {
        const std::string file = p.filename().string();
        for_each_jsonl(
            p,
            [&](size_t line, const json& o) {
                block b;
                const auto number = detail::as_u64(detail::find_key(o, "number"));
                const auto ts = detail::as_u64(detail::find_key(o, "timestamp"));
                if (!number) return reject(file, line, "missing or invalid field 'number'");
                if (!ts) return reject(file, line, "missing or invalid field 'timestamp'");
                b.number = *number;
                b.timestamp = *ts;
                blocks_.push_back({b, file, line});
            },
            [&](size_t line, const std::string& reason) { reject(file, line, reason); });
    }

    void load_transactions(const std::filesystem::path& p) {
        const std::string file = p.filename().string();
        for_each_jsonl(
            p,
            [&](size_t line, const json& o) {
                external_tx t;
                const auto hash = detail::as_id<32>(detail::find_key(o, "hash"));
                const auto blk = detail::as_u64(detail::find_key(o, "block"));
                const auto from = detail::as_id<20>(detail::find_key(o, "from"));
                const auto value = detail::as_amount(detail::find_key(o, "value_wei"));
                const json* to = detail::find_key(o, "to");
                const json* status = detail::find_key(o, "status");
                const auto input = detail::as_str(detail::find_key(o, "input"));
                if (!hash) return reject(file, line, "missing or invalid field 'hash'");
                if (!blk) return reject(file, line, "missing or invalid field 'block'");
                if (!from) return reject(file, line, "missing or invalid field 'from'");
                if (!value) return reject(file, line, "missing or invalid field 'value_wei'");
                if (!to || (!to->is_null() && !to->is_string()))
                    return reject(file, line, "missing or invalid field 'to'");
                if (!status || !status->is_boolean())
                    return reject(file, line, "missing or invalid field 'status'");
                if (!input) return reject(file, line, "missing or invalid field 'input'");
                const auto input_bytes = hex::decode(*input);
                if (!input_bytes) return reject(file, line, "invalid hex in field 'input'");
                if (!to->is_null()) {
                    const auto to_addr = detail::as_id<20>(to);
                    if (!to_addr) return reject(file, line, "missing or invalid field 'to'");
                    t.to = *to_addr;
                }
                t.hash = *hash;
                t.block = *blk;
                t.from = *from;
                t.value_wei = *value;
                t.input = std::move(*input_bytes);
                t.status = status->get<bool>();
                txs_.push_back({std::move(t), file, line});
            },
            [&](size_t line, const std::string& reason) { reject(file, line, reason); });
    }

    void load_internal_transactions(const std::filesystem::path& p) {
        const std::string file = p.filename().string();
        for_each_jsonl(
            p,
            [&](size_t line, const json& o) {
                internal_tx t;
                const auto parent = detail::as_id<32>(detail::find_key(o, "parent_hash"));
                const auto trace = detail::as_u64(detail::find_key(o, "trace_index"));
                const auto from = detail::as_id<20>(detail::find_key(o, "from"));
                const auto to = detail::as_id<20>(detail::find_key(o, "to"));
                const auto value = detail::as_amount(detail::find_key(o, "value_wei"));
                const auto kind_s = detail::as_str(detail::find_key(o, "call_type"));
                if (!parent) return reject(file, line, "missing or invalid field 'parent_hash'");
                if (!trace) return reject(file, line, "missing or invalid field 'trace_index'");
                if (!from) return reject(file, line, "missing or invalid field 'from'");
                if (!to) return reject(file, line, "missing or invalid field 'to'");
                if (!value) return reject(file, line, "missing or invalid field 'value_wei'");
                if (!kind_s) return reject(file, line, "missing or invalid field 'call_type'");
                const auto kind = parse_call_type(*kind_s);
                if (!kind) return reject(file, line, "unknown call_type '" + *kind_s + "'");
                t.parent_hash = *parent;
                t.trace_index = *trace;
                t.from = *from;
                t.to = *to;
                t.value_wei = *value;
                t.type = *kind;
                internal_.push_back({std::move(t), file, line});
            },
            [&](size_t line, const std::string& reason) { reject(file, line, reason); });
    }

    void load_contracts(const std::filesystem::path& p) {
        const std::string file = p.filename().string();
        for_each_jsonl(
            p,
            [&](size_t line, const json& o) {
                contract_record c;
                const auto addr = detail::as_id<20>(detail::find_key(o, "address"));
                const auto creator = detail::as_id<20>(detail::find_key(o, "creator"));
                const auto ctx = detail::as_id<32>(detail::find_key(o, "creation_tx"));
                const auto code = detail::as_str(detail::find_key(o, "bytecode"));
                const auto blk = detail::as_u64(detail::find_key(o, "created_block"));
                if (!addr) return reject(file, line, "missing or invalid field 'address'");
                if (!creator) return reject(file, line, "missing or invalid field 'creator'");
                if (!ctx) return reject(file, line, "missing or invalid field 'creation_tx'");
                if (!code) return reject(file, line, "missing or invalid field 'bytecode'");
                if (!blk) return reject(file, line, "missing or invalid field 'created_block'");
                const auto code_bytes = hex::decode(*code);
                if (!code_bytes) return reject(file, line, "invalid hex in field 'bytecode'");
                c.addr = *addr;
                c.creator = *creator;
                c.creation_tx = *ctx;
                c.bytecode = std::move(*code_bytes);
                c.created_block = *blk;
                contracts_.push_back({std::move(c), file, line});
            },
            [&](size_t line, const std::string& reason) { reject(file, line, reason); });
    }

    void load_token_metadata(const std::filesystem::path& p) {
        const std::string file = p.filename().string();
        for_each_jsonl(
            p,
            [&](size_t line, const json& o) {
                token_record t;
                const auto addr = detail::as_id<20>(detail::find_key(o, "address"));
                const auto name = detail::as_str(detail::find_key(o, "name"));
                const auto symbol = detail::as_str(detail::find_key(o, "symbol"));
                const auto decimals = detail::as_u64(detail::find_key(o, "decimals"));
                const auto supply = detail::as_amount(detail::find_key(o, "total_supply_raw"));
                if (!addr) return reject(file, line, "missing or invalid field 'address'");
                if (!name) return reject(file, line, "missing or invalid field 'name'");
                if (!symbol) return reject(file, line, "missing or invalid field 'symbol'");
                if (!decimals) return reject(file, line, "missing or invalid field 'decimals'");
                if (!supply) return reject(file, line, "missing or invalid field 'total_supply_raw'");
                if (*decimals > 77) return reject(file, line, "decimals out of range 0-77");
                t.addr = *addr;
                t.name = *name;
                t.symbol = *symbol;
                t.decimals = static_cast<uint32_t>(*decimals);
                t.total_supply_raw = *supply;
                metadata_.push_back({std::move(t), file, line});
            },
            [&](size_t line, const std::string& reason) { reject(file, line, reason); });
    }

    void load_transfers(const std::filesystem::path& p) {
        const std::string file = p.filename().string();
        for_each_jsonl(
            p,
            [&](size_t line, const json& o) {
                transfer_event e;
                const auto tx = detail::as_id<32>(detail::find_key(o, "tx_hash"));
                const auto log_index = detail::as_u64(detail::find_key(o, "log_index"));
                const auto token = detail::as_id<20>(detail::find_key(o, "token"));
                const auto from = detail::as_id<20>(detail::find_key(o, "from"));
                const auto to = detail::as_id<20>(detail::find_key(o, "to"));
                const auto amount = detail::as_amount(detail::find_key(o, "amount_raw"));
                if (!tx) return reject(file, line, "missing or invalid field 'tx_hash'");
                if (!log_index) return reject(file, line, "missing or invalid field 'log_index'");
                if (!token) return reject(file, line, "missing or invalid field 'token'");
                if (!from) return reject(file, line, "missing or invalid field 'from'");
                if (!to) return reject(file, line, "missing or invalid field 'to'");
                if (!amount) return reject(file, line, "missing or invalid field 'amount_raw'");
                e.tx_hash = *tx;
                e.log_index = *log_index;
                e.token = *token;
                e.from = *from;
                e.to = *to;
                e.amount_raw = *amount;
                transfers_.push_back({std::move(e), file, line});
            },
            [&](size_t line, const std::string& reason) { reject(file, line, reason); });
    }

    void set_labels(label_set labels) { labels_ = std::move(labels); }

    indexed_ledger build() {
        indexed_ledger led;
        led.rejections_ = std::move(rejections_);

        // Blocks: unique numbers, then timestamps must not decrease in
        // number order. Violating rows are dropped as rejections.
        std::stable_sort(blocks_.begin(), blocks_.end(),
                         [](const auto& a, const auto& b) { return a.rec.number < b.rec.number; });
        uint64_t running_ts = 0;
        uint64_t prev_number = 0;
        bool have_prev = false;
        for (auto& row : blocks_) {
            if (have_prev && row.rec.number == prev_number) {
                led.rejections_.push_back({row.file, row.line, "duplicate block number"});
                continue;
            }
            if (have_prev && row.rec.timestamp < running_ts) {
                led.rejections_.push_back({row.file, row.line, "timestamp decreases against earlier block"});
                continue;
            }
            prev_number = row.rec.number;
            running_ts = row.rec.timestamp;
            have_prev = true;
            led.blocks_.push_back(row.rec);
        }

        // Transactions: block must exist, hash unique; chain order is
        // (block, file position).
        std::stable_sort(txs_.begin(), txs_.end(),
                         [](const auto& a, const auto& b) { return a.rec.block < b.rec.block; });
        led.txs_.reserve(txs_.size());
        for (auto& row : txs_) {
            const auto ts = led.block_timestamp(row.rec.block);
            if (!ts) {
                led.rejections_.push_back({row.file, row.line, "unknown block"});
                continue;
            }
            const uint32_t seq = static_cast<uint32_t>(led.txs_.size());
            if (!led.tx_index_.emplace(row.rec.hash, seq).second) {
                led.rejections_.push_back({row.file, row.line, "duplicate transaction hash"});
                continue;
            }
            led.txs_.push_back(std::move(row.rec));
            led.tx_time_.push_back(*ts);
        }
        for (uint32_t seq = 0; seq < led.txs_.size(); ++seq) {
            const external_tx& t = led.txs_[seq];
            led.outgoing_[t.from].push_back(seq);
            if (t.to) led.incoming_[*t.to].push_back(seq);
        }

        // Internal transactions: parent must exist, (parent, trace) unique.
        {
            std::vector<staged<internal_tx>> kept;
            kept.reserve(internal_.size());
            for (auto& row : internal_) {
                if (!led.tx_index_.count(row.rec.parent_hash)) {
                    led.rejections_.push_back({row.file, row.line, "unknown parent transaction"});
                    continue;
                }
                kept.push_back(std::move(row));
            }
            std::stable_sort(kept.begin(), kept.end(), [&](const auto& a, const auto& b) {
                const uint32_t sa = led.tx_index_.at(a.rec.parent_hash);
                const uint32_t sb = led.tx_index_.at(b.rec.parent_hash);
                if (sa != sb) return sa < sb;
                return a.rec.trace_index < b.rec.trace_index;
            });
            for (auto& row : kept) {
                if (!led.internal_.empty()) {
                    const internal_tx& prev = led.internal_.back();
                    if (prev.parent_hash == row.rec.parent_hash && prev.trace_index == row.rec.trace_index) {
                        led.rejections_.push_back({row.file, row.line, "duplicate (parent_hash, trace_index)"});
                        continue;
                    }
                }
                led.internal_.push_back(std::move(row.rec));
            }
            uint32_t begin = 0;
            for (uint32_t i = 0; i <= led.internal_.size(); ++i) {
                if (i == led.internal_.size()
                    || (i > 0 && !(led.internal_[i].parent_hash == led.internal_[begin].parent_hash))) {
                    if (i > begin) led.internal_ranges_[led.internal_[begin].parent_hash] = {begin, i};
                    begin = i;
                }
            }
            for (uint32_t i = 0; i < led.internal_.size(); ++i)
                if (led.internal_[i].value_wei > 0) led.internal_out_[led.internal_[i].from].push_back(i);
        }

        // Contracts: unique addresses; created_via_internal resolves once
        // the full address set is known.
        for (auto& row : contracts_) {
            if (led.contracts_.count(row.rec.addr)) {
                led.rejections_.push_back({row.file, row.line, "duplicate contract address"});
                continue;
            }
            led.contracts_.emplace(row.rec.addr, std::move(row.rec));
        }
        for (auto& [addr, rec] : led.contracts_)
            rec.created_via_internal = led.contracts_.count(rec.creator) > 0;

        // Token set: every contract whose bytecode passes ERC-20 detection.
        // Metadata rows attach to these; ERC-20 contracts without metadata
        // keep empty identifiers.
        for (const auto& [addr, rec] : led.contracts_) {
            if (detect_erc20(rec.bytecode)) {
                token_record t;
                t.addr = addr;
                led.tokens_.emplace(addr, std::move(t));
            }
        }
        {
            std::set<address> seen;
            for (auto& row : metadata_) {
                const auto it = led.tokens_.find(row.rec.addr);
                if (it == led.tokens_.end()) {
                    led.rejections_.push_back(
                        {row.file, row.line,
                         led.contracts_.count(row.rec.addr) ? "contract is not ERC-20"
                                                            : "unknown contract address"});
                    continue;
                }
                if (!seen.insert(row.rec.addr).second) {
                    led.rejections_.push_back({row.file, row.line, "duplicate token metadata"});
                    continue;
                }
                it->second = std::move(row.rec);
            }
        }

        // Transfers: tx and token must exist, (tx, log_index) unique.
        {
            std::vector<staged<transfer_event>> kept;
            kept.reserve(transfers_.size());
            for (auto& row : transfers_) {
                if (!led.tx_index_.count(row.rec.tx_hash)) {
                    led.rejections_.push_back({row.file, row.line, "unknown transaction"});
                    continue;
                }
                if (!led.tokens_.count(row.rec.token)) {
                    led.rejections_.push_back({row.file, row.line, "token is not a known ERC-20 contract"});
                    continue;
                }
                kept.push_back(std::move(row));
            }
            std::stable_sort(kept.begin(), kept.end(), [&](const auto& a, const auto& b) {
                const uint32_t sa = led.tx_index_.at(a.rec.tx_hash);
                const uint32_t sb = led.tx_index_.at(b.rec.tx_hash);
                if (sa != sb) return sa < sb;
                return a.rec.log_index < b.rec.log_index;
            });
            for (auto& row : kept) {
                if (!led.transfers_.empty()) {
                    const transfer_event& prev = led.transfers_.back();
                    if (prev.tx_hash == row.rec.tx_hash && prev.log_index == row.rec.log_index) {
                        led.rejections_.push_back({row.file, row.line, "duplicate (tx_hash, log_index)"});
                        continue;
                    }
                }
                led.transfers_.push_back(std::move(row.rec));
            }
            for (uint32_t i = 0; i < led.transfers_.size(); ++i)
                led.transfers_by_token_[led.transfers_[i].token].push_back(i);
            uint32_t begin = 0;
            for (uint32_t i = 0; i <= led.transfers_.size(); ++i) {
                if (i == led.transfers_.size()
                    || (i > 0 && !(led.transfers_[i].tx_hash == led.transfers_[begin].tx_hash))) {
                    if (i > begin)
                        led.transfers_by_seq_[led.tx_index_.at(led.transfers_[begin].tx_hash)] = {begin, i};
                    begin = i;
                }
            }
        }

        led.labels_ = std::move(labels_);
        std::stable_sort(led.rejections_.begin(), led.rejections_.end(), [](const auto& a, const auto& b) {
            if (a.file != b.file) return a.file < b.file;
            return a.line < b.line;
        });
        return led;
    }

private:
    template <typename T>
    struct staged {
        T rec;
        std::string file;
        size_t line;
    };

    void reject(const std::string& file, size_t line, std::string reason) {
        rejections_.push_back({file, line, std::move(reason)});
    }

    std::vector<staged<block>> blocks_;
    std::vector<staged<external_tx>> txs_;
    std::vector<staged<internal_tx>> internal_;
    std::vector<staged<contract_record>> contracts_;
    std::vector<staged<token_record>> metadata_;
    std::vector<staged<transfer_event>> transfers_;
    label_set labels_;
    std::vector<rejection> rejections_;
};

inline std::set<address> parse_address_array(const json& arr, const std::string& what) {
    if (!arr.is_array()) throw error("labels: '" + what + "' must be an array");
    std::set<address> out;
    for (const auto& v : arr) {
        if (!v.is_string()) throw error("labels: '" + what + "' entries must be hex strings");
        const auto a = address::from_hex(v.get<std::string>());
        if (!a) throw error("labels: invalid address in '" + what + "': " + v.get<std::string>());
        out.insert(*a);
    }
    return out;
}

inline label_set load_labels(const std::filesystem::path& path) {
    const json doc = json::parse(read_text_file(path), nullptr, false);
    if (doc.is_discarded() || !doc.is_object()) throw error("labels: " + path.string() + " is not a JSON object");
    label_set out;
    if (const auto* v = detail::find_key(doc, "exchanges")) out.exchanges = parse_address_array(*v, "exchanges");
    if (const auto* v = detail::find_key(doc, "trusted_creators"))
        out.trusted_creators = parse_address_array(*v, "trusted_creators");
    if (const auto* v = detail::find_key(doc, "official_tokens"))
        out.official_tokens = parse_address_array(*v, "official_tokens");
    if (const auto* v = detail::find_key(doc, "migrated_tokens"))
        out.migrated_tokens = parse_address_array(*v, "migrated_tokens");
    return out;
}

/// Ingests the six canonical JSONL files from one directory.
inline indexed_ledger ingest(const std::filesystem::path& dir, label_set labels = {}) {
    ledger_builder b;
    b.load_blocks(dir / "blocks.jsonl");
    b.load_transactions(dir / "transactions.jsonl");
    b.load_internal_transactions(dir / "internal_transactions.jsonl");
    b.load_contracts(dir / "contracts.jsonl");
    b.load_token_metadata(dir / "token_metadata.jsonl");
    b.load_transfers(dir / "token_transfers.jsonl");
    b.set_labels(std::move(labels));
    return b.build();
}

} // namespace tokentrace::chain
