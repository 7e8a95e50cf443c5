// Copyright 2026 The ctzk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ctzk/client.h"

#include <httplib.h>
#include <json.hpp>

#include <algorithm>
#include <map>

#include "ctzk/kernels.h"

namespace ctzk {

namespace {

using nlohmann::json;

CLSignature sig_from_b64(const std::string& text) {
  std::vector<uint8_t> raw = base64_decode(text);
  ByteReader r(raw);
  CLSignature sig = CLSignature::deserialize(r);
  r.expect_done();
  return sig;
}

SctBundle sct_from_json(const json& j) {
  SctBundle sct;
  sct.timestamp = j.at("timestamp").get<uint64_t>();
  sct.frontend_id = j.at("frontend_id").get<uint16_t>();
  sct.data = base64_decode(j.at("data").get<std::string>());
  sct.sig_t_ext = sig_from_b64(j.at("extensions").at("sig_t").get<std::string>());
  sct.sig_h_ext = sig_from_b64(j.at("extensions").at("sig_h").get<std::string>());
  sct.body_sig = base64_decode(j.at("signature").get<std::string>());
  return sct;
}

EntryRecord record_from_json(const json& j) {
  EntryRecord rec;
  rec.entry.index = j.at("index").get<uint64_t>();
  rec.sct = sct_from_json(j.at("sct"));
  if (j.contains("timestamp")) {
    rec.entry.timestamp = j.at("timestamp").get<uint64_t>();
    rec.entry.data = base64_decode(j.at("data").get<std::string>());
  } else {
    // Neighborhood records carry the entry tuple inside the SCT.
    rec.entry.timestamp = rec.sct.timestamp;
    rec.entry.data = rec.sct.data;
  }
  const json& sigs = j.at("signatures");
  rec.signatures.sig_h = sig_from_b64(sigs.at("sig_h").get<std::string>());
  rec.signatures.sig_i = sig_from_b64(sigs.at("sig_i").get<std::string>());
  rec.signatures.sig_t = sig_from_b64(sigs.at("sig_t").get<std::string>());
  return rec;
}

}  // namespace

struct LogClient::Impl {
  explicit Impl(const std::string& url) : http(url) {
    http.set_connection_timeout(10);
    http.set_read_timeout(30);
  }
  httplib::Client http;
};

LogClient::LogClient(const std::string& base_url)
    : impl_(std::make_unique<Impl>(base_url)) {}

LogClient::~LogClient() = default;

SignedTreeHead LogClient::get_sth() {
  auto res = impl_->http.Get("/ct/v1/get-sth");
  if (!res || res->status != 200) throw LogUnavailable("get-sth failed");
  json j = json::parse(res->body);
  SignedTreeHead sth;
  sth.tree_size = j.at("tree_size").get<uint64_t>();
  sth.timestamp = j.at("timestamp").get<uint64_t>();
  std::vector<uint8_t> root = base64_decode(j.at("sha256_root_hash").get<std::string>());
  if (root.size() != 32) throw LogUnavailable("get-sth: bad root");
  std::copy(root.begin(), root.end(), sth.root_hash.begin());
  sth.signature = base64_decode(j.at("tree_head_signature").get<std::string>());
  return sth;
}

SctBundle LogClient::add_entry(std::span<const uint8_t> data,
                               std::optional<uint64_t> timestamp) {
  json body{{"data", base64_encode(data)}};
  if (timestamp) body["timestamp"] = *timestamp;
  auto res = impl_->http.Post("/ct/v1/add-entry", body.dump(), "application/json");
  if (!res || res->status != 200) {
    throw LogUnavailable("add-entry failed" +
                         (res ? (": " + res->body) : std::string()));
  }
  return sct_from_json(json::parse(res->body).at("sct"));
}

std::vector<EntryRecord> LogClient::get_entries(uint64_t start, uint64_t end) {
  ++index_queries_;
  httplib::Params params{{"start", std::to_string(start)},
                         {"end", std::to_string(end)}};
  auto res = impl_->http.Get("/ct/v1/get-entries", params, httplib::Headers{});
  if (!res || res->status != 200) throw LogUnavailable("get-entries failed");
  std::vector<EntryRecord> out;
  for (const json& j : json::parse(res->body).at("entries")) {
    out.push_back(record_from_json(j));
  }
  return out;
}

std::optional<EntryRecord> LogClient::get_entry(uint64_t index) {
  std::vector<EntryRecord> records = get_entries(index, index);
  if (records.empty()) return std::nullopt;
  return records.front();
}

std::optional<std::vector<EntryRecord>> LogClient::entries_around_timestamp(
    uint64_t t, uint64_t count) {
  httplib::Params params{{"timestamp", std::to_string(t)},
                         {"count", std::to_string(count)}};
  auto res = impl_->http.Get("/ct/v1/get-entries-around-timestamp", params,
                             httplib::Headers{});
  if (!res) throw LogUnavailable("get-entries-around-timestamp failed");
  if (res->status == 403) return std::nullopt;  // explicit refusal
  if (res->status != 200) throw LogUnavailable("get-entries-around-timestamp failed");
  std::vector<EntryRecord> out;
  for (const json& j : json::parse(res->body).at("entries")) {
    out.push_back(record_from_json(j));
  }
  return out;
}

std::pair<uint64_t, std::vector<Sha256Digest>> LogClient::get_proof_by_hash(
    const Sha256Digest& leaf_hash, uint64_t tree_size) {
  httplib::Params params{{"hash", base64_encode(leaf_hash)},
                         {"tree_size", std::to_string(tree_size)}};
  auto res = impl_->http.Get("/ct/v1/get-proof-by-hash", params, httplib::Headers{});
  if (!res || res->status != 200) throw LogUnavailable("get-proof-by-hash failed");
  json j = json::parse(res->body);
  std::vector<Sha256Digest> path;
  for (const json& node : j.at("audit_path")) {
    std::vector<uint8_t> raw = base64_decode(node.get<std::string>());
    if (raw.size() != 32) throw LogUnavailable("bad audit path node");
    Sha256Digest d;
    std::copy(raw.begin(), raw.end(), d.begin());
    path.push_back(d);
  }
  return {j.at("leaf_index").get<uint64_t>(), std::move(path)};
}

std::pair<EntryRecord, EntryRecord> LogClient::fetch_neighbors(uint64_t t_y) {
  // Preferred path: the timestamp-neighborhood endpoint.
  std::optional<std::vector<EntryRecord>> around = entries_around_timestamp(t_y, 2);
  if (around) {
    for (size_t i = 0; i + 1 < around->size(); ++i) {
      const EntryRecord& x = (*around)[i];
      const EntryRecord& z = (*around)[i + 1];
      if (z.entry.index == x.entry.index + 1 && x.entry.timestamp < t_y &&
          t_y < z.entry.timestamp) {
        return {x, z};
      }
    }
    throw LogUnavailable("neighborhood response lacks a straddling pair");
  }

  // Fallback: binary search over index queries, the same queries a monitor
  // issues, so the log cannot distinguish auditors from monitors.
  SignedTreeHead sth = get_sth();
  uint64_t n = sth.tree_size;
  if (n < 2) throw std::out_of_range("log too small for a straddling pair");

  std::map<uint64_t, EntryRecord> cache;
  auto fetch = [&](uint64_t index) -> const EntryRecord& {
    auto it = cache.find(index);
    if (it != cache.end()) return it->second;
    std::optional<EntryRecord> rec = get_entry(index);
    if (!rec) throw LogUnavailable("entry unavailable: " + std::to_string(index));
    return cache.emplace(index, std::move(*rec)).first->second;
  };

  // Smallest index whose timestamp exceeds t_y.
  uint64_t lo = 0, hi = n;
  while (lo < hi) {
    uint64_t mid = lo + (hi - lo) / 2;
    if (fetch(mid).entry.timestamp > t_y) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  if (lo == 0 || lo == n) {
    throw std::out_of_range("timestamp outside the log's range");
  }
  EntryRecord z = fetch(lo);
  EntryRecord x = fetch(lo - 1);
  if (!(x.entry.timestamp < t_y)) {
    throw std::out_of_range("timestamp collides with a log entry");
  }
  return {std::move(x), std::move(z)};
}

MonitorReport LogClient::monitor_sweep(const LogPublicKeys& pub) {
  MonitorReport report;
  SignedTreeHead sth = get_sth();
  report.tree_size = sth.tree_size;
  report.sth_signature_ok = verify_tree_head(pub, sth);

  constexpr uint64_t kChunk = 128;
  std::vector<EntryRecord> records;
  for (uint64_t start = 0; start < sth.tree_size; start += kChunk) {
    uint64_t end = std::min<uint64_t>(start + kChunk - 1, sth.tree_size - 1);
    std::vector<EntryRecord> chunk = get_entries(start, end);
    std::vector<bool> seen(end - start + 1, false);
    for (EntryRecord& rec : chunk) {
      if (rec.entry.index >= start && rec.entry.index <= end) {
        seen[rec.entry.index - start] = true;
      }
      records.push_back(std::move(rec));
    }
    for (uint64_t i = start; i <= end; ++i) {
      if (!seen[i - start]) report.unavailable_indexes.push_back(i);
    }
  }

  std::vector<LogEntry> entries;
  entries.reserve(records.size());
  for (const EntryRecord& rec : records) entries.push_back(rec.entry);
  report.well_formed = check_well_formed(entries);

  // Side-list verification over everything retrieved.
  std::vector<size_t> failures = find_failures(records.size(), [&](size_t i) {
    return verify_entry_signatures(pub, records[i].entry, records[i].signatures);
  });
  for (size_t i : failures) {
    report.bad_signature_indexes.push_back(records[i].entry.index);
  }

  if (report.unavailable_indexes.empty() && report.tree_size == records.size()) {
    std::vector<Sha256Digest> leaves(records.size());
    for (size_t i = 0; i < records.size(); ++i) {
      leaves[i] = merkle_leaf_hash(entry_leaf_bytes(records[i].entry));
    }
    report.root_consistent = merkle_root(leaves) == sth.root_hash;
  } else {
    report.root_consistent = false;
  }
  return report;
}

}  // namespace ctzk
