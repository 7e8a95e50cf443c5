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

#include "ctzk/service.h"

#include <httplib.h>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "ctzk/encoding.h"

namespace ctzk {

namespace {

using nlohmann::json;

uint64_t now_ms() {
  return static_cast<uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::system_clock::now().time_since_epoch())
          .count());
}

json sct_to_json(const SctBundle& sct) {
  ByteWriter t_ext, h_ext;
  sct.sig_t_ext.serialize(t_ext);
  sct.sig_h_ext.serialize(h_ext);
  return json{{"sct_version", 1},
              {"timestamp", sct.timestamp},
              {"frontend_id", sct.frontend_id},
              {"data", base64_encode(sct.data)},
              {"extensions",
               {{"sig_t", base64_encode(t_ext.data())},
                {"sig_h", base64_encode(h_ext.data())}}},
              {"signature", base64_encode(sct.body_sig)}};
}

json signatures_to_json(const EntrySignatures& sigs) {
  auto blob = [](const CLSignature& sig) {
    ByteWriter w;
    sig.serialize(w);
    return base64_encode(w.data());
  };
  return json{{"sig_h", blob(sigs.sig_h)},
              {"sig_i", blob(sigs.sig_i)},
              {"sig_t", blob(sigs.sig_t)}};
}

json entry_record(const Log& log, uint64_t index) {
  auto [entry, sigs] = log.get_entry_bundle(index);
  return json{{"index", entry.index},
              {"timestamp", entry.timestamp},
              {"data", base64_encode(entry.data)},
              {"sct", sct_to_json(log.sct_at(index))},
              {"signatures", signatures_to_json(sigs)}};
}

void send_json(httplib::Response& res, int status, const json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

void send_error(httplib::Response& res, int status, const std::string& message) {
  send_json(res, status, json{{"error", message}});
}

}  // namespace

ServerMode ServerMode::parse(const std::string& text) {
  ServerMode mode;
  auto colon = text.find(':');
  std::string head = text.substr(0, colon);
  if (head == "honest") {
    mode.kind = Kind::kHonest;
  } else if (head == "omit-entry") {
    mode.kind = Kind::kOmitEntry;
  } else if (head == "refuse-timestamp-queries") {
    mode.kind = Kind::kRefuseTimestampQueries;
  } else if (head == "dummy-sandwich") {
    mode.kind = Kind::kDummySandwich;
  } else {
    throw std::invalid_argument("unknown server mode: " + text);
  }
  if (mode.kind == Kind::kOmitEntry || mode.kind == Kind::kDummySandwich) {
    if (colon == std::string::npos) {
      throw std::invalid_argument("server mode " + head + " needs :k");
    }
    mode.k = std::stoull(text.substr(colon + 1));
  }
  return mode;
}

std::string ServerMode::name() const {
  switch (kind) {
    case Kind::kHonest: return "honest";
    case Kind::kOmitEntry: return "omit-entry:" + std::to_string(k);
    case Kind::kRefuseTimestampQueries: return "refuse-timestamp-queries";
    case Kind::kDummySandwich: return "dummy-sandwich:" + std::to_string(k);
  }
  return "unknown";
}

struct LogService::Impl {
  httplib::Server server;
};

LogService::LogService(std::shared_ptr<Log> log, ServerMode mode)
    : impl_(std::make_unique<Impl>()), log_(std::move(log)), mode_(mode) {}

LogService::~LogService() { stop(); }

std::string LogService::base_url() const {
  return "http://127.0.0.1:" + std::to_string(port_);
}

void LogService::start(int port) {
  httplib::Server& srv = impl_->server;

  // Entries the dummy-sandwich server pretends not to have: the pair that
  // straddles the omitted submission.
  auto protected_index = [this](uint64_t index) {
    if (mode_.kind != ServerMode::Kind::kDummySandwich) return false;
    return mode_.k > 0 && (index == mode_.k - 1 || index == mode_.k);
  };

  srv.Post("/ct/v1/add-entry", [this](const httplib::Request& req,
                                      httplib::Response& res) {
    try {
      json body = json::parse(req.body);
      std::vector<uint8_t> data = base64_decode(body.at("data").get<std::string>());
      uint64_t t = body.contains("timestamp") ? body["timestamp"].get<uint64_t>()
                                              : now_ms();
      uint64_t seq = submissions_seen_.fetch_add(1);
      bool omit = (mode_.kind == ServerMode::Kind::kOmitEntry ||
                   mode_.kind == ServerMode::Kind::kDummySandwich) &&
                  seq == mode_.k;
      SctBundle sct = omit ? log_->issue_sct_only(data, t)
                           : log_->submit(data, t).sct;
      send_json(res, 200, json{{"sct", sct_to_json(sct)}});
    } catch (const std::invalid_argument& e) {
      send_error(res, 400, e.what());
    } catch (const std::exception& e) {
      send_error(res, 400, std::string("bad request: ") + e.what());
    }
  });

  srv.Get("/ct/v1/get-sth", [this](const httplib::Request&, httplib::Response& res) {
    SignedTreeHead sth = log_->tree_head(now_ms());
    send_json(res, 200,
              json{{"tree_size", sth.tree_size},
                   {"timestamp", sth.timestamp},
                   {"sha256_root_hash", base64_encode(sth.root_hash)},
                   {"tree_head_signature", base64_encode(sth.signature)}});
  });

  srv.Get("/ct/v1/get-entries", [this, protected_index](const httplib::Request& req,
                                                        httplib::Response& res) {
    try {
      uint64_t start = std::stoull(req.get_param_value("start"));
      uint64_t end = std::stoull(req.get_param_value("end"));
      uint64_t size = log_->size();
      if (start > end || start >= size) {
        send_error(res, 400, "bad range");
        return;
      }
      end = std::min<uint64_t>(end, size - 1);
      json entries = json::array();
      for (uint64_t i = start; i <= end; ++i) {
        if (protected_index(i)) continue;  // silently withheld
        entries.push_back(entry_record(*log_, i));
      }
      send_json(res, 200, json{{"entries", entries}});
    } catch (const std::exception& e) {
      send_error(res, 400, std::string("bad request: ") + e.what());
    }
  });

  srv.Get("/ct/v1/get-proof-by-hash", [this](const httplib::Request& req,
                                             httplib::Response& res) {
    try {
      std::vector<uint8_t> hash =
          base64_decode(req.get_param_value("hash"));
      uint64_t tree_size = std::stoull(req.get_param_value("tree_size"));
      if (hash.size() != 32 || tree_size != log_->size()) {
        send_error(res, 400, "bad hash or tree_size");
        return;
      }
      Sha256Digest leaf{};
      std::copy(hash.begin(), hash.end(), leaf.begin());
      auto index = log_->index_by_leaf_hash(leaf);
      if (!index) {
        send_error(res, 404, "leaf not found");
        return;
      }
      json path = json::array();
      for (const Sha256Digest& node : log_->prove_inclusion(*index)) {
        path.push_back(base64_encode(node));
      }
      send_json(res, 200, json{{"leaf_index", *index}, {"audit_path", path}});
    } catch (const std::exception& e) {
      send_error(res, 400, std::string("bad request: ") + e.what());
    }
  });

  srv.Get("/ct/v1/get-entries-around-timestamp",
          [this, protected_index](const httplib::Request& req,
                                  httplib::Response& res) {
            if (mode_.kind == ServerMode::Kind::kRefuseTimestampQueries) {
              send_error(res, 403, "timestamp queries refused");
              return;
            }
            try {
              uint64_t t = std::stoull(req.get_param_value("timestamp"));
              uint64_t count = std::stoull(req.get_param_value("count"));
              if (count == 0 || count > 1024) {
                send_error(res, 400, "bad count");
                return;
              }
              std::vector<LogEntry> entries = log_->all_entries();
              // floor(count/2) greatest timestamps <= t, then the remaining
              // smallest timestamps > t; output sorted by timestamp.
              uint64_t first_above = entries.size();
              for (uint64_t i = 0; i < entries.size(); ++i) {
                if (entries[i].timestamp > t) {
                  first_above = i;
                  break;
                }
              }
              uint64_t below = std::min<uint64_t>(count / 2, first_above);
              uint64_t above = std::min<uint64_t>(count - below,
                                                  entries.size() - first_above);
              json records = json::array();
              for (uint64_t i = first_above - below;
                   i < first_above + above; ++i) {
                if (protected_index(i)) continue;
                auto [entry, sigs] = log_->get_entry_bundle(i);
                records.push_back(json{{"index", entry.index},
                                       {"sct", sct_to_json(log_->sct_at(i))},
                                       {"signatures", signatures_to_json(sigs)}});
              }
              send_json(res, 200, json{{"entries", records}});
            } catch (const std::exception& e) {
              send_error(res, 400, std::string("bad request: ") + e.what());
            }
          });

  if (port == 0) {
    port_ = srv.bind_to_any_port("127.0.0.1");
    if (port_ <= 0) throw std::runtime_error("bind failed");
  } else {
    if (!srv.bind_to_port("127.0.0.1", port)) {
      throw std::runtime_error("bind failed: port " + std::to_string(port));
    }
    port_ = port;
  }
  thread_ = std::thread([this]() { impl_->server.listen_after_bind(); });
  srv.wait_until_ready();
}

void LogService::stop() {
  if (thread_.joinable()) {
    impl_->server.stop();
    thread_.join();
  }
}

}  // namespace ctzk
