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
//
// HTTP JSON log service: the RFC 6962-style endpoints plus the
// timestamp-neighborhood query needed by exclusion-proof auditors.
// Malicious-server modes exercise the uncooperative-log defenses.

#ifndef CTZK_SERVICE_H_
#define CTZK_SERVICE_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <thread>

#include "ctzk/log.h"

namespace ctzk {

struct ServerMode {
  enum class Kind : uint8_t {
    kHonest = 0,
    kOmitEntry = 1,              // the k-th submission gets an SCT, no entry
    kRefuseTimestampQueries = 2, // 403 on the neighborhood endpoint
    kDummySandwich = 3,          // like omit, but the straddling entries 404
  };
  Kind kind = Kind::kHonest;
  uint64_t k = 0;

  static ServerMode parse(const std::string& text);
  std::string name() const;
};

class LogService {
 public:
  LogService(std::shared_ptr<Log> log, ServerMode mode);
  ~LogService();

  // Binds 127.0.0.1 on `port` (0 picks a free port) and serves on a
  // background thread. Throws on bind failure.
  void start(int port = 0);
  void stop();
  int port() const { return port_; }
  std::string base_url() const;

  // Submissions observed by this front end (including any omitted by mode).
  uint64_t submissions_seen() const { return submissions_seen_; }

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  std::shared_ptr<Log> log_;
  ServerMode mode_;
  int port_ = 0;
  std::thread thread_;
  std::atomic<uint64_t> submissions_seen_{0};
};

}  // namespace ctzk

#endif  // CTZK_SERVICE_H_
