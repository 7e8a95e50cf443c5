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
// Private subdomains: the leftmost label(s) of a domain are replaced in log
// entries and SCTs by a Pedersen commitment. The certificate carries the
// label and the commitment randomness, so site visitors can open the
// commitment while log observers learn only the parent domain.

#ifndef CTZK_SUBDOMAIN_H_
#define CTZK_SUBDOMAIN_H_

#include <cstdint>
#include <string>
#include <vector>

#include "ctzk/log.h"
#include "ctzk/pedersen.h"

namespace ctzk {

// Lowercases and validates DNS label bytes (letters, digits, hyphen; dots
// separate labels when several leftmost labels are redacted together).
// Throws std::invalid_argument on bytes outside the alphabet.
std::string normalize_label(const std::string& label);
std::string normalize_domain(const std::string& domain);

// 160-bit hash scalar of the normalized label; the committed message.
Bigint hash_label(const std::string& label);

struct SubdomainBinding {
  std::string parent_domain;   // D
  std::string private_label;   // d, normalized
  Commitment c_d;
  Bigint randomness;           // r
};

SubdomainBinding commit_subdomain(const CommitParams& params,
                                  const std::string& parent_domain,
                                  const std::string& private_label,
                                  RandomStream& rng);

// CA-side check that C_d is a commitment to d under r.
bool ca_validate_request(const CommitParams& params, const SubdomainBinding& binding);

// Log payload for a private issuance: (D, C_d) and nothing else.
std::vector<uint8_t> redacted_payload_bytes(const std::string& parent_domain,
                                            const Commitment& c_d);
struct RedactedPayload {
  std::string parent_domain;
  Commitment c_d;
};
// Returns false if the payload is not a private-issuance record.
bool parse_redacted_payload(std::span<const uint8_t> bytes, RedactedPayload* out);

// Certificate stand-in: the fields a real embedding would put into X.509.
struct PrivateCertificate {
  std::string domain;          // parent domain D
  std::string redacted_label;  // d
  Bigint randomness;           // r
  SctBundle sct;
  std::vector<uint8_t> fields;  // opaque certificate payload

  std::string to_json() const;
  static PrivateCertificate from_json(const std::string& text);
};

// Validates the binding, submits (D, C_d) to the log, and assembles the
// certificate. The log entry and SCT never contain d or r.
std::pair<PrivateCertificate, SctBundle> issue_private_cert(
    Log& log, const CommitParams& params, const SubdomainBinding& binding,
    std::span<const uint8_t> cert_fields, uint64_t timestamp);

// Site-visitor check: SCT signature, payload parent domain, and commitment
// opening against the certificate's (d, r).
bool visitor_verify(const CommitParams& params, const LogPublicKeys& pub,
                    const PrivateCertificate& cert, const SctBundle& sct);

// Number of private issuances for a parent domain across log entries.
uint64_t monitor_count(std::span<const LogEntry> entries,
                       const std::string& parent_domain);

}  // namespace ctzk

#endif  // CTZK_SUBDOMAIN_H_
