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

#include "ctzk/subdomain.h"

#include <json.hpp>

#include <stdexcept>

namespace ctzk {

namespace {

constexpr uint8_t kPayloadVersion = 1;
constexpr uint8_t kPayloadTag = 'P';

bool label_byte_ok(char c) {
  return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '-';
}

std::string normalize(const std::string& name, bool allow_dots) {
  if (name.empty()) throw std::invalid_argument("dns name: empty");
  std::string out;
  out.reserve(name.size());
  for (char c : name) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    if (c == '.') {
      if (!allow_dots) throw std::invalid_argument("dns label: unexpected dot");
      if (out.empty() || out.back() == '.') {
        throw std::invalid_argument("dns name: empty label");
      }
      out.push_back(c);
      continue;
    }
    if (!label_byte_ok(c)) {
      throw std::invalid_argument("dns name: byte outside label alphabet");
    }
    out.push_back(c);
  }
  if (out.back() == '.') throw std::invalid_argument("dns name: trailing dot");
  return out;
}

}  // namespace

std::string normalize_label(const std::string& label) {
  // Several leftmost labels may be redacted together, so dots are allowed.
  return normalize(label, /*allow_dots=*/true);
}

std::string normalize_domain(const std::string& domain) {
  return normalize(domain, /*allow_dots=*/true);
}

Bigint hash_label(const std::string& label) {
  std::string input = "ctzk-subdomain-label/v1:" + normalize_label(label);
  return hash_scalar(as_bytes(input), kHashScalarBits);
}

SubdomainBinding commit_subdomain(const CommitParams& params,
                                  const std::string& parent_domain,
                                  const std::string& private_label,
                                  RandomStream& rng) {
  SubdomainBinding binding;
  binding.parent_domain = normalize_domain(parent_domain);
  binding.private_label = normalize_label(private_label);
  binding.randomness = rng.random_below(params.q);
  binding.c_d = commit(params, hash_label(binding.private_label), binding.randomness);
  return binding;
}

bool ca_validate_request(const CommitParams& params, const SubdomainBinding& binding) {
  try {
    return verify_opening(params, binding.c_d, hash_label(binding.private_label),
                          binding.randomness);
  } catch (const std::invalid_argument&) {
    return false;
  }
}

std::vector<uint8_t> redacted_payload_bytes(const std::string& parent_domain,
                                            const Commitment& c_d) {
  ByteWriter w;
  w.put_u8(kPayloadVersion);
  w.put_u8(kPayloadTag);
  w.put_blob(as_bytes(parent_domain));
  w.put_int(c_d.value);
  return w.take();
}

bool parse_redacted_payload(std::span<const uint8_t> bytes, RedactedPayload* out) {
  try {
    ByteReader r(bytes);
    if (r.get_u8() != kPayloadVersion || r.get_u8() != kPayloadTag) return false;
    std::vector<uint8_t> domain = r.get_blob();
    out->parent_domain.assign(domain.begin(), domain.end());
    out->c_d.value = r.get_int();
    r.expect_done();
    return true;
  } catch (const ParseError&) {
    return false;
  }
}

std::string PrivateCertificate::to_json() const {
  nlohmann::json j;
  j["domain"] = domain;
  j["redacted_label"] = redacted_label;
  j["randomness"] = base64_encode(to_bytes(randomness));
  j["sct"] = base64_encode(sct.bytes());
  j["fields"] = base64_encode(fields);
  return j.dump(2);
}

PrivateCertificate PrivateCertificate::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  PrivateCertificate cert;
  cert.domain = j.at("domain").get<std::string>();
  cert.redacted_label = j.at("redacted_label").get<std::string>();
  cert.randomness = from_bytes(base64_decode(j.at("randomness").get<std::string>()));
  std::vector<uint8_t> sct_bytes = base64_decode(j.at("sct").get<std::string>());
  ByteReader r(sct_bytes);
  cert.sct = SctBundle::deserialize(r);
  cert.fields = base64_decode(j.at("fields").get<std::string>());
  return cert;
}

std::pair<PrivateCertificate, SctBundle> issue_private_cert(
    Log& log, const CommitParams& params, const SubdomainBinding& binding,
    std::span<const uint8_t> cert_fields, uint64_t timestamp) {
  if (!ca_validate_request(params, binding)) {
    throw std::invalid_argument("issue_private_cert: commitment does not open");
  }
  std::vector<uint8_t> payload =
      redacted_payload_bytes(binding.parent_domain, binding.c_d);
  SubmitOutcome outcome = log.submit(payload, timestamp);

  PrivateCertificate cert;
  cert.domain = binding.parent_domain;
  cert.redacted_label = binding.private_label;
  cert.randomness = binding.randomness;
  cert.sct = outcome.sct;
  cert.fields.assign(cert_fields.begin(), cert_fields.end());
  return {cert, outcome.sct};
}

bool visitor_verify(const CommitParams& params, const LogPublicKeys& pub,
                    const PrivateCertificate& cert, const SctBundle& sct) {
  if (!verify_sct(pub, sct)) return false;
  RedactedPayload payload;
  if (!parse_redacted_payload(sct.data, &payload)) return false;
  try {
    if (payload.parent_domain != normalize_domain(cert.domain)) return false;
    return verify_opening(params, payload.c_d, hash_label(cert.redacted_label),
                          cert.randomness);
  } catch (const std::invalid_argument&) {
    return false;
  }
}

uint64_t monitor_count(std::span<const LogEntry> entries,
                       const std::string& parent_domain) {
  std::string wanted = normalize_domain(parent_domain);
  uint64_t count = 0;
  RedactedPayload payload;
  for (const LogEntry& e : entries) {
    if (parse_redacted_payload(e.data, &payload) &&
        payload.parent_domain == wanted) {
      ++count;
    }
  }
  return count;
}

}  // namespace ctzk
