// Copyright 2026 The medsim Authors.
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

#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "medsim/common/clock.hpp"
#include "medsim/common/entropy.hpp"
#include "medsim/contracts/protocol.hpp"
#include "medsim/crypto/challenge.hpp"
#include "medsim/dds/store.hpp"
#include "medsim/scp/chain.hpp"
#include "medsim/vdr/registry.hpp"

namespace medsim::connector {

inline constexpr std::int64_t kDefaultGrantTtl = 60;

/// Pipeline stages in evaluation order. A denial names the first stage
/// whose condition fails.
enum class Stage : int {
    parse = 1,          // presentation layout
    holder = 2,         // holder DID resolves and is active
    presentation = 3,   // kid, envelope signature, fresh challenge
    credential = 4,     // trusted issuer, VC signature, validity window
    revocation = 5,     // Identity contract isRevoked
    wallet = 6,         // σ_a recovers to the DID document EOA
    purchase = 7,       // Service contract verifyProofOfPurchase
};

std::string_view stage_code(Stage stage);

struct HostedService {
    std::string id;
    std::string service_url;
    Eoa owner;
    dds::Cid cid;
    Bytes payload;
    std::optional<Address> service_contract;  // linked after tokenization
};

struct AccessDecision {
    bool granted = false;
    std::optional<Stage> stage;  // set on denial
    std::string reason;
    std::string grant;  // bearer token on success
    std::int64_t grant_expires = 0;
    std::optional<Eoa> consumer;

    Json to_json() const;
    static AccessDecision from_json(const Json& j);
};

/// One line per access decision, written before the decision is returned.
struct AuditRecord {
    std::int64_t time = 0;
    std::string service_id;
    bool granted = false;
    int stage = 0;
    std::string reason;
    std::string nonce;
    std::string holder;
    std::string vc_id;
    std::string eoa;
    std::uint64_t chain_height = 0;

    Json to_json() const;
};

struct ConnectorConfig {
    std::string base_url = "http://localhost";
    std::int64_t grant_ttl = kDefaultGrantTtl;
    std::int64_t challenge_ttl = crypto::kDefaultChallengeTtl;
};

/// Provider-side gateway. Hosts payloads, hands out challenges and serves
/// a payload only against a fresh single-use grant.
class Connector {
public:
    Connector(const vdr::Registry& registry, dds::Store& dds, const scp::Chain& chain,
              contracts::ProtocolAddresses addresses, vdr::Did trusted_issuer, const Clock& clock,
              Entropy& entropy, ConnectorConfig config = {});

    /// Stores the description on the DDS and hosts the payload under a
    /// fresh service URL. Errors: invalid_argument (empty payload).
    HostedService deploy_service(Bytes payload, const Json& description, const Eoa& owner);

    crypto::Challenge challenge();

    /// Runs the seven-stage pipeline. Errors: not_found (unknown service id).
    AccessDecision request_access(std::string_view service_id, std::string_view presentation_jwt);

    /// Consumes the grant. Errors: not_found (service), unauthorized (grant
    /// missing, expired, used, or issued for another service).
    Bytes fetch_payload(std::string_view service_id, std::string_view grant);

    std::optional<HostedService> service(std::string_view id) const;
    std::vector<HostedService> services() const;
    std::vector<AuditRecord> audit_log() const;
    const std::string& base_url() const { return config_.base_url; }

private:
    struct Grant {
        std::string service_id;
        std::int64_t expires = 0;
    };

    std::optional<Address> linked_contract(const std::string& service_id);
    AccessDecision decide(const std::string& service_id, std::string_view jwt, AuditRecord& audit);

    const vdr::Registry& registry_;
    dds::Store& dds_;
    const scp::Chain& chain_;
    contracts::ProtocolAddresses addresses_;
    vdr::Did trusted_issuer_;
    const Clock& clock_;
    Entropy& entropy_;
    ConnectorConfig config_;
    crypto::ChallengeStore challenges_;

    mutable std::mutex mu_;
    std::map<std::string, HostedService, std::less<>> services_;
    std::map<std::string, Grant, std::less<>> grants_;
    std::vector<AuditRecord> audit_;
};

}  // namespace medsim::connector
