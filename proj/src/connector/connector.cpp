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

#include "medsim/connector/connector.hpp"

#include "medsim/common/error.hpp"
#include "medsim/contracts/factory.hpp"
#include "medsim/creds/credential.hpp"
#include "medsim/creds/presentation.hpp"

namespace medsim::connector {

namespace {

constexpr std::string_view kAudience = "connector";

struct Denied {
    Stage stage;
    std::string reason;
};

[[noreturn]] void deny(Stage stage, std::string reason) { throw Denied{stage, std::move(reason)}; }

}  // namespace

std::string_view stage_code(Stage stage) {
    switch (stage) {
    case Stage::parse: return "MALFORMED_PRESENTATION";
    case Stage::holder: return "HOLDER_DID_UNRESOLVED";
    case Stage::presentation: return "PRESENTATION_INVALID";
    case Stage::credential: return "CREDENTIAL_INVALID";
    case Stage::revocation: return "CREDENTIAL_REVOKED";
    case Stage::wallet: return "WALLET_PROOF_INVALID";
    case Stage::purchase: return "NO_PROOF_OF_PURCHASE";
    }
    return "UNKNOWN";
}

Json AccessDecision::to_json() const {
    if (granted) {
        return Json{{"granted", true},
                    {"grant", grant},
                    {"expires", grant_expires},
                    {"consumer", consumer ? consumer->str() : ""}};
    }
    int s = stage ? static_cast<int>(*stage) : 0;
    return Json{{"granted", false},
                {"stage", s},
                {"code", stage ? stage_code(*stage) : "UNKNOWN"},
                {"reason", reason}};
}

AccessDecision AccessDecision::from_json(const Json& j) {
    AccessDecision d;
    const Json& granted = require_field(j, "granted");
    if (!granted.is_boolean()) throw Error(Errc::malformed, "granted must be a boolean");
    d.granted = granted.get<bool>();
    if (d.granted) {
        d.grant = require_string(j, "grant");
        d.grant_expires = require_int(j, "expires");
        std::string c = j.value("consumer", "");
        if (!c.empty()) d.consumer = Address::parse(c);
    } else {
        std::int64_t s = require_int(j, "stage");
        if (s < 1 || s > 7) throw Error(Errc::malformed, "stage out of range");
        d.stage = static_cast<Stage>(s);
        d.reason = j.value("reason", "");
    }
    return d;
}

Json AuditRecord::to_json() const {
    return Json{{"time", time},   {"service_id", service_id}, {"granted", granted},
                {"stage", stage}, {"reason", reason},         {"nonce", nonce},
                {"holder", holder}, {"vc_id", vc_id},         {"eoa", eoa},
                {"chain_height", chain_height}};
}

Connector::Connector(const vdr::Registry& registry, dds::Store& dds, const scp::Chain& chain,
                     contracts::ProtocolAddresses addresses, vdr::Did trusted_issuer,
                     const Clock& clock, Entropy& entropy, ConnectorConfig config)
    : registry_(registry),
      dds_(dds),
      chain_(chain),
      addresses_(addresses),
      trusted_issuer_(std::move(trusted_issuer)),
      clock_(clock),
      entropy_(entropy),
      config_(std::move(config)),
      challenges_(clock, entropy) {}

HostedService Connector::deploy_service(Bytes payload, const Json& description, const Eoa& owner) {
    if (payload.empty()) throw Error(Errc::invalid_argument, "service payload is empty");
    HostedService svc;
    svc.cid = dds_.put(as_bytes(canonical(description)));
    svc.owner = owner;
    svc.payload = std::move(payload);
    std::lock_guard lock(mu_);
    do {
        svc.id = random_uuid(entropy_);
    } while (services_.contains(svc.id));
    svc.service_url = config_.base_url + "/connector/services/" + svc.id + "/payload";
    services_.emplace(svc.id, svc);
    return svc;
}

crypto::Challenge Connector::challenge() {
    return challenges_.issue(std::string(kAudience), config_.challenge_ttl);
}

std::optional<HostedService> Connector::service(std::string_view id) const {
    std::lock_guard lock(mu_);
    auto it = services_.find(id);
    if (it == services_.end()) return std::nullopt;
    return it->second;
}

std::vector<HostedService> Connector::services() const {
    std::lock_guard lock(mu_);
    std::vector<HostedService> out;
    for (const auto& [_, s] : services_) out.push_back(s);
    return out;
}

std::vector<AuditRecord> Connector::audit_log() const {
    std::lock_guard lock(mu_);
    return audit_;
}

// The Service contract is found through the factory registry: the offering
// whose service URL is ours and whose current owner is the provider that
// deployed the payload.
std::optional<Address> Connector::linked_contract(const std::string& service_id) {
    HostedService svc;
    {
        std::lock_guard lock(mu_);
        const HostedService& s = services_.at(service_id);
        if (s.service_contract) return s.service_contract;
        svc = s;
    }
    Json offerings = chain_.call_static(addresses_.factory, "listOfferings", Json::object());
    for (const auto& j : offerings) {
        auto o = contracts::ServiceOffering::from_json(j);
        if (o.service_url == svc.service_url && o.owner == svc.owner) {
            std::lock_guard lock(mu_);
            services_.at(service_id).service_contract = o.service_contract;
            return o.service_contract;
        }
    }
    return std::nullopt;
}

AccessDecision Connector::decide(const std::string& service_id, std::string_view jwt,
                                 AuditRecord& audit) {
    // 1. layout
    creds::Presentation vp;
    creds::VerifiableCredential vc;
    try {
        vp = creds::Presentation::parse(jwt);
        vc = creds::VerifiableCredential::from_jwt(vp.credentials.front());
    } catch (const Error& e) {
        deny(Stage::parse, e.what());
    }
    audit.nonce = vp.nonce;
    audit.holder = vc.subject.str();
    audit.vc_id = vc.id;

    // 2. holder DID, taken from the inner credential
    vdr::Resolution holder;
    try {
        holder = registry_.resolve(vc.subject);
    } catch (const Error& e) {
        deny(Stage::holder, e.what());
    }
    if (holder.deactivated) deny(Stage::holder, "holder DID is deactivated");
    std::optional<crypto::IdentityPublicKey> holder_key;
    std::optional<Eoa> holder_eoa;
    try {
        holder.document.validate_member_shape();
        holder_key = holder.document.identity_key();
        holder_eoa = holder.document.wallet_eoa();
    } catch (const Error& e) {
        deny(Stage::holder, e.what());
    }

    // 3. presentation envelope and challenge
    try {
        auto [kid_did, fragment] = vdr::split_did_url(vp.kid);
        if (kid_did != vc.subject || fragment != vdr::kIdentityKeyFragment) {
            deny(Stage::presentation, "kid does not name the credential subject's identity key");
        }
    } catch (const Error& e) {
        deny(Stage::presentation, e.what());
    }
    if (vp.holder != vc.subject.str()) deny(Stage::presentation, "presentation issuer is not the credential subject");
    if (!vp.envelope.verify(*holder_key)) deny(Stage::presentation, "presentation signature does not verify");
    try {
        challenges_.consume(vp.nonce, std::nullopt);
    } catch (const Error& e) {
        deny(Stage::presentation, std::string("challenge rejected: ") + e.what());
    }

    // 4. credential
    if (vc.issuer != trusted_issuer_) deny(Stage::credential, "credential issuer is not trusted");
    vdr::Resolution issuer;
    try {
        issuer = registry_.resolve(vc.issuer);
    } catch (const Error& e) {
        deny(Stage::credential, e.what());
    }
    auto issuer_key = issuer.document.identity_key();
    if (issuer.deactivated || !issuer_key) deny(Stage::credential, "issuer DID is not usable");
    if (!vc.verify_signature(*issuer_key)) deny(Stage::credential, "credential signature does not verify");
    const std::int64_t now = clock_.now();
    if (!vc.valid_at(now)) deny(Stage::credential, "credential is outside its validity window");

    // 5. revocation list
    audit.chain_height = chain_.height();
    bool revoked = chain_.call_static(addresses_.identity, "isRevoked", {{"vc_id", vc.id}}).get<bool>();
    if (revoked) deny(Stage::revocation, "credential is revoked");

    // 6. wallet proof against the EOA of the DID document
    const Eoa eoa = *holder_eoa;
    audit.eoa = eoa.str();
    if (vc.eoa != eoa) deny(Stage::wallet, "credential EOA differs from the DID document EOA");
    bool wallet_ok = false;
    try {
        wallet_ok = crypto::verify_wallet(eoa, as_bytes(vp.nonce), vp.wallet_signature);
    } catch (const Error&) {
    }
    if (!wallet_ok) deny(Stage::wallet, "wallet signature does not recover to the holder EOA");

    // 7. proof of purchase
    auto contract = linked_contract(service_id);
    if (!contract) deny(Stage::purchase, "service is not tokenized");
    bool purchased =
        chain_.call_static(*contract, "verifyProofOfPurchase", {{"consumer", eoa.str()}}).get<bool>();
    if (!purchased) deny(Stage::purchase, "consumer holds less than one access token");

    AccessDecision d;
    d.granted = true;
    d.consumer = eoa;
    d.grant = to_hex(entropy_.draw<32>());
    d.grant_expires = now + config_.grant_ttl;
    return d;
}

AccessDecision Connector::request_access(std::string_view service_id, std::string_view jwt) {
    std::string id(service_id);
    if (!service(id)) throw Error(Errc::not_found, "unknown service: " + id);

    AuditRecord audit;
    audit.time = clock_.now();
    audit.service_id = id;
    AccessDecision decision;
    try {
        decision = decide(id, jwt, audit);
    } catch (const Denied& d) {
        decision.granted = false;
        decision.stage = d.stage;
        decision.reason = d.reason;
    }
    audit.granted = decision.granted;
    audit.stage = decision.stage ? static_cast<int>(*decision.stage) : 0;
    audit.reason = decision.reason;

    std::lock_guard lock(mu_);
    if (decision.granted) grants_[decision.grant] = {id, decision.grant_expires};
    audit_.push_back(std::move(audit));
    return decision;
}

Bytes Connector::fetch_payload(std::string_view service_id, std::string_view grant) {
    std::lock_guard lock(mu_);
    auto svc = services_.find(service_id);
    if (svc == services_.end()) throw Error(Errc::not_found, "unknown service: " + std::string(service_id));
    auto it = grants_.find(grant);
    if (it == grants_.end()) throw Error(Errc::unauthorized, "no valid access grant");
    Grant g = it->second;
    if (g.service_id != service_id) throw Error(Errc::unauthorized, "grant was issued for another service");
    grants_.erase(it);
    if (clock_.now() > g.expires) throw Error(Errc::unauthorized, "access grant expired");
    return svc->second.payload;
}

}  // namespace medsim::connector
