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

#include <string>

#include "medsim/connector/connector.hpp"
#include "medsim/contracts/protocol.hpp"
#include "medsim/creds/presentation.hpp"
#include "medsim/crypto/challenge.hpp"
#include "medsim/dds/store.hpp"
#include "medsim/scp/types.hpp"
#include "medsim/vdr/registry.hpp"

namespace medsim::node {
class Ecosystem;
}

namespace medsim::wallet {

/// What a connector returns after hosting a payload.
struct DeployedService {
    std::string id;
    std::string service_url;
    dds::Cid cid;
};

/// The user agent's view of the ecosystem. Every argument crossing this
/// interface is public material or a signature; keys never do.
class Backend {
public:
    virtual ~Backend() = default;

    virtual void publish_did(const vdr::DidDocument& doc) = 0;
    virtual vdr::Resolution resolve_did(const vdr::Did& did) = 0;

    virtual crypto::Challenge issuer_challenge(const vdr::Did& did) = 0;
    /// Returns the VC JWT.
    virtual std::string request_credential(const creds::CredentialRequest& request) = 0;

    virtual dds::Cid dds_put(ByteView content) = 0;
    virtual Bytes dds_get(const dds::Cid& cid) = 0;

    virtual contracts::ProtocolAddresses protocol() = 0;
    virtual scp::Receipt submit(const scp::Transaction& tx) = 0;
    virtual Json call(const Address& contract, std::string_view method, const Json& args) = 0;
    virtual Amount balance(const Address& account) = 0;
    virtual std::uint64_t nonce(const Address& account) = 0;

    virtual DeployedService deploy_service(const std::string& connector_url, ByteView payload,
                                           const Json& description, const Eoa& owner) = 0;
    virtual crypto::Challenge connector_challenge(const std::string& connector_url) = 0;
    virtual connector::AccessDecision request_access(const std::string& connector_url,
                                                     const std::string& service_id,
                                                     const std::string& presentation) = 0;
    virtual Bytes fetch_payload(const std::string& connector_url, const std::string& service_id,
                                const std::string& grant) = 0;
};

/// Direct calls into an in-process ecosystem.
class InProcessBackend final : public Backend {
public:
    explicit InProcessBackend(node::Ecosystem& eco) : eco_(eco) {}

    void publish_did(const vdr::DidDocument& doc) override;
    vdr::Resolution resolve_did(const vdr::Did& did) override;
    crypto::Challenge issuer_challenge(const vdr::Did& did) override;
    std::string request_credential(const creds::CredentialRequest& request) override;
    dds::Cid dds_put(ByteView content) override;
    Bytes dds_get(const dds::Cid& cid) override;
    contracts::ProtocolAddresses protocol() override;
    scp::Receipt submit(const scp::Transaction& tx) override;
    Json call(const Address& contract, std::string_view method, const Json& args) override;
    Amount balance(const Address& account) override;
    std::uint64_t nonce(const Address& account) override;
    DeployedService deploy_service(const std::string& connector_url, ByteView payload,
                                   const Json& description, const Eoa& owner) override;
    crypto::Challenge connector_challenge(const std::string& connector_url) override;
    connector::AccessDecision request_access(const std::string& connector_url,
                                             const std::string& service_id,
                                             const std::string& presentation) override;
    Bytes fetch_payload(const std::string& connector_url, const std::string& service_id,
                        const std::string& grant) override;

private:
    connector::Connector& connector(const std::string& url);

    node::Ecosystem& eco_;
};

}  // namespace medsim::wallet
