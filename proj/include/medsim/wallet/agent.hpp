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

#include <optional>
#include <string>
#include <vector>

#include "medsim/contracts/factory.hpp"
#include "medsim/wallet/backend.hpp"
#include "medsim/wallet/keystore.hpp"

namespace medsim::wallet {

struct PublishRequest {
    std::string connector_url;
    Bytes payload;
    Json description = Json::object();
    std::string alias;
    Amount supply = kWholeToken;
    Amount price = 0;
};

struct PublishResult {
    DeployedService hosted;
    scp::Receipt receipt;  // of the tokenize transaction
    std::optional<Address> service;
    std::optional<Address> access_token;
};

struct CatalogEntry {
    contracts::ServiceOffering offering;
    std::optional<Json> description;  // absent if the DDS lookup failed
    bool active = false;               // exchange allowance >= 1 AT
};

struct AccessResult {
    connector::AccessDecision decision;
    std::optional<Bytes> payload;
};

/// Client-side protocol driver for one member. Keys stay in `identity`;
/// only public material and signatures go to the backend.
class Agent {
public:
    Agent(Backend& backend, Identity& identity) : backend_(backend), id_(identity) {}

    Identity& identity() { return id_; }
    const Eoa& eoa() const { return id_.wallet.eoa(); }

    /// Registers the DID document with the VDR.
    void publish_identity();

    /// Challenge, dual signature, credential. Stores the JWT in identity().
    creds::VerifiableCredential join();

    /// Hosts the payload on the connector, then tokenizes it. A reverted
    /// tokenization leaves service/access_token empty.
    PublishResult publish(const PublishRequest& request);

    std::vector<CatalogEntry> catalog();

    /// Attaches the listed price.
    scp::Receipt buy(const Address& service);
    scp::Receipt buy(const Address& service, Amount value);

    /// Full access flow against the connector named in the service URL.
    AccessResult access(const Address& service);
    /// Signs a presentation over `nonce_hex`. Errors: unauthorized when no
    /// credential is stored.
    std::string presentation(std::string_view nonce_hex) const;

    Amount native_balance();
    Amount token_balance(const Address& token);
    Amount listed_price(const Address& service);

    scp::Receipt send(std::optional<Address> to, std::string method, Json args = Json::object(),
                      Amount value = 0);
    scp::Receipt transfer_native(const Address& to, Amount amount);
    scp::Receipt transfer_token(const Address& token, const Address& to, Amount amount);

private:
    Backend& backend_;
    Identity& id_;
};

}  // namespace medsim::wallet
