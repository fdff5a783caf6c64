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
#include <string>

#include "medsim/common/clock.hpp"
#include "medsim/contracts/protocol.hpp"
#include "medsim/crypto/hash.hpp"
#include "medsim/crypto/wallet_key.hpp"
#include "medsim/scp/chain.hpp"

namespace medsim::testing {

inline crypto::WalletKeyPair wallet_for(const std::string& name) {
    Hash32 seed = crypto::sha256(as_bytes("wallet:" + name));
    return crypto::WalletKeyPair::generate(ByteView(seed));
}

// A booted protocol with named funded actors. Keys derive from the actor
// name so tests stay reproducible.
class World {
public:
    static constexpr std::int64_t kStart = 1'700'000'000;
    static constexpr Amount kFunding = Amount(1000) * kWholeToken;

    explicit World(std::initializer_list<std::string> actors = {"alice", "bob", "carol"})
        : clock_(kStart), issuer_(wallet_for("issuer")), router_admin_(wallet_for("router")) {
        contracts::Genesis g;
        g.issuer_admin = issuer_.eoa();
        g.router_admin = router_admin_.eoa();
        for (const auto& name : actors) {
            keys_.emplace(name, wallet_for(name));
            g.allocations[keys_.at(name).eoa()] = kFunding;
        }
        g.allocations[issuer_.eoa()] = kFunding;
        auto d = contracts::boot_chain(g, clock_);
        chain_ = std::move(d.chain);
        addr_ = d.addresses;
    }

    scp::Chain& chain() { return *chain_; }
    ManualClock& clock() { return clock_; }
    const contracts::ProtocolAddresses& addr() const { return addr_; }
    const crypto::WalletKeyPair& key(const std::string& name) const { return keys_.at(name); }
    Eoa eoa(const std::string& name) const { return keys_.at(name).eoa(); }
    const crypto::WalletKeyPair& issuer() const { return issuer_; }
    const crypto::WalletKeyPair& router_admin() const { return router_admin_; }

    scp::Receipt send(const crypto::WalletKeyPair& k, std::optional<Address> to, std::string method,
                      Json args = Json::object(), Amount value = 0) {
        scp::Transaction tx;
        tx.from = k.eoa();
        tx.to = to;
        tx.method = std::move(method);
        tx.args = std::move(args);
        tx.value = value;
        tx.nonce = chain_->nonce(tx.from);
        tx.sign(k);
        return chain_->submit(tx);
    }
    scp::Receipt send(const std::string& who, std::optional<Address> to, std::string method,
                      Json args = Json::object(), Amount value = 0) {
        return send(key(who), to, std::move(method), std::move(args), value);
    }

    scp::Receipt add_user(const std::string& who, std::int64_t lifetime = 365 * 86400) {
        return send(issuer_, addr_.identity, "addUser",
                    {{"vc_id", "urn:vc:" + who},
                     {"eoa", eoa(who).str()},
                     {"issuance", clock_.now()},
                     {"expiration", clock_.now() + lifetime}});
    }

    scp::Receipt revoke(const std::string& who) {
        return send(issuer_, addr_.identity, "revoke", {{"vc_id", "urn:vc:" + who}});
    }

    struct Offering {
        Address service;
        Address access_token;
    };

    Offering tokenize(const std::string& who, const std::string& alias, Amount supply, Amount price) {
        auto r = send(who, addr_.factory, "tokenize",
                      {{"alias", alias},
                       {"cid", "sha256-" + std::string(64, 'a')},
                       {"service_url", "http://connector/services/" + alias},
                       {"supply", amount_to_string(supply)},
                       {"price", amount_to_string(price)}});
        if (!r.ok()) throw std::runtime_error("tokenize reverted: " + r.error);
        return {Address::parse(r.result.at("service").get<std::string>()),
                Address::parse(r.result.at("access_token").get<std::string>())};
    }

    scp::Receipt buy(const std::string& who, const Address& service, Amount value) {
        return send(who, addr_.exchange, "buy", {{"service", service.str()}}, value);
    }

    Amount at_balance(const Address& token, const Address& account) const {
        return parse_amount(
            chain_->call_static(token, "balanceOf", {{"account", account.str()}}).get<std::string>());
    }

    bool has_valid_status(const std::string& who) const {
        return chain_->call_static(addr_.identity, "hasValidStatus", {{"eoa", eoa(who).str()}})
            .get<bool>();
    }

private:
    ManualClock clock_;
    crypto::WalletKeyPair issuer_;
    crypto::WalletKeyPair router_admin_;
    std::map<std::string, crypto::WalletKeyPair> keys_;
    std::unique_ptr<scp::Chain> chain_;
    contracts::ProtocolAddresses addr_;
};

}  // namespace medsim::testing
