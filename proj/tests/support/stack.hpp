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
#include <memory>
#include <string>

#include "medsim/crypto/hash.hpp"
#include "medsim/node/ecosystem.hpp"
#include "medsim/wallet/agent.hpp"

namespace medsim::testing {

inline constexpr std::string_view kConnectorUrl = "http://provider.test";

// Seeded in-process ecosystem with named members, each with a funded
// wallet and an agent talking through the in-process backend.
class Stack {
public:
    static constexpr Amount kFunding = Amount(1000) * kWholeToken;

    explicit Stack(std::initializer_list<std::string> names = {"alice", "bob", "carol"},
                   std::string seed = "stack") {
        DeterministicEntropy keys(crypto::sha256(as_bytes("members:" + seed)));
        node::EcosystemOptions opts;
        opts.seed = crypto::sha256(as_bytes(seed));
        for (const auto& n : names) {
            ids_.emplace(n, std::make_unique<wallet::Identity>(wallet::Identity::generate(keys)));
            opts.allocations[ids_.at(n)->wallet.eoa()] = kFunding;
        }
        eco_ = std::make_unique<node::Ecosystem>(opts);
        eco_->add_connector(std::string(kConnectorUrl));
        backend_ = std::make_unique<wallet::InProcessBackend>(*eco_);
        for (const auto& n : names) agents_.emplace(n, wallet::Agent(*backend_, *ids_.at(n)));
    }

    node::Ecosystem& eco() { return *eco_; }
    ManualClock& clock() { return *eco_->logical_clock(); }
    connector::Connector& conn() { return *eco_->connector(kConnectorUrl); }
    wallet::Agent& agent(const std::string& n) { return agents_.at(n); }
    wallet::Identity& id(const std::string& n) { return *ids_.at(n); }
    wallet::Backend& backend() { return *backend_; }

    void onboard(const std::string& n) {
        agent(n).publish_identity();
        agent(n).join();
    }

    wallet::PublishResult publish(const std::string& n, std::string payload, Amount price = 2 * kWholeToken,
                                  Amount supply = 5 * kWholeToken) {
        wallet::PublishRequest req;
        req.connector_url = std::string(kConnectorUrl);
        req.payload = to_bytes(payload);
        req.description = {{"name", "svc"}, {"description", "test service"}};
        req.alias = "svc-" + payload;
        req.supply = supply;
        req.price = price;
        auto r = agent(n).publish(req);
        if (!r.receipt.ok()) throw std::runtime_error("publish reverted: " + r.receipt.error);
        return r;
    }

private:
    std::map<std::string, std::unique_ptr<wallet::Identity>> ids_;
    std::unique_ptr<node::Ecosystem> eco_;
    std::unique_ptr<wallet::InProcessBackend> backend_;
    std::map<std::string, wallet::Agent> agents_;
};

}  // namespace medsim::testing
