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

#include "medsim/node/ecosystem.hpp"

#include "medsim/common/error.hpp"

namespace medsim::node {

Ecosystem::Ecosystem(EcosystemOptions options) : grant_ttl_(options.grant_ttl) {
    if (options.seed) {
        auto manual = std::make_unique<ManualClock>(options.start_time);
        manual_ = manual.get();
        owned_clock_ = std::move(manual);
        entropy_ = std::make_unique<DeterministicEntropy>(*options.seed);
    } else {
        owned_clock_ = std::make_unique<SystemClock>();
        entropy_ = std::make_unique<SystemEntropy>();
    }
    clock_ = owned_clock_.get();

    auto identity = crypto::IdentityKeyPair::generate(*entropy_);
    auto admin = crypto::WalletKeyPair::generate(*entropy_);

    contracts::Genesis genesis;
    genesis.allocations = std::move(options.allocations);
    genesis.issuer_admin = admin.eoa();
    genesis.router_admin = options.router_admin.is_zero() ? admin.eoa() : options.router_admin;
    deployment_ = contracts::boot_chain(genesis, *clock_);

    issuer_ = std::make_unique<issuer::Issuer>(registry_, *deployment_.chain, deployment_.addresses,
                                               *clock_, *entropy_, std::move(identity),
                                               std::move(admin), options.issuer);
}

Ecosystem::~Ecosystem() = default;

connector::Connector& Ecosystem::add_connector(const std::string& base_url) {
    if (connectors_.contains(base_url)) {
        throw Error(Errc::duplicate, "connector already served at " + base_url);
    }
    connector::ConnectorConfig cfg;
    cfg.base_url = base_url;
    cfg.grant_ttl = grant_ttl_;
    auto c = std::make_unique<connector::Connector>(registry_, dds_, *deployment_.chain,
                                                    deployment_.addresses, issuer_->did(), *clock_,
                                                    *entropy_, cfg);
    auto& ref = *c;
    connectors_.emplace(base_url, std::move(c));
    return ref;
}

connector::Connector* Ecosystem::connector(std::string_view base_url) {
    auto it = connectors_.find(base_url);
    return it == connectors_.end() ? nullptr : it->second.get();
}

std::vector<std::string> Ecosystem::connector_urls() const {
    std::vector<std::string> out;
    for (const auto& [url, _] : connectors_) out.push_back(url);
    return out;
}

std::pair<std::string, std::string> split_service_url(std::string_view url) {
    constexpr std::string_view kMid = "/connector/services/";
    constexpr std::string_view kTail = "/payload";
    auto mid = url.rfind(kMid);
    if (mid == std::string_view::npos || url.size() < kTail.size() ||
        url.substr(url.size() - kTail.size()) != kTail) {
        throw Error(Errc::malformed, "not a connector service URL: " + std::string(url));
    }
    auto id_begin = mid + kMid.size();
    auto id_end = url.size() - kTail.size();
    if (id_end <= id_begin) throw Error(Errc::malformed, "service URL has no id");
    std::string id(url.substr(id_begin, id_end - id_begin));
    if (id.find('/') != std::string::npos) throw Error(Errc::malformed, "service id contains '/'");
    return {std::string(url.substr(0, mid)), id};
}

}  // namespace medsim::node
