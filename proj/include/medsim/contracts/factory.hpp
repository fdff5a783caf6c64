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
#include <vector>

#include "medsim/scp/contract.hpp"

namespace medsim::contracts {

/// Entry of the tokenization registry as returned by listOfferings.
struct ServiceOffering {
    std::string alias;
    std::string cid;
    std::string service_url;
    Address service_contract;
    Address access_token_contract;
    Eoa owner;
    Amount price = 0;

    Json to_json() const;
    static ServiceOffering from_json(const Json& j);
};

/// Deploys a Service + Access Token pair per tokenization and keeps the
/// discovery registry.
///
/// ctor:    {identity, exchange}
/// execute: tokenize{alias, cid, service_url, supply, price}
///          -> {service, access_token}
/// view:    listOfferings, offeringCount
/// events:  ServiceTokenized{service, access_token, owner, alias, cid,
///          service_url, supply, price}
class FactoryContract final : public scp::Contract {
public:
    static constexpr std::string_view kCode = "factory";

    std::string_view code_id() const override { return kCode; }
    std::unique_ptr<scp::Contract> clone() const override {
        return std::make_unique<FactoryContract>(*this);
    }
    Json execute(scp::CallContext& ctx, std::string_view method, const Json& args) override;
    Json view(const scp::ViewContext& ctx, std::string_view method, const Json& args) const override;
    Json state_json() const override;

    static std::unique_ptr<scp::Contract> construct(scp::CallContext& ctx, const Json& args);

private:
    struct Record {
        std::string alias;
        std::string cid;
        std::string service_url;
        Address service;
        Address access_token;
        Amount price = 0;
    };

    Address identity_;
    Address exchange_;
    std::vector<Record> offerings_;
};

}  // namespace medsim::contracts
