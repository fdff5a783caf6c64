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

#include "medsim/scp/contract.hpp"

namespace medsim::contracts {

inline constexpr std::uint64_t kServiceTokenId = 1;

/// Single-token NFT standing for one tokenized service.
///
/// ctor:    {alias, cid, service_url, access_token}; owner = deployer
/// execute: transferOwnership{new_owner}
/// view:    owner, ownerOf{token_id}, metadata, accessToken,
///          verifyProofOfPurchase{consumer}
/// events:  Transfer{from, to, token_id}
class ServiceContract final : public scp::Contract {
public:
    static constexpr std::string_view kCode = "service";

    std::string_view code_id() const override { return kCode; }
    std::unique_ptr<scp::Contract> clone() const override {
        return std::make_unique<ServiceContract>(*this);
    }
    Json execute(scp::CallContext& ctx, std::string_view method, const Json& args) override;
    Json view(const scp::ViewContext& ctx, std::string_view method, const Json& args) const override;
    Json state_json() const override;

    static std::unique_ptr<scp::Contract> construct(scp::CallContext& ctx, const Json& args);

private:
    std::string alias_;
    std::string cid_;
    std::string service_url_;
    Address access_token_;
    Address owner_;
};

}  // namespace medsim::contracts
