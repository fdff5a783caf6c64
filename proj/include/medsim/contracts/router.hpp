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

#include <vector>

#include "medsim/scp/contract.hpp"

namespace medsim::contracts {

/// Registry of active exchange contracts. Pure registry: purchases go to
/// the exchange directly.
///
/// ctor:    {admin, exchanges: [..]}
/// execute: addExchange{exchange}, removeExchange{exchange}
/// view:    list, admin
/// events:  ExchangeAdded{exchange}, ExchangeRemoved{exchange}
class RouterContract final : public scp::Contract {
public:
    static constexpr std::string_view kCode = "router";

    std::string_view code_id() const override { return kCode; }
    std::unique_ptr<scp::Contract> clone() const override {
        return std::make_unique<RouterContract>(*this);
    }
    Json execute(scp::CallContext& ctx, std::string_view method, const Json& args) override;
    Json view(const scp::ViewContext& ctx, std::string_view method, const Json& args) const override;
    Json state_json() const override;

    static std::unique_ptr<scp::Contract> construct(scp::CallContext& ctx, const Json& args);

private:
    Address admin_;
    std::vector<Address> exchanges_;
};

}  // namespace medsim::contracts
