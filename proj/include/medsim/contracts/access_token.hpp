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
#include <utility>

#include "medsim/scp/contract.hpp"

namespace medsim::contracts {

/// Fungible access token (18 decimals). Holding one whole token
/// (kWholeToken base units) is the proof of purchase for its service.
///
/// ctor:    {name, symbol, initial_holder, initial_supply, approved_spender?}
///          owner = deployer
/// execute: transfer{to, amount}, approve{spender, amount},
///          transferFrom{from, to, amount}, mint{amount}, burn{amount},
///          transferOwnership{new_owner}
/// view:    balanceOf{account}, allowance{owner, spender}, totalSupply,
///          owner, name, symbol, decimals
/// events:  Transfer{from, to, amount}, Approval{owner, spender, amount},
///          OwnershipTransferred{previous_owner, new_owner}
///
/// Mints are Transfer events from the zero address, burns are Transfer
/// events to it.
class AccessTokenContract final : public scp::Contract {
public:
    static constexpr std::string_view kCode = "access_token";

    std::string_view code_id() const override { return kCode; }
    std::unique_ptr<scp::Contract> clone() const override {
        return std::make_unique<AccessTokenContract>(*this);
    }
    Json execute(scp::CallContext& ctx, std::string_view method, const Json& args) override;
    Json view(const scp::ViewContext& ctx, std::string_view method, const Json& args) const override;
    Json state_json() const override;

    static std::unique_ptr<scp::Contract> construct(scp::CallContext& ctx, const Json& args);

private:
    Amount balance_of(const Address& a) const;
    void move(scp::CallContext& ctx, const Address& from, const Address& to, Amount amount);

    std::string name_;
    std::string symbol_;
    Address owner_;
    Amount total_supply_ = 0;
    std::map<Address, Amount> balances_;
    std::map<std::pair<Address, Address>, Amount> allowances_;
};

}  // namespace medsim::contracts
