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
#include <string_view>

#include "medsim/scp/contract.hpp"

namespace medsim::contracts {

/// Revert reasons of FixedRateExchange.buy; each receipt error starts with
/// one of these codes.
namespace buy_error {
inline constexpr std::string_view kUnknownService = "UNKNOWN_SERVICE";
inline constexpr std::string_view kWrongAmount = "WRONG_AMOUNT";
inline constexpr std::string_view kInvalidConsumerVc = "INVALID_CONSUMER_VC";
inline constexpr std::string_view kInvalidProviderVc = "INVALID_PROVIDER_VC";
inline constexpr std::string_view kAllowanceExhausted = "ALLOWANCE_EXHAUSTED";
inline constexpr std::string_view kOutOfStock = "OUT_OF_STOCK";
}  // namespace buy_error

struct FixedRateListing {
    Address service;
    Address access_token;
    Eoa provider;
    Amount price = 0;  // native base units per whole AT

    Json to_json() const;
};

/// Sells one whole AT for a fixed native price, pulling the AT from the
/// provider through the allowance granted at tokenization.
///
/// ctor:    {identity}
/// execute: setFactory{factory} (genesis only), createListing{service,
///          access_token, provider, price} (factory only), buy{service}
///          (payable)
/// view:    listing{service}, listings, factory
/// events:  AccessPurchased{service, access_token, consumer, provider,
///          price, amount}
class FixedRateExchangeContract final : public scp::Contract {
public:
    static constexpr std::string_view kCode = "fixed_rate_exchange";

    std::string_view code_id() const override { return kCode; }
    std::unique_ptr<scp::Contract> clone() const override {
        return std::make_unique<FixedRateExchangeContract>(*this);
    }
    Json execute(scp::CallContext& ctx, std::string_view method, const Json& args) override;
    Json view(const scp::ViewContext& ctx, std::string_view method, const Json& args) const override;
    Json state_json() const override;
    bool payable(std::string_view method) const override { return method == "buy"; }

    static std::unique_ptr<scp::Contract> construct(scp::CallContext& ctx, const Json& args);

private:
    Json listing_json(const scp::ViewContext& ctx, const FixedRateListing& l) const;
    Json buy(scp::CallContext& ctx, const Json& args);

    Address identity_;
    Address factory_;
    std::map<Address, FixedRateListing> listings_;
};

}  // namespace medsim::contracts
