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

#include "medsim/contracts/exchange.hpp"

#include "args.hpp"

namespace medsim::contracts {

using namespace detail;

namespace {

std::string reason(std::string_view code, std::string_view detail) {
    return std::string(code) + ": " + std::string(detail);
}

}  // namespace

Json FixedRateListing::to_json() const {
    return Json{{"service", service.str()},
                {"access_token", access_token.str()},
                {"provider", provider.str()},
                {"price", amount_json(price)}};
}

std::unique_ptr<scp::Contract> FixedRateExchangeContract::construct(scp::CallContext&,
                                                                    const Json& args) {
    auto x = std::make_unique<FixedRateExchangeContract>();
    x->identity_ = arg_address(args, "identity");
    return x;
}

Json FixedRateExchangeContract::execute(scp::CallContext& ctx, std::string_view method,
                                        const Json& args) {
    if (method == "buy") {
        return buy(ctx, args);
    }
    if (method == "setFactory") {
        scp::require(ctx.sender().is_zero() && factory_.is_zero(),
                     "UNAUTHORIZED: factory is wired at genesis");
        factory_ = arg_address(args, "factory");
        return nullptr;
    }
    if (method == "createListing") {
        scp::require(!factory_.is_zero() && ctx.sender() == factory_,
                     "UNAUTHORIZED: listings are created by the factory");
        FixedRateListing l{arg_address(args, "service"), arg_address(args, "access_token"),
                           arg_address(args, "provider"), arg_amount(args, "price")};
        scp::require(l.price > 0, "INVALID_PRICE");
        scp::require(!listings_.contains(l.service), "DUPLICATE: service already listed");
        listings_.emplace(l.service, l);
        return nullptr;
    }
    return view(ctx.view_context(), method, args);
}

// Checks run in a fixed order so the first failing condition names the
// revert. Any revert discards the whole transaction, including the
// attached value, so the consumer keeps the native tokens and the provider
// keeps the AT.
Json FixedRateExchangeContract::buy(scp::CallContext& ctx, const Json& args) {
    const Eoa consumer = ctx.sender();
    Address service = arg_address(args, "service");
    auto it = listings_.find(service);
    scp::require(it != listings_.end(),
                 reason(buy_error::kUnknownService, "no listing for " + service.str()));
    const FixedRateListing& l = it->second;

    scp::require(ctx.value() == l.price,
                 reason(buy_error::kWrongAmount, "attached " + amount_to_string(ctx.value()) +
                                                     ", price is " + amount_to_string(l.price)));
    auto valid = [&](const Eoa& who) {
        return ctx.view(identity_, "hasValidStatus", {{"eoa", who.str()}}).get<bool>();
    };
    scp::require(valid(consumer), reason(buy_error::kInvalidConsumerVc,
                                         "consumer credential is missing, expired or revoked"));
    scp::require(valid(l.provider), reason(buy_error::kInvalidProviderVc,
                                           "provider credential is missing, expired or revoked"));
    Amount allowance = parse_amount(
        ctx.view(l.access_token, "allowance",
                 {{"owner", l.provider.str()}, {"spender", ctx.self().str()}})
            .get<std::string>());
    scp::require(allowance >= kWholeToken,
                 reason(buy_error::kAllowanceExhausted, "provider allowance below one AT"));
    Amount stock = parse_amount(
        ctx.view(l.access_token, "balanceOf", {{"account", l.provider.str()}}).get<std::string>());
    scp::require(stock >= kWholeToken, reason(buy_error::kOutOfStock, "provider holds no AT"));

    ctx.transfer_native(l.provider, l.price);
    ctx.call(l.access_token, "transferFrom", {{"from", l.provider.str()},
                                              {"to", consumer.str()},
                                              {"amount", amount_json(kWholeToken)}});
    ctx.emit("AccessPurchased", {{"service", service.str()},
                                 {"access_token", l.access_token.str()},
                                 {"consumer", consumer.str()},
                                 {"provider", l.provider.str()},
                                 {"price", amount_json(l.price)},
                                 {"amount", amount_json(kWholeToken)}});
    return Json{{"access_token", l.access_token.str()}, {"amount", amount_json(kWholeToken)}};
}

Json FixedRateExchangeContract::listing_json(const scp::ViewContext& ctx,
                                             const FixedRateListing& l) const {
    Json j = l.to_json();
    Amount allowance = parse_amount(
        ctx.view(l.access_token, "allowance",
                 {{"owner", l.provider.str()}, {"spender", ctx.self().str()}})
            .get<std::string>());
    j["allowance"] = amount_json(allowance);
    j["active"] = allowance >= kWholeToken;
    return j;
}

Json FixedRateExchangeContract::view(const scp::ViewContext& ctx, std::string_view method,
                                     const Json& args) const {
    if (method == "listing") {
        auto it = listings_.find(arg_address(args, "service"));
        return it == listings_.end() ? Json(nullptr) : listing_json(ctx, it->second);
    }
    if (method == "listings") {
        Json out = Json::array();
        for (const auto& [_, l] : listings_) out.push_back(listing_json(ctx, l));
        return out;
    }
    if (method == "factory") return factory_.str();
    scp::unknown_method(kCode, method);
}

Json FixedRateExchangeContract::state_json() const {
    Json list = Json::object();
    for (const auto& [svc, l] : listings_) list[svc.str()] = l.to_json();
    return Json{{"identity", identity_.str()}, {"factory", factory_.str()}, {"listings", std::move(list)}};
}

}  // namespace medsim::contracts
