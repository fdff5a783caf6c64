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

#include "medsim/contracts/factory.hpp"

#include "args.hpp"
#include "medsim/contracts/access_token.hpp"
#include "medsim/contracts/service.hpp"
#include "medsim/dds/store.hpp"

namespace medsim::contracts {

using namespace detail;

Json ServiceOffering::to_json() const {
    return Json{{"alias", alias},
                {"cid", cid},
                {"service_url", service_url},
                {"service_contract", service_contract.str()},
                {"access_token_contract", access_token_contract.str()},
                {"owner", owner.str()},
                {"price", amount_to_string(price)}};
}

ServiceOffering ServiceOffering::from_json(const Json& j) {
    ServiceOffering o;
    o.alias = require_string(j, "alias");
    o.cid = require_string(j, "cid");
    o.service_url = require_string(j, "service_url");
    o.service_contract = Address::parse(require_string(j, "service_contract"));
    o.access_token_contract = Address::parse(require_string(j, "access_token_contract"));
    o.owner = Address::parse(require_string(j, "owner"));
    o.price = require_amount(j, "price");
    return o;
}

std::unique_ptr<scp::Contract> FactoryContract::construct(scp::CallContext&, const Json& args) {
    auto f = std::make_unique<FactoryContract>();
    f->identity_ = arg_address(args, "identity");
    f->exchange_ = arg_address(args, "exchange");
    return f;
}

Json FactoryContract::execute(scp::CallContext& ctx, std::string_view method, const Json& args) {
    if (method != "tokenize") {
        return view(ctx.view_context(), method, args);
    }
    const Eoa provider = ctx.sender();
    Json valid = ctx.view(identity_, "hasValidStatus", {{"eoa", provider.str()}});
    scp::require(valid.get<bool>(), "INVALID_VC: caller does not hold a valid credential");

    Record rec;
    rec.alias = arg_string(args, "alias");
    rec.cid = dds::Cid::parse(arg_string(args, "cid")).str();
    rec.service_url = arg_string(args, "service_url");
    rec.price = arg_amount(args, "price");
    Amount supply = arg_amount(args, "supply");
    scp::require(!rec.alias.empty(), "INVALID: empty alias");
    scp::require(!rec.service_url.empty(), "INVALID: empty service url");
    scp::require(supply >= kWholeToken, "INVALID_SUPPLY: at least one whole AT must be minted");
    scp::require(rec.price > 0, "INVALID_PRICE: price must be positive");

    rec.access_token = ctx.deploy(AccessTokenContract::kCode,
                                  {{"name", rec.alias + " access token"},
                                   {"symbol", "AT"},
                                   {"initial_holder", provider.str()},
                                   {"initial_supply", amount_json(supply)},
                                   {"approved_spender", exchange_.str()}});
    rec.service = ctx.deploy(ServiceContract::kCode, {{"alias", rec.alias},
                                                      {"cid", rec.cid},
                                                      {"service_url", rec.service_url},
                                                      {"access_token", rec.access_token.str()}});
    ctx.call(exchange_, "createListing", {{"service", rec.service.str()},
                                          {"access_token", rec.access_token.str()},
                                          {"provider", provider.str()},
                                          {"price", amount_json(rec.price)}});
    ctx.call(rec.access_token, "transferOwnership", {{"new_owner", provider.str()}});
    ctx.call(rec.service, "transferOwnership", {{"new_owner", provider.str()}});

    offerings_.push_back(rec);
    ctx.emit("ServiceTokenized", {{"service", rec.service.str()},
                                  {"access_token", rec.access_token.str()},
                                  {"owner", provider.str()},
                                  {"alias", rec.alias},
                                  {"cid", rec.cid},
                                  {"service_url", rec.service_url},
                                  {"supply", amount_json(supply)},
                                  {"price", amount_json(rec.price)}});
    return Json{{"service", rec.service.str()}, {"access_token", rec.access_token.str()}};
}

Json FactoryContract::view(const scp::ViewContext& ctx, std::string_view method, const Json&) const {
    if (method == "listOfferings") {
        Json out = Json::array();
        for (const auto& r : offerings_) {
            ServiceOffering o{r.alias,
                              r.cid,
                              r.service_url,
                              r.service,
                              r.access_token,
                              Address::parse(ctx.view(r.service, "owner", Json::object()).get<std::string>()),
                              r.price};
            out.push_back(o.to_json());
        }
        return out;
    }
    if (method == "offeringCount") return offerings_.size();
    scp::unknown_method(kCode, method);
}

Json FactoryContract::state_json() const {
    Json list = Json::array();
    for (const auto& r : offerings_) {
        list.push_back({{"alias", r.alias},
                        {"cid", r.cid},
                        {"service_url", r.service_url},
                        {"service", r.service.str()},
                        {"access_token", r.access_token.str()},
                        {"price", amount_json(r.price)}});
    }
    return Json{{"identity", identity_.str()}, {"exchange", exchange_.str()}, {"offerings", std::move(list)}};
}

}  // namespace medsim::contracts
