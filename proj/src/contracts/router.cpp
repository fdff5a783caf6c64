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

#include "medsim/contracts/router.hpp"

#include <algorithm>

#include "args.hpp"

namespace medsim::contracts {

using namespace detail;

std::unique_ptr<scp::Contract> RouterContract::construct(scp::CallContext&, const Json& args) {
    auto r = std::make_unique<RouterContract>();
    r->admin_ = arg_address(args, "admin");
    if (args.contains("exchanges")) {
        for (const auto& e : args.at("exchanges")) {
            r->exchanges_.push_back(Address::parse(e.get<std::string>()));
        }
    }
    return r;
}

Json RouterContract::execute(scp::CallContext& ctx, std::string_view method, const Json& args) {
    if (method == "addExchange" || method == "removeExchange") {
        scp::require(ctx.sender() == admin_, "UNAUTHORIZED: only the router admin may edit exchanges");
        Address exchange = arg_address(args, "exchange");
        auto it = std::find(exchanges_.begin(), exchanges_.end(), exchange);
        if (method == "addExchange") {
            scp::require(it == exchanges_.end(), "DUPLICATE: exchange already registered");
            exchanges_.push_back(exchange);
            ctx.emit("ExchangeAdded", {{"exchange", exchange.str()}});
        } else {
            scp::require(it != exchanges_.end(), "UNKNOWN_EXCHANGE");
            exchanges_.erase(it);
            ctx.emit("ExchangeRemoved", {{"exchange", exchange.str()}});
        }
        return nullptr;
    }
    return view(ctx.view_context(), method, args);
}

Json RouterContract::view(const scp::ViewContext&, std::string_view method, const Json&) const {
    if (method == "list") {
        Json out = Json::array();
        for (const auto& e : exchanges_) out.push_back(e.str());
        return out;
    }
    if (method == "admin") return admin_.str();
    scp::unknown_method(kCode, method);
}

Json RouterContract::state_json() const {
    Json list = Json::array();
    for (const auto& e : exchanges_) list.push_back(e.str());
    return Json{{"admin", admin_.str()}, {"exchanges", std::move(list)}};
}

}  // namespace medsim::contracts
