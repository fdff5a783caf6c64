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

#include "medsim/contracts/service.hpp"

#include "args.hpp"

namespace medsim::contracts {

using namespace detail;

std::unique_ptr<scp::Contract> ServiceContract::construct(scp::CallContext& ctx, const Json& args) {
    auto svc = std::make_unique<ServiceContract>();
    svc->alias_ = arg_string(args, "alias");
    svc->cid_ = arg_string(args, "cid");
    svc->service_url_ = arg_string(args, "service_url");
    svc->access_token_ = arg_address(args, "access_token");
    svc->owner_ = ctx.sender();
    ctx.emit("Transfer", {{"from", Address{}.str()}, {"to", svc->owner_.str()}, {"token_id", kServiceTokenId}});
    return svc;
}

Json ServiceContract::execute(scp::CallContext& ctx, std::string_view method, const Json& args) {
    if (method == "transferOwnership") {
        scp::require(ctx.sender() == owner_, "UNAUTHORIZED: only the owner may transfer the service");
        Address next = arg_address(args, "new_owner");
        scp::require(!next.is_zero(), "INVALID: transfer to the zero address");
        ctx.emit("Transfer", {{"from", owner_.str()}, {"to", next.str()}, {"token_id", kServiceTokenId}});
        owner_ = next;
        return nullptr;
    }
    return view(ctx.view_context(), method, args);
}

Json ServiceContract::view(const scp::ViewContext& ctx, std::string_view method,
                           const Json& args) const {
    if (method == "owner") return owner_.str();
    if (method == "ownerOf") {
        scp::require(arg_int(args, "token_id") == static_cast<std::int64_t>(kServiceTokenId),
                     "UNKNOWN_TOKEN");
        return owner_.str();
    }
    if (method == "metadata") {
        return Json{{"alias", alias_}, {"cid", cid_}, {"service_url", service_url_}};
    }
    if (method == "accessToken") return access_token_.str();
    if (method == "verifyProofOfPurchase") {
        Json balance = ctx.view(access_token_, "balanceOf",
                                {{"account", arg_string(args, "consumer")}});
        return parse_amount(balance.get<std::string>()) >= kWholeToken;
    }
    scp::unknown_method(kCode, method);
}

Json ServiceContract::state_json() const {
    return Json{{"alias", alias_},
                {"cid", cid_},
                {"service_url", service_url_},
                {"access_token", access_token_.str()},
                {"owner", owner_.str()}};
}

}  // namespace medsim::contracts
