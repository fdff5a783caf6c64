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

#include "medsim/contracts/identity.hpp"

#include "args.hpp"

namespace medsim::contracts {

using namespace detail;

Json VcStatus::to_json() const {
    return Json{{"user_eoa", user_eoa.str()},
                {"issuance_date", issuance_date},
                {"expiration_date", expiration_date},
                {"revoked", revoked}};
}

VcStatus VcStatus::from_json(const Json& j) {
    VcStatus s;
    s.user_eoa = Address::parse(require_string(j, "user_eoa"));
    s.issuance_date = require_int(j, "issuance_date");
    s.expiration_date = require_int(j, "expiration_date");
    const Json& revoked = require_field(j, "revoked");
    if (!revoked.is_boolean()) throw Error(Errc::malformed, "revoked must be a boolean");
    s.revoked = revoked.get<bool>();
    return s;
}

bool status_is_valid(const VcStatus& status, std::int64_t now) {
    return !status.revoked && status.issuance_date <= now && now <= status.expiration_date;
}

std::unique_ptr<scp::Contract> IdentityContract::construct(scp::CallContext&, const Json& args) {
    return std::make_unique<IdentityContract>(arg_address(args, "admin"));
}

bool IdentityContract::has_valid_status(const Eoa& eoa, std::int64_t now) const {
    auto bound = vc_of_.find(eoa);
    if (bound == vc_of_.end()) return false;
    return status_is_valid(status_.at(bound->second), now);
}

Json IdentityContract::execute(scp::CallContext& ctx, std::string_view method, const Json& args) {
    if (method == "addUser") {
        scp::require(ctx.sender() == admin_, "UNAUTHORIZED: only the issuer may add users");
        std::string vc_id = arg_string(args, "vc_id");
        Eoa eoa = arg_address(args, "eoa");
        VcStatus status{eoa, arg_int(args, "issuance"), arg_int(args, "expiration"), false};
        scp::require(!vc_id.empty(), "INVALID: empty vc id");
        scp::require(status.issuance_date < status.expiration_date,
                     "INVALID_DATES: issuance must precede expiration");
        scp::require(!vc_of_.contains(eoa), "DUPLICATE_EOA: one VC per EOA");
        scp::require(!status_.contains(vc_id), "DUPLICATE_VC: vc id already registered");
        vc_of_.emplace(eoa, vc_id);
        status_.emplace(vc_id, status);
        ctx.emit("UserAdded", {{"vc_id", vc_id},
                               {"eoa", eoa.str()},
                               {"issuance", status.issuance_date},
                               {"expiration", status.expiration_date}});
        return nullptr;
    }
    if (method == "revoke") {
        scp::require(ctx.sender() == admin_, "UNAUTHORIZED: only the issuer may revoke");
        std::string vc_id = arg_string(args, "vc_id");
        auto it = status_.find(vc_id);
        scp::require(it != status_.end(), "UNKNOWN_VC: " + vc_id);
        if (!it->second.revoked) {
            it->second.revoked = true;
            ctx.emit("VcRevoked", {{"vc_id", vc_id}, {"eoa", it->second.user_eoa.str()}});
        }
        return nullptr;
    }
    return view(ctx.view_context(), method, args);
}

Json IdentityContract::view(const scp::ViewContext& ctx, std::string_view method,
                            const Json& args) const {
    if (method == "hasValidStatus") {
        return has_valid_status(arg_address(args, "eoa"), ctx.now());
    }
    if (method == "isRevoked") {
        // unknown id reads as revoked
        auto it = status_.find(arg_string(args, "vc_id"));
        return it == status_.end() || it->second.revoked;
    }
    if (method == "status") {
        auto it = status_.find(arg_string(args, "vc_id"));
        return it == status_.end() ? Json(nullptr) : it->second.to_json();
    }
    if (method == "vcOf") {
        auto it = vc_of_.find(arg_address(args, "eoa"));
        return it == vc_of_.end() ? Json(nullptr) : Json(it->second);
    }
    if (method == "admin") {
        return admin_.str();
    }
    scp::unknown_method(kCode, method);
}

Json IdentityContract::state_json() const {
    Json bindings = Json::object();
    for (const auto& [eoa, id] : vc_of_) bindings[eoa.str()] = id;
    Json statuses = Json::object();
    for (const auto& [id, s] : status_) statuses[id] = s.to_json();
    return Json{{"admin", admin_.str()}, {"vc_of", std::move(bindings)}, {"status", std::move(statuses)}};
}

}  // namespace medsim::contracts
