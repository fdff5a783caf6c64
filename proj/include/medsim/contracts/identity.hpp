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

#include "medsim/scp/contract.hpp"

namespace medsim::contracts {

/// On-chain credential status. issuance < expiration; revoked only ever
/// goes false -> true.
struct VcStatus {
    Eoa user_eoa;
    std::int64_t issuance_date = 0;
    std::int64_t expiration_date = 0;
    bool revoked = false;

    Json to_json() const;
    static VcStatus from_json(const Json& j);
};

/// Pure form of the gate: bound, not revoked, issuance <= now <= expiration.
bool status_is_valid(const VcStatus& status, std::int64_t now);

/// Issuer-controlled registry binding EOAs to credential ids, one VC per
/// EOA, with an embedded revocation list.
///
/// execute: addUser{vc_id, eoa, issuance, expiration}, revoke{vc_id}
/// view:    hasValidStatus{eoa}, isRevoked{vc_id}, status{vc_id},
///          vcOf{eoa}, admin{}
/// events:  UserAdded{vc_id, eoa, issuance, expiration}, VcRevoked{vc_id, eoa}
class IdentityContract final : public scp::Contract {
public:
    static constexpr std::string_view kCode = "identity";

    explicit IdentityContract(Address admin) : admin_(admin) {}

    std::string_view code_id() const override { return kCode; }
    std::unique_ptr<scp::Contract> clone() const override {
        return std::make_unique<IdentityContract>(*this);
    }
    Json execute(scp::CallContext& ctx, std::string_view method, const Json& args) override;
    Json view(const scp::ViewContext& ctx, std::string_view method, const Json& args) const override;
    Json state_json() const override;

    static std::unique_ptr<scp::Contract> construct(scp::CallContext& ctx, const Json& args);

private:
    bool has_valid_status(const Eoa& eoa, std::int64_t now) const;

    Address admin_;
    std::map<Eoa, std::string> vc_of_;
    std::map<std::string, VcStatus, std::less<>> status_;
};

}  // namespace medsim::contracts
