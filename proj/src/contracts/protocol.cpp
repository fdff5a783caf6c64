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

#include "medsim/contracts/protocol.hpp"

#include "medsim/common/error.hpp"
#include "medsim/contracts/access_token.hpp"
#include "medsim/contracts/exchange.hpp"
#include "medsim/contracts/factory.hpp"
#include "medsim/contracts/identity.hpp"
#include "medsim/contracts/router.hpp"
#include "medsim/contracts/service.hpp"

namespace medsim::contracts {

Json Genesis::to_json() const {
    Json alloc = Json::object();
    for (const auto& [a, v] : allocations) alloc[a.str()] = amount_to_string(v);
    return Json{{"allocations", std::move(alloc)},
                {"issuer_admin", issuer_admin.str()},
                {"router_admin", router_admin.str()}};
}

Genesis Genesis::from_json(const Json& j) {
    Genesis g;
    const Json& alloc = require_field(j, "allocations");
    if (!alloc.is_object()) throw Error(Errc::malformed, "allocations must be an object");
    for (const auto& [k, v] : alloc.items()) {
        if (!v.is_string()) throw Error(Errc::malformed, "allocation amounts are decimal strings");
        g.allocations[Address::parse(k)] = parse_amount(v.get<std::string>());
    }
    g.issuer_admin = Address::parse(require_string(j, "issuer_admin"));
    g.router_admin = Address::parse(require_string(j, "router_admin"));
    return g;
}

Json ProtocolAddresses::to_json() const {
    return Json{{"identity", identity.str()},
                {"router", router.str()},
                {"exchange", exchange.str()},
                {"factory", factory.str()}};
}

ProtocolAddresses ProtocolAddresses::from_json(const Json& j) {
    return {Address::parse(require_string(j, "identity")), Address::parse(require_string(j, "router")),
            Address::parse(require_string(j, "exchange")), Address::parse(require_string(j, "factory"))};
}

void register_protocol_codes(scp::Chain& chain) {
    using scp::DeployPolicy;
    chain.register_code(std::string(IdentityContract::kCode),
                        {&IdentityContract::construct, DeployPolicy::genesis_only});
    chain.register_code(std::string(RouterContract::kCode),
                        {&RouterContract::construct, DeployPolicy::genesis_only});
    chain.register_code(std::string(FixedRateExchangeContract::kCode),
                        {&FixedRateExchangeContract::construct, DeployPolicy::genesis_only});
    chain.register_code(std::string(FactoryContract::kCode),
                        {&FactoryContract::construct, DeployPolicy::genesis_only});
    chain.register_code(std::string(ServiceContract::kCode),
                        {&ServiceContract::construct, DeployPolicy::contracts_only});
    chain.register_code(std::string(AccessTokenContract::kCode),
                        {&AccessTokenContract::construct, DeployPolicy::contracts_only});
}

ProtocolAddresses install_protocol(scp::Chain& chain, const Genesis& genesis) {
    register_protocol_codes(chain);
    ProtocolAddresses a;
    a.identity = chain.genesis_deploy(IdentityContract::kCode, {{"admin", genesis.issuer_admin.str()}});
    a.exchange = chain.genesis_deploy(FixedRateExchangeContract::kCode, {{"identity", a.identity.str()}});
    a.router = chain.genesis_deploy(RouterContract::kCode,
                                    {{"admin", genesis.router_admin.str()},
                                     {"exchanges", Json::array({a.exchange.str()})}});
    a.factory = chain.genesis_deploy(FactoryContract::kCode,
                                     {{"identity", a.identity.str()}, {"exchange", a.exchange.str()}});
    chain.genesis_call(a.exchange, "setFactory", {{"factory", a.factory.str()}});
    chain.seal_genesis();
    return a;
}

Deployment boot_chain(const Genesis& genesis, const Clock& clock) {
    Deployment d;
    d.chain = std::make_unique<scp::Chain>(clock, genesis.allocations);
    d.addresses = install_protocol(*d.chain, genesis);
    return d;
}

}  // namespace medsim::contracts
