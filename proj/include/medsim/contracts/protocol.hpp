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
#include <memory>

#include "medsim/common/clock.hpp"
#include "medsim/scp/chain.hpp"

namespace medsim::contracts {

/// Genesis configuration: balances for named actors plus the two admin
/// accounts. The issuer admin controls the Identity contract; the router
/// admin curates the exchange registry.
struct Genesis {
    std::map<Address, Amount> allocations;
    Eoa issuer_admin;
    Eoa router_admin;

    Json to_json() const;
    static Genesis from_json(const Json& j);
};

struct ProtocolAddresses {
    Address identity;
    Address router;
    Address exchange;
    Address factory;

    Json to_json() const;
    static ProtocolAddresses from_json(const Json& j);
};

void register_protocol_codes(scp::Chain& chain);

/// Registers the codes, deploys Identity, Router, Fixed-Rate Exchange and
/// Factory, wires them together and seals genesis.
ProtocolAddresses install_protocol(scp::Chain& chain, const Genesis& genesis);

struct Deployment {
    std::unique_ptr<scp::Chain> chain;
    ProtocolAddresses addresses;
};

Deployment boot_chain(const Genesis& genesis, const Clock& clock);

}  // namespace medsim::contracts
