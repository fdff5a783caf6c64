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
#include <optional>
#include <string>

#include "medsim/common/clock.hpp"
#include "medsim/common/entropy.hpp"
#include "medsim/connector/connector.hpp"
#include "medsim/contracts/protocol.hpp"
#include "medsim/dds/store.hpp"
#include "medsim/issuer/issuer.hpp"
#include "medsim/scp/chain.hpp"
#include "medsim/vdr/registry.hpp"

namespace medsim::node {

struct EcosystemOptions {
    /// Seeded runs draw all randomness from a reproducible
    /// stream and use a logical clock starting at `start_time`.
    std::optional<Hash32> seed;
    std::int64_t start_time = 1'700'000'000;
    std::map<Address, Amount> allocations;
    Eoa router_admin;
    issuer::IssuerConfig issuer;
    std::int64_t grant_ttl = connector::kDefaultGrantTtl;
};

/// Every service of the ecosystem in one process: VDR, DDS, the chain with
/// the protocol contracts, the issuer and any number of connectors.
class Ecosystem {
public:
    explicit Ecosystem(EcosystemOptions options);
    ~Ecosystem();

    const Clock& clock() const { return *clock_; }
    /// Null unless the ecosystem runs on a logical clock.
    ManualClock* logical_clock() { return manual_; }
    Entropy& entropy() { return *entropy_; }

    vdr::Registry& registry() { return registry_; }
    dds::Store& dds() { return dds_; }
    scp::Chain& chain() { return *deployment_.chain; }
    const contracts::ProtocolAddresses& addresses() const { return deployment_.addresses; }
    issuer::Issuer& issuer() { return *issuer_; }

    /// Errors: duplicate (URL already served).
    connector::Connector& add_connector(const std::string& base_url);
    connector::Connector* connector(std::string_view base_url);
    std::vector<std::string> connector_urls() const;

private:
    std::unique_ptr<Clock> owned_clock_;
    const Clock* clock_ = nullptr;
    ManualClock* manual_ = nullptr;
    std::unique_ptr<Entropy> entropy_;
    vdr::Registry registry_;
    dds::Store dds_;
    contracts::Deployment deployment_;
    std::unique_ptr<issuer::Issuer> issuer_;
    std::int64_t grant_ttl_;
    std::map<std::string, std::unique_ptr<connector::Connector>, std::less<>> connectors_;
};

/// Splits ".../connector/services/<id>/payload" into the connector base URL
/// and the service id. Throws Errc::malformed.
std::pair<std::string, std::string> split_service_url(std::string_view service_url);

}  // namespace medsim::node
