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
#include <shared_mutex>
#include <string>
#include <vector>

#include "medsim/common/clock.hpp"
#include "medsim/scp/contract.hpp"
#include "medsim/scp/types.hpp"

namespace medsim::scp {

struct LedgerState {
    std::map<Address, Amount> balances;
    std::map<Address, std::uint64_t> nonces;
    std::map<Address, std::shared_ptr<const Contract>> contracts;
    std::uint64_t deploy_counter = 0;

    Json to_json() const;
};

struct CodeEntry {
    Constructor make;
    DeployPolicy policy = DeployPolicy::anyone;
};

/// Deterministic single-writer smart-contract platform.
///
/// Transactions execute strictly in submission order. Each runs against a
/// private copy of the ledger that replaces the committed state only on
/// success. A revert leaves the committed state untouched.
class Chain {
public:
    Chain(const Clock& clock, std::map<Address, Amount> allocations);
    ~Chain();
    Chain(const Chain&) = delete;
    Chain& operator=(const Chain&) = delete;

    void register_code(std::string code_id, CodeEntry entry);

    /// Privileged setup before seal_genesis(); the sender is the zero
    /// address, which no key controls.
    Address genesis_deploy(std::string_view code_id, const Json& ctor_args);
    Json genesis_call(const Address& target, std::string_view method, const Json& args);
    void seal_genesis();

    /// Errors (thrown, nothing executed): bad_signature, replay (nonce),
    /// malformed. Contract failures come back as a reverted receipt.
    Receipt submit(const Transaction& tx);

    /// Read-only query against committed state. Errors: not_found.
    Json call_static(const Address& contract, std::string_view method, const Json& args,
                     std::optional<Address> caller = std::nullopt) const;

    Amount balance(const Address& account) const;
    std::uint64_t nonce(const Address& account) const;
    std::uint64_t height() const;
    std::int64_t now() const { return clock_.now(); }
    bool has_contract(const Address& address) const;
    std::optional<std::string> code_of(const Address& address) const;
    Amount total_native_supply() const;

    std::vector<Event> events(std::uint64_t from_height = 0) const;

    /// Digest of the whole committed state including the event log.
    Hash32 state_hash() const;
    /// Full state including events; byte-identical across identical replays.
    Json snapshot() const;

    /// Test hook: the next submitted transaction executes fully and then
    /// reverts with `reason`. An empty reason clears a pending injection.
    void inject_revert_next(std::string reason);

private:
    friend class Executor;

    const Clock& clock_;
    mutable std::shared_mutex mu_;
    LedgerState state_;
    std::vector<Event> events_;
    Hash32 events_digest_{};
    std::uint64_t height_ = 0;
    bool sealed_ = false;
    std::map<std::string, CodeEntry, std::less<>> codes_;
    std::optional<std::string> injected_revert_;

    void commit_events(std::vector<Event>& pending, std::uint64_t height);
};

/// Address of the n-th contract deployed by `deployer`.
Address contract_address(const Address& deployer, std::uint64_t counter);

}  // namespace medsim::scp
