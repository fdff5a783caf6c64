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

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "medsim/common/address.hpp"
#include "medsim/common/amount.hpp"
#include "medsim/common/json.hpp"

namespace medsim::scp {

class Executor;
struct LedgerState;

/// Read-only access to ledger state for views and static calls.
class ViewContext {
public:
    ViewContext(const LedgerState& ledger, const Address& self, std::optional<Address> caller,
                std::int64_t now, const Executor* exec = nullptr)
        : ledger_(ledger), self_(self), caller_(caller), now_(now), exec_(exec) {}

    const Address& self() const { return self_; }
    const std::optional<Address>& caller() const { return caller_; }
    std::int64_t now() const { return now_; }
    Amount native_balance(const Address& account) const;

    /// Read-only call into another contract.
    Json view(const Address& target, std::string_view method, const Json& args) const;

private:
    const LedgerState& ledger_;
    Address self_;
    std::optional<Address> caller_;
    std::int64_t now_;
    const Executor* exec_;
};

/// One execution frame of a state-changing call.
class CallContext {
public:
    CallContext(Executor& exec, const Address& self, const Address& sender, Amount value)
        : exec_(exec), self_(self), sender_(sender), value_(value) {}

    const Address& self() const { return self_; }
    /// Immediate caller: the transaction sender or the calling contract.
    const Address& sender() const { return sender_; }
    /// Native value attached to this frame; already credited to self().
    Amount value() const { return value_; }
    const Address& origin() const;
    std::int64_t now() const;
    std::uint64_t height() const;

    ViewContext view_context() const;
    Json view(const Address& target, std::string_view method, const Json& args) const;
    /// Nested state-changing call; the callee sees self() as its sender.
    Json call(const Address& target, std::string_view method, const Json& args, Amount value = 0);
    Address deploy(std::string_view code_id, const Json& ctor_args);
    void transfer_native(const Address& to, Amount amount);
    Amount native_balance(const Address& account) const;
    void emit(std::string name, Json payload);

private:
    Executor& exec_;
    Address self_;
    Address sender_;
    Amount value_;
};

/// Native contract hosted on the platform. Cloned before each mutation.
class Contract {
public:
    virtual ~Contract() = default;

    virtual std::string_view code_id() const = 0;
    virtual std::unique_ptr<Contract> clone() const = 0;

    /// State-changing entry point. Unknown methods fall through to view().
    virtual Json execute(CallContext& ctx, std::string_view method, const Json& args) = 0;

    /// Read-only entry point. Throws Errc::not_found for unknown methods.
    virtual Json view(const ViewContext& ctx, std::string_view method, const Json& args) const = 0;

    /// Full state for hashing and snapshots.
    virtual Json state_json() const = 0;

    /// Whether the method accepts attached native value.
    virtual bool payable(std::string_view /*method*/) const { return false; }
};

using Constructor = std::function<std::unique_ptr<Contract>(CallContext&, const Json&)>;

enum class DeployPolicy {
    genesis_only,    // installed by the platform before the first transaction
    contracts_only,  // deployed by other contracts (factory pattern)
    anyone,
};

[[noreturn]] void revert(const std::string& reason);
void require(bool condition, const std::string& reason);
[[noreturn]] void unknown_method(std::string_view code_id, std::string_view method);

}  // namespace medsim::scp
