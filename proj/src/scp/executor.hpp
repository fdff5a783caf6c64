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

#include <vector>

#include "medsim/scp/chain.hpp"

namespace medsim::scp {

enum class DeployOrigin { genesis, transaction, contract };

/// Runs one transaction (or one genesis step) against a private copy of the
/// ledger. Nothing here touches Chain state; the caller commits `working`
/// and `pending` only on success.
class Executor {
public:
    Executor(const Chain& chain, LedgerState working, Address origin, std::int64_t now,
             std::uint64_t height)
        : working(std::move(working)), chain_(chain), origin_(origin), now_(now), height_(height) {}

    Json call(const Address& sender, const Address& target, std::string_view method,
              const Json& args, Amount value);
    Json view(const Address& caller, const Address& target, std::string_view method,
              const Json& args) const;
    Address deploy(const Address& deployer, std::string_view code_id, const Json& ctor_args,
                   DeployOrigin origin);
    void transfer(const Address& from, const Address& to, Amount amount);
    void emit(const Address& emitter, std::string name, Json payload);

    bool on_stack(const Address& address) const;
    const Address& origin() const { return origin_; }
    std::int64_t now() const { return now_; }
    std::uint64_t height() const { return height_; }

    LedgerState working;
    std::vector<Event> pending;

private:
    const Chain& chain_;
    Address origin_;
    std::int64_t now_;
    std::uint64_t height_;
    std::vector<Address> stack_;
};

}  // namespace medsim::scp
