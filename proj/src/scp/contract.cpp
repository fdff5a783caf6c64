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

#include "medsim/scp/contract.hpp"

#include "executor.hpp"
#include "medsim/common/error.hpp"

namespace medsim::scp {

void revert(const std::string& reason) { throw Revert(reason); }

void require(bool condition, const std::string& reason) {
    if (!condition) throw Revert(reason);
}

void unknown_method(std::string_view code_id, std::string_view method) {
    throw Error(Errc::not_found,
                "contract '" + std::string(code_id) + "' has no method '" + std::string(method) + "'");
}

Amount ViewContext::native_balance(const Address& account) const {
    auto it = ledger_.balances.find(account);
    return it == ledger_.balances.end() ? 0 : it->second;
}

Json ViewContext::view(const Address& target, std::string_view method, const Json& args) const {
    if (exec_ && exec_->on_stack(target)) {
        revert("reentrant view into " + target.str());
    }
    auto it = ledger_.contracts.find(target);
    if (it == ledger_.contracts.end()) {
        throw Error(Errc::not_found, "no contract at " + target.str());
    }
    ViewContext nested(ledger_, target, self_, now_, exec_);
    return it->second->view(nested, method, args);
}

const Address& CallContext::origin() const { return exec_.origin(); }
std::int64_t CallContext::now() const { return exec_.now(); }
std::uint64_t CallContext::height() const { return exec_.height(); }

ViewContext CallContext::view_context() const {
    return ViewContext(exec_.working, self_, sender_, exec_.now(), &exec_);
}

Json CallContext::view(const Address& target, std::string_view method, const Json& args) const {
    return exec_.view(self_, target, method, args);
}

Json CallContext::call(const Address& target, std::string_view method, const Json& args,
                       Amount value) {
    return exec_.call(self_, target, method, args, value);
}

Address CallContext::deploy(std::string_view code_id, const Json& ctor_args) {
    return exec_.deploy(self_, code_id, ctor_args, DeployOrigin::contract);
}

void CallContext::transfer_native(const Address& to, Amount amount) {
    exec_.transfer(self_, to, amount);
}

Amount CallContext::native_balance(const Address& account) const {
    auto it = exec_.working.balances.find(account);
    return it == exec_.working.balances.end() ? 0 : it->second;
}

void CallContext::emit(std::string name, Json payload) {
    exec_.emit(self_, std::move(name), std::move(payload));
}

}  // namespace medsim::scp
