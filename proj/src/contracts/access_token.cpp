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

#include "medsim/contracts/access_token.hpp"

#include "args.hpp"

namespace medsim::contracts {

using namespace detail;

std::unique_ptr<scp::Contract> AccessTokenContract::construct(scp::CallContext& ctx,
                                                              const Json& args) {
    auto token = std::make_unique<AccessTokenContract>();
    token->name_ = arg_string(args, "name");
    token->symbol_ = arg_string(args, "symbol");
    token->owner_ = ctx.sender();
    Address holder = arg_address(args, "initial_holder");
    Amount supply = arg_amount(args, "initial_supply");
    if (supply > 0) {
        token->balances_[holder] = supply;
        token->total_supply_ = supply;
        ctx.emit("Transfer", {{"from", Address{}.str()}, {"to", holder.str()}, {"amount", amount_json(supply)}});
    }
    if (args.contains("approved_spender")) {
        Address spender = arg_address(args, "approved_spender");
        token->allowances_[{holder, spender}] = supply;
        ctx.emit("Approval", {{"owner", holder.str()}, {"spender", spender.str()}, {"amount", amount_json(supply)}});
    }
    return token;
}

Amount AccessTokenContract::balance_of(const Address& a) const {
    auto it = balances_.find(a);
    return it == balances_.end() ? 0 : it->second;
}

void AccessTokenContract::move(scp::CallContext& ctx, const Address& from, const Address& to,
                               Amount amount) {
    scp::require(!to.is_zero(), "INVALID: transfer to the zero address");
    scp::require(balance_of(from) >= amount, "INSUFFICIENT_BALANCE");
    balances_[from] -= amount;
    balances_[to] = checked_add(balance_of(to), amount);
    ctx.emit("Transfer", {{"from", from.str()}, {"to", to.str()}, {"amount", amount_json(amount)}});
}

Json AccessTokenContract::execute(scp::CallContext& ctx, std::string_view method, const Json& args) {
    if (method == "transfer") {
        move(ctx, ctx.sender(), arg_address(args, "to"), arg_amount(args, "amount"));
        return true;
    }
    if (method == "approve") {
        Address spender = arg_address(args, "spender");
        Amount amount = arg_amount(args, "amount");
        allowances_[{ctx.sender(), spender}] = amount;
        ctx.emit("Approval", {{"owner", ctx.sender().str()}, {"spender", spender.str()}, {"amount", amount_json(amount)}});
        return true;
    }
    if (method == "transferFrom") {
        Address from = arg_address(args, "from");
        Amount amount = arg_amount(args, "amount");
        auto key = std::make_pair(from, ctx.sender());
        auto it = allowances_.find(key);
        scp::require(it != allowances_.end() && it->second >= amount, "INSUFFICIENT_ALLOWANCE");
        it->second -= amount;
        move(ctx, from, arg_address(args, "to"), amount);
        return true;
    }
    if (method == "mint") {
        scp::require(ctx.sender() == owner_, "UNAUTHORIZED: only the owner may mint");
        Amount amount = arg_amount(args, "amount");
        total_supply_ = checked_add(total_supply_, amount);
        balances_[owner_] = checked_add(balance_of(owner_), amount);
        ctx.emit("Transfer", {{"from", Address{}.str()}, {"to", owner_.str()}, {"amount", amount_json(amount)}});
        return nullptr;
    }
    if (method == "burn") {
        scp::require(ctx.sender() == owner_, "UNAUTHORIZED: only the owner may burn");
        Amount amount = arg_amount(args, "amount");
        scp::require(balance_of(owner_) >= amount, "INSUFFICIENT_BALANCE");
        balances_[owner_] -= amount;
        total_supply_ -= amount;
        ctx.emit("Transfer", {{"from", owner_.str()}, {"to", Address{}.str()}, {"amount", amount_json(amount)}});
        return nullptr;
    }
    if (method == "transferOwnership") {
        scp::require(ctx.sender() == owner_, "UNAUTHORIZED: only the owner may transfer ownership");
        Address next = arg_address(args, "new_owner");
        ctx.emit("OwnershipTransferred", {{"previous_owner", owner_.str()}, {"new_owner", next.str()}});
        owner_ = next;
        return nullptr;
    }
    return view(ctx.view_context(), method, args);
}

Json AccessTokenContract::view(const scp::ViewContext&, std::string_view method,
                               const Json& args) const {
    if (method == "balanceOf") return amount_json(balance_of(arg_address(args, "account")));
    if (method == "allowance") {
        auto it = allowances_.find({arg_address(args, "owner"), arg_address(args, "spender")});
        return amount_json(it == allowances_.end() ? 0 : it->second);
    }
    if (method == "totalSupply") return amount_json(total_supply_);
    if (method == "owner") return owner_.str();
    if (method == "name") return name_;
    if (method == "symbol") return symbol_;
    if (method == "decimals") return 18;
    scp::unknown_method(kCode, method);
}

Json AccessTokenContract::state_json() const {
    Json bal = Json::object();
    for (const auto& [a, v] : balances_) {
        if (v != 0) bal[a.str()] = amount_json(v);
    }
    Json allow = Json::object();
    for (const auto& [k, v] : allowances_) {
        if (v != 0) allow[k.first.str() + ":" + k.second.str()] = amount_json(v);
    }
    return Json{{"name", name_},        {"symbol", symbol_},         {"owner", owner_.str()},
                {"total_supply", amount_json(total_supply_)}, {"balances", std::move(bal)},
                {"allowances", std::move(allow)}};
}

}  // namespace medsim::contracts
