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

#include "medsim/scp/chain.hpp"

#include <algorithm>
#include <mutex>

#include "executor.hpp"
#include "medsim/common/error.hpp"
#include "medsim/crypto/hash.hpp"
#include "medsim/crypto/wallet_key.hpp"

namespace medsim::scp {

Address contract_address(const Address& deployer, std::uint64_t counter) {
    Bytes seed = to_bytes("medsim-contract");
    seed.insert(seed.end(), deployer.raw().begin(), deployer.raw().end());
    for (int i = 7; i >= 0; --i) {
        seed.push_back(static_cast<std::uint8_t>(counter >> (8 * i)));
    }
    return Address::from_digest(crypto::keccak256(seed));
}

Json LedgerState::to_json() const {
    Json bal = Json::object();
    for (const auto& [addr, amount] : balances) {
        if (amount != 0) bal[addr.str()] = amount_to_string(amount);
    }
    Json non = Json::object();
    for (const auto& [addr, n] : nonces) non[addr.str()] = n;
    Json con = Json::object();
    for (const auto& [addr, c] : contracts) {
        con[addr.str()] = {{"code", c->code_id()}, {"state", c->state_json()}};
    }
    return Json{{"balances", std::move(bal)},
                {"nonces", std::move(non)},
                {"contracts", std::move(con)},
                {"deploy_counter", deploy_counter}};
}

// ---------------------------------------------------------------- Executor

bool Executor::on_stack(const Address& address) const {
    return std::find(stack_.begin(), stack_.end(), address) != stack_.end();
}

void Executor::transfer(const Address& from, const Address& to, Amount amount) {
    if (amount == 0) return;
    Amount& src = working.balances[from];
    require(src >= amount, "insufficient native balance");
    src -= amount;
    working.balances[to] = checked_add(working.balances[to], amount);
}

void Executor::emit(const Address& emitter, std::string name, Json payload) {
    pending.push_back({emitter, std::move(name), std::move(payload), height_});
}

Json Executor::call(const Address& sender, const Address& target, std::string_view method,
                    const Json& args, Amount value) {
    auto it = working.contracts.find(target);
    require(it != working.contracts.end(), "no contract at " + target.str());
    require(!on_stack(target), "reentrant call into " + target.str());
    require(value == 0 || it->second->payable(method),
            "method '" + std::string(method) + "' is not payable");
    transfer(sender, target, value);

    std::shared_ptr<Contract> instance = it->second->clone();
    stack_.push_back(target);
    CallContext ctx(*this, target, sender, value);
    Json result = instance->execute(ctx, method, args);
    stack_.pop_back();
    working.contracts[target] = std::move(instance);
    return result;
}

Json Executor::view(const Address& caller, const Address& target, std::string_view method,
                    const Json& args) const {
    ViewContext ctx(working, caller, caller, now_, this);
    return ctx.view(target, method, args);
}

Address Executor::deploy(const Address& deployer, std::string_view code_id, const Json& ctor_args,
                         DeployOrigin origin) {
    auto it = chain_.codes_.find(code_id);
    require(it != chain_.codes_.end(), "unknown code id '" + std::string(code_id) + "'");
    const CodeEntry& entry = it->second;
    switch (entry.policy) {
    case DeployPolicy::genesis_only:
        require(origin == DeployOrigin::genesis, "code '" + it->first + "' is installed at genesis only");
        break;
    case DeployPolicy::contracts_only:
        require(origin != DeployOrigin::transaction,
                "code '" + it->first + "' can only be deployed by a contract");
        break;
    case DeployPolicy::anyone:
        break;
    }
    Address address = contract_address(deployer, working.deploy_counter++);
    require(!working.contracts.contains(address), "address collision");
    stack_.push_back(address);
    CallContext ctx(*this, address, deployer, 0);
    std::shared_ptr<Contract> instance = entry.make(ctx, ctor_args);
    stack_.pop_back();
    working.contracts[address] = std::move(instance);
    return address;
}

// ------------------------------------------------------------------- Chain

Chain::Chain(const Clock& clock, std::map<Address, Amount> allocations) : clock_(clock) {
    for (auto& [addr, amount] : allocations) {
        if (amount != 0) state_.balances[addr] = amount;
    }
}

Chain::~Chain() = default;

void Chain::register_code(std::string code_id, CodeEntry entry) {
    std::unique_lock lock(mu_);
    codes_[std::move(code_id)] = std::move(entry);
}

Address Chain::genesis_deploy(std::string_view code_id, const Json& ctor_args) {
    std::unique_lock lock(mu_);
    if (sealed_) throw Error(Errc::unauthorized, "genesis is sealed");
    Executor exec(*this, state_, Address{}, clock_.now(), 0);
    try {
        Address addr = exec.deploy(Address{}, code_id, ctor_args, DeployOrigin::genesis);
        state_ = std::move(exec.working);
        commit_events(exec.pending, 0);
        return addr;
    } catch (const Revert& e) {
        throw Error(Errc::reverted, std::string("genesis deploy reverted: ") + e.what());
    }
}

Json Chain::genesis_call(const Address& target, std::string_view method, const Json& args) {
    std::unique_lock lock(mu_);
    if (sealed_) throw Error(Errc::unauthorized, "genesis is sealed");
    Executor exec(*this, state_, Address{}, clock_.now(), 0);
    try {
        Json result = exec.call(Address{}, target, method, args, 0);
        state_ = std::move(exec.working);
        commit_events(exec.pending, 0);
        return result;
    } catch (const Revert& e) {
        throw Error(Errc::reverted, std::string("genesis call reverted: ") + e.what());
    }
}

void Chain::seal_genesis() {
    std::unique_lock lock(mu_);
    sealed_ = true;
}

void Chain::commit_events(std::vector<Event>& pending, std::uint64_t height) {
    for (auto& e : pending) {
        e.height = height;
        std::string encoded = canonical(e.to_json());
        Bytes chained(events_digest_.begin(), events_digest_.end());
        chained.insert(chained.end(), encoded.begin(), encoded.end());
        events_digest_ = crypto::sha256(chained);
        events_.push_back(e);
    }
}

Receipt Chain::submit(const Transaction& tx) {
    if (!tx.signature) {
        throw Error(Errc::bad_signature, "transaction is unsigned");
    }
    bool signed_by_sender = false;
    try {
        signed_by_sender = crypto::verify_wallet(tx.from, as_bytes(tx.signing_payload()), *tx.signature);
    } catch (const Error&) {
        signed_by_sender = false;
    }
    if (!signed_by_sender) {
        throw Error(Errc::bad_signature, "transaction signature does not recover to 'from'");
    }

    std::unique_lock lock(mu_);
    auto expected_nonce = state_.nonces.contains(tx.from) ? state_.nonces.at(tx.from) : 0;
    if (tx.nonce != expected_nonce) {
        throw Error(Errc::replay, "bad nonce: expected " + std::to_string(expected_nonce) +
                                      ", got " + std::to_string(tx.nonce));
    }
    auto injected = std::exchange(injected_revert_, std::nullopt);

    Receipt receipt;
    receipt.tx_hash = tx.hash_hex();
    Executor exec(*this, state_, tx.from, clock_.now(), height_ + 1);
    try {
        if (!tx.to) {
            require(tx.value == 0, "deployment cannot carry value");
            receipt.contract_address =
                exec.deploy(tx.from, tx.method, tx.args, DeployOrigin::transaction);
        } else if (exec.working.contracts.contains(*tx.to)) {
            require(!tx.method.empty(), "contract call needs a method");
            receipt.result = exec.call(tx.from, *tx.to, tx.method, tx.args, tx.value);
        } else {
            require(tx.method.empty(), "no contract at " + tx.to->str());
            exec.transfer(tx.from, *tx.to, tx.value);
        }
        if (injected) {
            throw Revert(*injected);
        }
    } catch (const Revert& e) {
        receipt.status = TxStatus::reverted;
        receipt.error = e.what();
    } catch (const Error& e) {
        receipt.status = TxStatus::reverted;
        receipt.error = e.what();
    } catch (const Json::exception& e) {
        receipt.status = TxStatus::reverted;
        receipt.error = std::string("bad arguments: ") + e.what();
    }
    if (!receipt.ok()) {
        receipt.result = nullptr;
        receipt.contract_address.reset();
        return receipt;
    }

    exec.working.nonces[tx.from] = expected_nonce + 1;
    state_ = std::move(exec.working);
    ++height_;
    commit_events(exec.pending, height_);
    receipt.events = exec.pending;
    receipt.height = height_;
    return receipt;
}

Json Chain::call_static(const Address& contract, std::string_view method, const Json& args,
                        std::optional<Address> caller) const {
    std::shared_lock lock(mu_);
    auto it = state_.contracts.find(contract);
    if (it == state_.contracts.end()) {
        throw Error(Errc::not_found, "no contract at " + contract.str());
    }
    ViewContext ctx(state_, contract, caller, clock_.now());
    try {
        return it->second->view(ctx, method, args);
    } catch (const Revert& e) {
        throw Error(Errc::reverted, e.what());
    } catch (const Json::exception& e) {
        throw Error(Errc::malformed, std::string("bad arguments: ") + e.what());
    }
}

Amount Chain::balance(const Address& account) const {
    std::shared_lock lock(mu_);
    auto it = state_.balances.find(account);
    return it == state_.balances.end() ? 0 : it->second;
}

std::uint64_t Chain::nonce(const Address& account) const {
    std::shared_lock lock(mu_);
    auto it = state_.nonces.find(account);
    return it == state_.nonces.end() ? 0 : it->second;
}

std::uint64_t Chain::height() const {
    std::shared_lock lock(mu_);
    return height_;
}

bool Chain::has_contract(const Address& address) const {
    std::shared_lock lock(mu_);
    return state_.contracts.contains(address);
}

std::optional<std::string> Chain::code_of(const Address& address) const {
    std::shared_lock lock(mu_);
    auto it = state_.contracts.find(address);
    if (it == state_.contracts.end()) return std::nullopt;
    return std::string(it->second->code_id());
}

Amount Chain::total_native_supply() const {
    std::shared_lock lock(mu_);
    Amount total = 0;
    for (const auto& [_, amount] : state_.balances) total += amount;
    return total;
}

std::vector<Event> Chain::events(std::uint64_t from_height) const {
    std::shared_lock lock(mu_);
    std::vector<Event> out;
    for (const auto& e : events_) {
        if (e.height >= from_height) out.push_back(e);
    }
    return out;
}

Hash32 Chain::state_hash() const {
    std::shared_lock lock(mu_);
    std::string encoded = canonical(Json{{"ledger", state_.to_json()},
                                         {"height", height_},
                                         {"events", to_hex(events_digest_)}});
    return crypto::sha256(as_bytes(encoded));
}

Json Chain::snapshot() const {
    std::shared_lock lock(mu_);
    Json evs = Json::array();
    for (const auto& e : events_) evs.push_back(e.to_json());
    return Json{{"ledger", state_.to_json()}, {"height", height_}, {"events", std::move(evs)}};
}

void Chain::inject_revert_next(std::string reason) {
    std::unique_lock lock(mu_);
    if (reason.empty()) {
        injected_revert_.reset();
    } else {
        injected_revert_ = std::move(reason);
    }
}

}  // namespace medsim::scp
