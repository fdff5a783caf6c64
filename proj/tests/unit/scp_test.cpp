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

#include <gtest/gtest.h>

#include <random>

#include "medsim/common/error.hpp"
#include "medsim/scp/chain.hpp"
#include "support/world.hpp"

namespace medsim::scp {
namespace {

using testing::wallet_for;

// Minimal contract exercising the platform surface: storage writes, value,
// nested calls and deploys, and reverts after partial writes.
class Probe final : public Contract {
public:
    static constexpr std::string_view kCode = "probe";

    std::string_view code_id() const override { return kCode; }
    std::unique_ptr<Contract> clone() const override { return std::make_unique<Probe>(*this); }
    bool payable(std::string_view method) const override { return method == "deposit"; }

    static std::unique_ptr<Contract> construct(CallContext& ctx, const Json& args) {
        require(!args.value("fail", false), "constructor refused");
        auto p = std::make_unique<Probe>();
        p->value_ = args.value("value", 0);
        ctx.emit("Created", {{"value", p->value_}});
        return p;
    }

    Json execute(CallContext& ctx, std::string_view method, const Json& args) override {
        if (method == "set") {
            value_ = args.at("value").get<int>();
            ctx.emit("Set", {{"value", value_}});
            require(!args.value("fail", false), "failed after write");
            return value_;
        }
        if (method == "deposit") return amount_to_string(ctx.value());
        if (method == "pay") {
            ctx.transfer_native(Address::parse(args.at("to").get<std::string>()),
                                parse_amount(args.at("amount").get<std::string>()));
            return nullptr;
        }
        if (method == "forward") {
            Address target = Address::parse(args.at("target").get<std::string>());
            value_ += 1;
            return ctx.call(target, args.at("method").get<std::string>(), args.at("args"));
        }
        if (method == "spawn") return ctx.deploy(kCode, args).str();
        if (method == "peekSelf") return ctx.view(ctx.self(), "get", Json::object());
        return view(ctx.view_context(), method, args);
    }

    Json view(const ViewContext&, std::string_view method, const Json&) const override {
        if (method == "get") return value_;
        unknown_method(kCode, method);
    }

    Json state_json() const override { return Json{{"value", value_}}; }

private:
    int value_ = 0;
};

class ScpTest : public ::testing::Test {
protected:
    ScpTest()
        : clock_(1000),
          a_(wallet_for("a")),
          b_(wallet_for("b")),
          chain_(clock_, {{a_.eoa(), 10}, {b_.eoa(), 0}}) {
        chain_.register_code(std::string(Probe::kCode), {&Probe::construct, DeployPolicy::anyone});
        chain_.seal_genesis();
    }

    Transaction tx(const crypto::WalletKeyPair& k, std::optional<Address> to, std::string method,
                   Json args = Json::object(), Amount value = 0) {
        Transaction t;
        t.from = k.eoa();
        t.to = to;
        t.method = std::move(method);
        t.args = std::move(args);
        t.value = value;
        t.nonce = chain_.nonce(t.from);
        t.sign(k);
        return t;
    }

    Receipt send(const crypto::WalletKeyPair& k, std::optional<Address> to, std::string method,
                 Json args = Json::object(), Amount value = 0) {
        return chain_.submit(tx(k, to, std::move(method), std::move(args), value));
    }

    Address deploy(int value = 0) {
        Receipt r = send(a_, std::nullopt, "probe", {{"value", value}});
        EXPECT_TRUE(r.ok()) << r.error;
        return *r.contract_address;
    }

    ManualClock clock_;
    crypto::WalletKeyPair a_;
    crypto::WalletKeyPair b_;
    Chain chain_;
};

TEST_F(ScpTest, NativeTransferConserves) {
    Receipt r = send(a_, b_.eoa(), "", Json::object(), 5);
    ASSERT_TRUE(r.ok()) << r.error;
    EXPECT_EQ(chain_.balance(a_.eoa()), 5);
    EXPECT_EQ(chain_.balance(b_.eoa()), 5);
    EXPECT_EQ(chain_.total_native_supply(), 10);
    EXPECT_EQ(chain_.height(), 1u);
    EXPECT_EQ(r.height, 1u);
}

TEST_F(ScpTest, OverdraftReverts) {
    Hash32 before = chain_.state_hash();
    Receipt r = send(a_, b_.eoa(), "", Json::object(), 11);
    EXPECT_FALSE(r.ok());
    EXPECT_EQ(chain_.state_hash(), before);
    EXPECT_EQ(chain_.height(), 0u);
}

TEST_F(ScpTest, RevertAfterPartialWriteLeavesStateUntouched) {
    Address p = deploy(1);
    Hash32 before = chain_.state_hash();
    auto events_before = chain_.events().size();
    Receipt r = send(a_, p, "set", {{"value", 42}, {"fail", true}});
    EXPECT_FALSE(r.ok());
    EXPECT_EQ(r.error, "failed after write");
    EXPECT_TRUE(r.events.empty());
    EXPECT_EQ(chain_.state_hash(), before);
    EXPECT_EQ(chain_.events().size(), events_before);
    EXPECT_EQ(chain_.call_static(p, "get", Json::object()), 1);
}

TEST_F(ScpTest, NestedRevertUnwindsOuterWrites) {
    Address outer = deploy(0);
    Address inner = deploy(0);
    Hash32 before = chain_.state_hash();
    Receipt r = send(a_, outer, "forward",
                     {{"target", inner.str()}, {"method", "set"}, {"args", {{"value", 3}, {"fail", true}}}});
    EXPECT_FALSE(r.ok());
    EXPECT_EQ(chain_.state_hash(), before);

    r = send(a_, outer, "forward",
             {{"target", inner.str()}, {"method", "set"}, {"args", {{"value", 3}}}});
    ASSERT_TRUE(r.ok()) << r.error;
    EXPECT_EQ(chain_.call_static(outer, "get", Json::object()), 1);
    EXPECT_EQ(chain_.call_static(inner, "get", Json::object()), 3);
}

TEST_F(ScpTest, ForeignSignatureRejectedBeforeExecution) {
    Transaction t = tx(b_, b_.eoa(), "", Json::object(), 5);
    t.from = a_.eoa();
    try {
        chain_.submit(t);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::bad_signature);
    }
    EXPECT_EQ(chain_.height(), 0u);
    EXPECT_EQ(chain_.balance(a_.eoa()), 10);

    Transaction unsigned_tx = tx(a_, b_.eoa(), "", Json::object(), 1);
    unsigned_tx.signature.reset();
    EXPECT_THROW(chain_.submit(unsigned_tx), Error);
}

TEST_F(ScpTest, TamperedFieldBreaksSignature) {
    Transaction t = tx(a_, b_.eoa(), "", Json::object(), 1);
    t.value = 9;
    EXPECT_THROW(chain_.submit(t), Error);
}

TEST_F(ScpTest, NonceReplayRejected) {
    Transaction t = tx(a_, b_.eoa(), "", Json::object(), 1);
    ASSERT_TRUE(chain_.submit(t).ok());
    try {
        chain_.submit(t);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::replay);
    }
    EXPECT_EQ(chain_.balance(b_.eoa()), 1);
}

TEST_F(ScpTest, RevertedTxKeepsNonce) {
    EXPECT_FALSE(send(a_, b_.eoa(), "", Json::object(), 100).ok());
    EXPECT_EQ(chain_.nonce(a_.eoa()), 0u);
    EXPECT_TRUE(send(a_, b_.eoa(), "", Json::object(), 1).ok());
    EXPECT_EQ(chain_.nonce(a_.eoa()), 1u);
}

TEST_F(ScpTest, StaticCallIsPure) {
    Address p = deploy(5);
    Hash32 before = chain_.state_hash();
    auto h = chain_.height();
    for (int i = 0; i < 3; ++i) {
        EXPECT_EQ(chain_.call_static(p, "get", Json::object()), 5);
    }
    EXPECT_EQ(chain_.state_hash(), before);
    EXPECT_EQ(chain_.height(), h);
}

TEST_F(ScpTest, StaticCallErrors) {
    Address p = deploy();
    try {
        chain_.call_static(Address::parse("0x00000000000000000000000000000000000000aa"), "get",
                           Json::object());
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::not_found);
    }
    try {
        chain_.call_static(p, "nope", Json::object());
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::not_found);
    }
}

TEST_F(ScpTest, GenesisBalanceQuery) {
    EXPECT_EQ(chain_.balance(a_.eoa()), 10);
    EXPECT_EQ(chain_.balance(b_.eoa()), 0);
}

TEST_F(ScpTest, DeploysGetDistinctAddressesAndAreCallable) {
    Address p1 = deploy(1);
    Address p2 = deploy(2);
    EXPECT_NE(p1, p2);
    EXPECT_EQ(chain_.code_of(p1), "probe");
    Receipt r = send(b_, p2, "set", {{"value", 7}});
    ASSERT_TRUE(r.ok());
    EXPECT_EQ(r.result, 7);
    ASSERT_EQ(r.events.size(), 1u);
    EXPECT_EQ(r.events[0].emitter, p2);
    EXPECT_EQ(r.events[0].name, "Set");
}

TEST_F(ScpTest, FailedConstructorLeavesNoContract) {
    Hash32 before = chain_.state_hash();
    Receipt r = send(a_, std::nullopt, "probe", {{"fail", true}});
    EXPECT_FALSE(r.ok());
    EXPECT_FALSE(r.contract_address);
    EXPECT_EQ(chain_.state_hash(), before);
    // The next successful deploy takes the address the failed one would have.
    EXPECT_EQ(deploy(), contract_address(a_.eoa(), 0));
}

TEST_F(ScpTest, ContractDeploysContract) {
    Address p = deploy();
    Receipt r = send(a_, p, "spawn", {{"value", 9}});
    ASSERT_TRUE(r.ok()) << r.error;
    Address child = Address::parse(r.result.get<std::string>());
    EXPECT_EQ(chain_.call_static(child, "get", Json::object()), 9);
}

TEST_F(ScpTest, DeployPolicies) {
    chain_.register_code("genesis_probe", {&Probe::construct, DeployPolicy::genesis_only});
    chain_.register_code("child_probe", {&Probe::construct, DeployPolicy::contracts_only});
    EXPECT_FALSE(send(a_, std::nullopt, "genesis_probe").ok());
    EXPECT_FALSE(send(a_, std::nullopt, "child_probe").ok());
    EXPECT_FALSE(send(a_, std::nullopt, "no_such_code").ok());
    Address p = deploy();
    // Probe spawns its own code; contracts_only is about the deployer kind.
    EXPECT_TRUE(send(a_, p, "spawn").ok());
}

TEST_F(ScpTest, GenesisIsSealed) {
    EXPECT_THROW(chain_.genesis_deploy("probe", Json::object()), Error);
}

TEST_F(ScpTest, ValueOnlyToPayableMethods) {
    Address p = deploy();
    EXPECT_FALSE(send(a_, p, "set", {{"value", 1}}, 1).ok());
    Receipt r = send(a_, p, "deposit", Json::object(), 4);
    ASSERT_TRUE(r.ok()) << r.error;
    EXPECT_EQ(chain_.balance(p), 4);
    ASSERT_TRUE(send(a_, p, "pay", {{"to", b_.eoa().str()}, {"amount", "3"}}).ok());
    EXPECT_EQ(chain_.balance(b_.eoa()), 3);
    EXPECT_FALSE(send(a_, p, "pay", {{"to", b_.eoa().str()}, {"amount", "2"}}).ok());
    EXPECT_EQ(chain_.total_native_supply(), 10);
}

TEST_F(ScpTest, ReentrancyReverts) {
    Address p = deploy();
    Receipt r = send(a_, p, "forward", {{"target", p.str()}, {"method", "set"}, {"args", {{"value", 1}}}});
    EXPECT_FALSE(r.ok());
    EXPECT_FALSE(send(a_, p, "peekSelf").ok());
}

TEST_F(ScpTest, InjectedRevert) {
    chain_.inject_revert_next("forced");
    Hash32 before = chain_.state_hash();
    Receipt r = send(a_, b_.eoa(), "", Json::object(), 1);
    EXPECT_FALSE(r.ok());
    EXPECT_EQ(r.error, "forced");
    EXPECT_EQ(chain_.state_hash(), before);
    EXPECT_TRUE(send(a_, b_.eoa(), "", Json::object(), 1).ok());
}

TEST_F(ScpTest, TransactionJsonRoundTrip) {
    Transaction t = tx(a_, b_.eoa(), "", Json::object(), 3);
    Transaction back = Transaction::from_json(parse_json(canonical(t.to_json())));
    EXPECT_EQ(back.signing_payload(), t.signing_payload());
    EXPECT_EQ(back.hash_hex(), t.hash_hex());
    EXPECT_TRUE(chain_.submit(back).ok());
}

TEST_F(ScpTest, EventsFromHeight) {
    Address p = deploy();
    send(a_, p, "set", {{"value", 1}});
    send(a_, p, "set", {{"value", 2}});
    auto all = chain_.events();
    auto tail = chain_.events(3);
    ASSERT_EQ(tail.size(), 1u);
    EXPECT_EQ(tail[0].payload.at("value"), 2);
    for (std::size_t i = 1; i < all.size(); ++i) EXPECT_LE(all[i - 1].height, all[i].height);
}

// Random transfer/deploy/call sequences: supply is constant, height moves
// only on success, reverted transactions leave the state hash unchanged and
// the same sequence replays to the same snapshot.
TEST(ScpProperty, ConservationAtomicityDeterminism) {
    auto run = [](std::uint64_t seed) {
        ManualClock clock(0);
        std::vector<crypto::WalletKeyPair> keys;
        std::map<Address, Amount> alloc;
        for (int i = 0; i < 5; ++i) {
            keys.push_back(wallet_for("p" + std::to_string(i)));
            alloc[keys.back().eoa()] = 1000;
        }
        Chain chain(clock, alloc);
        chain.register_code("probe", {&Probe::construct, DeployPolicy::anyone});
        chain.seal_genesis();
        const Amount supply = chain.total_native_supply();
        std::vector<Address> contracts;
        std::mt19937_64 rng(seed);
        for (int step = 0; step < 300; ++step) {
            const auto& k = keys[rng() % keys.size()];
            Transaction t;
            t.from = k.eoa();
            int kind = static_cast<int>(rng() % 4);
            if (kind == 0 || contracts.empty()) {
                t.to = keys[rng() % keys.size()].eoa();
                t.value = rng() % 400;
            } else if (kind == 1) {
                t.method = "probe";
                t.args = {{"fail", rng() % 4 == 0}};
            } else if (kind == 2) {
                t.to = contracts[rng() % contracts.size()];
                t.method = "deposit";
                t.value = rng() % 50;
            } else {
                t.to = contracts[rng() % contracts.size()];
                t.method = "pay";
                t.args = {{"to", keys[rng() % keys.size()].eoa().str()},
                          {"amount", std::to_string(rng() % 60)}};
            }
            t.nonce = chain.nonce(t.from);
            t.sign(k);
            Hash32 before = chain.state_hash();
            auto h = chain.height();
            Receipt r = chain.submit(t);
            EXPECT_EQ(chain.total_native_supply(), supply);
            if (r.ok()) {
                EXPECT_EQ(chain.height(), h + 1);
                if (r.contract_address) contracts.push_back(*r.contract_address);
            } else {
                EXPECT_EQ(chain.height(), h);
                EXPECT_EQ(chain.state_hash(), before);
            }
        }
        return canonical(chain.snapshot());
    };
    EXPECT_EQ(run(11), run(11));
    EXPECT_NE(run(11), run(12));
}

}  // namespace
}  // namespace medsim::scp
