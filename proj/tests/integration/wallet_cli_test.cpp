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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "medsim/cli/wallet_cli.hpp"
#include "medsim/common/error.hpp"
#include "medsim/crypto/hash.hpp"
#include "medsim/net/server.hpp"
#include "medsim/wallet/keystore.hpp"

namespace medsim::cli {
namespace {

namespace fs = std::filesystem;

constexpr const char* kAliceSeed = "0101010101010101010101010101010101010101010101010101010101010101";
constexpr const char* kBobSeed = "0202020202020202020202020202020202020202020202020202020202020202";

Eoa eoa_for(const char* seed) {
    DeterministicEntropy e(fixed_from_hex<32>(seed));
    return wallet::Identity::generate(e).wallet.eoa();
}

struct CliRun {
    int code;
    std::string out;
    std::string err;

    Json json() const { return Json::parse(out); }
};

class WalletCliTest : public ::testing::Test {
protected:
    WalletCliTest() {
        dir = fs::temp_directory_path() / ("medsim-cli-" + std::to_string(::getpid()));
        fs::remove_all(dir);
        fs::create_directories(dir);
        node::EcosystemOptions opts;
        opts.seed = crypto::sha256(as_bytes("cli"));
        opts.allocations[eoa_for(kAliceSeed)] = 50 * kWholeToken;
        opts.allocations[eoa_for(kBobSeed)] = 50 * kWholeToken;
        eco = std::make_unique<node::Ecosystem>(opts);
        server = std::make_unique<net::NodeServer>(*eco, net::ServerOptions{});
        server->start();
        std::ofstream(dir / "config.json")
            << Json{{"node", server->base_url()}, {"connector", server->base_url()}, {"kdf", "minimal"}}.dump();
        env.vars["MEDSIM_CONFIG"] = (dir / "config.json").string();
        env.vars["MEDSIM_PASSPHRASE"] = "pw";
    }

    ~WalletCliTest() override { fs::remove_all(dir); }

    CliRun as(const std::string& who, std::vector<std::string> args) {
        args.insert(args.begin(), {"--keystore", (dir / (who + ".json")).string()});
        std::ostringstream out, err;
        int code = wallet_main(args, out, err, env);
        return {code, out.str(), err.str()};
    }

    void onboard(const std::string& who, const char* seed) {
        ASSERT_EQ(as(who, {"identity", "create", "--seed", seed}).code, 0);
        auto r = as(who, {"join"});
        ASSERT_EQ(r.code, 0) << r.err;
    }

    std::string publish(const std::string& payload) {
        auto r = as("alice", {"--json", "publish", "--payload", payload, "--alias", "demo", "--price", "2",
                              "--supply", "3", "--description", R"({"name":"demo"})"});
        EXPECT_EQ(r.code, 0) << r.err << r.out;
        return r.json().at("service");
    }

    fs::path dir;
    Environment env;
    std::unique_ptr<node::Ecosystem> eco;
    std::unique_ptr<net::NodeServer> server;
};

TEST_F(WalletCliTest, FreshMemberHasNoOwnServices) {
    onboard("alice", kAliceSeed);
    auto r = as("alice", {"--json", "catalog"});
    ASSERT_EQ(r.code, 0) << r.err;
    for (const auto& s : r.json().at("services")) EXPECT_FALSE(s.at("own").template get<bool>());
    auto show = as("alice", {"--json", "identity", "show"});
    EXPECT_EQ(show.json().at("eoa"), eoa_for(kAliceSeed).str());
    EXPECT_TRUE(show.json().at("credential").is_string());
}

TEST_F(WalletCliTest, PublishBuyAccess) {
    onboard("alice", kAliceSeed);
    onboard("bob", kBobSeed);
    std::string svc = publish("payload bytes");

    auto early = as("bob", {"access", "--service", svc});
    EXPECT_EQ(early.code, kExitDenied + 7);
    EXPECT_NE(early.err.find("NO_PROOF_OF_PURCHASE"), std::string::npos);

    ASSERT_EQ(as("bob", {"buy", "--service", svc}).code, 0);
    auto got = as("bob", {"access", "--service", svc});
    ASSERT_EQ(got.code, 0) << got.err;
    EXPECT_EQ(got.out, "payload bytes");

    auto file = dir / "out.bin";
    ASSERT_EQ(as("bob", {"buy", "--service", svc}).code, 0);
    ASSERT_EQ(as("bob", {"access", "--service", svc, "--out", file.string()}).code, 0);
    std::ifstream in(file);
    EXPECT_EQ(std::string(std::istreambuf_iterator<char>(in), {}), "payload bytes");

    auto bal = as("bob", {"--json", "balance"});
    EXPECT_EQ(bal.json().at("native"), "46");

    auto cat = as("bob", {"catalog"});
    EXPECT_NE(cat.out.find("demo"), std::string::npos);
}

TEST_F(WalletCliTest, RevertsAndUsageErrorsHaveStableCodes) {
    onboard("alice", kAliceSeed);
    onboard("bob", kBobSeed);
    std::string svc = publish("p");
    auto under = as("bob", {"buy", "--service", svc, "--value", "1"});
    EXPECT_EQ(under.code, kExitReverted);
    EXPECT_NE(under.err.find("WRONG_AMOUNT"), std::string::npos);
    EXPECT_EQ(as("bob", {"--json", "balance"}).json().at("native"), "50");

    EXPECT_EQ(as("bob", {"frobnicate"}).code, kExitUsage);
    EXPECT_EQ(as("bob", {"buy"}).code, kExitUsage);
    EXPECT_EQ(as("bob", {"--help"}).code, kExitOk);
    EXPECT_EQ(as("bob", {"transfer", "--to", "0x12", "--amount", "1"}).code, kExitError);
}

TEST_F(WalletCliTest, TransfersMoveNativeAndTokens) {
    onboard("alice", kAliceSeed);
    onboard("bob", kBobSeed);
    std::string svc = publish("p");
    std::string bob = eoa_for(kBobSeed).str();
    ASSERT_EQ(as("alice", {"transfer", "--to", bob, "--amount", "1.5"}).code, 0);
    EXPECT_EQ(as("bob", {"--json", "balance"}).json().at("native"), "51.5");

    auto listing = eco->chain().call_static(eco->addresses().factory, "listOfferings", Json::object());
    std::string at = listing.at(0).at("access_token_contract");
    ASSERT_EQ(as("alice", {"transfer", "--to", bob, "--amount", "1", "--token", at}).code, 0);
    EXPECT_EQ(as("bob", {"--json", "balance", "--token", at}).json().at("token"), "1");
    // Holding the token is the proof of purchase.
    EXPECT_EQ(as("bob", {"access", "--service", svc}).code, 0);
}

TEST_F(WalletCliTest, KeystoreProtectsIdentity) {
    ASSERT_EQ(as("alice", {"identity", "create", "--seed", kAliceSeed}).code, 0);
    EXPECT_EQ(as("alice", {"identity", "create", "--seed", kAliceSeed}).code, kExitError);
    auto wrong = as("alice", {"--passphrase", "nope", "identity", "show"});
    EXPECT_EQ(wrong.code, kExitError);
    EXPECT_NE(wrong.err.find("unauthorized"), std::string::npos);
    std::ifstream in(dir / "alice.json");
    std::string text(std::istreambuf_iterator<char>(in), {});
    DeterministicEntropy e(fixed_from_hex<32>(kAliceSeed));
    auto id = wallet::Identity::generate(e);
    EXPECT_EQ(text.find(to_hex(id.wallet.secret())), std::string::npos);
    EXPECT_EQ(text.find(to_hex(id.identity.seed())), std::string::npos);
}

TEST_F(WalletCliTest, OfflineCreateThenPublish) {
    ASSERT_EQ(as("alice", {"identity", "create", "--seed", kAliceSeed, "--offline"}).code, 0);
    EXPECT_EQ(as("alice", {"join"}).code, kExitError);
    ASSERT_EQ(as("alice", {"identity", "publish"}).code, 0);
    EXPECT_EQ(as("alice", {"join"}).code, 0);
}

TEST(WalletConfig, FlagsBeatEnvBeatFile) {
    auto dir = fs::temp_directory_path() / "medsim-config-test";
    fs::create_directories(dir);
    auto file = dir / "c.json";
    std::ofstream(file) << R"({"node":"http://file:1","scp":"http://file-scp:1","keystore":"/file/ks","connector":"http://c"})";

    Environment env;
    env.vars["MEDSIM_CONFIG"] = file.string();
    auto cfg = resolve_config({}, env);
    EXPECT_EQ(cfg.endpoints.vdr, "http://file:1");
    EXPECT_EQ(cfg.endpoints.scp, "http://file-scp:1");
    EXPECT_EQ(cfg.keystore, "/file/ks");
    EXPECT_EQ(cfg.connector, "http://c");

    env.vars["MEDSIM_KEYSTORE"] = "/env/ks";
    EXPECT_EQ(resolve_config({}, env).keystore, "/env/ks");

    ConfigFlags flags;
    flags.keystore = "/flag/ks";
    flags.node = "http://flag:2";
    cfg = resolve_config(flags, env);
    EXPECT_EQ(cfg.keystore, "/flag/ks");
    EXPECT_EQ(cfg.endpoints.vdr, "http://flag:2");
    EXPECT_EQ(cfg.endpoints.scp, "http://file-scp:1");

    flags.connector.clear();
    flags.config = (dir / "bare.json").string();
    std::ofstream(dir / "bare.json") << "{}";
    EXPECT_EQ(resolve_config(flags, env).connector, "http://flag:2");

    flags.config = (dir / "missing.json").string();
    EXPECT_THROW(resolve_config(flags, env), Error);
    fs::remove_all(dir);
}

}  // namespace
}  // namespace medsim::cli
