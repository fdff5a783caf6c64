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

#include "medsim/common/error.hpp"
#include "support/stack.hpp"

namespace medsim::wallet {
namespace {

using testing::Stack;

Identity sample() {
    DeterministicEntropy e(crypto::sha256(as_bytes("ks")));
    Identity id = Identity::generate(e);
    id.credential = "a.b.c";
    return id;
}

TEST(Keystore, SealOpenRoundTrip) {
    DeterministicEntropy e(crypto::sha256(as_bytes("salt")));
    Identity id = sample();
    std::string text = seal_keystore(id, "pw", e, KdfParams::minimal());
    Identity back = open_keystore(text, "pw");
    EXPECT_EQ(back.identity.seed(), id.identity.seed());
    EXPECT_EQ(back.wallet.secret(), id.wallet.secret());
    EXPECT_EQ(back.document, id.document);
    EXPECT_EQ(back.credential, id.credential);
}

TEST(Keystore, NoSecretsInTheClear) {
    DeterministicEntropy e(crypto::sha256(as_bytes("salt")));
    Identity id = sample();
    std::string text = seal_keystore(id, "pw", e, KdfParams::minimal());
    EXPECT_EQ(text.find(to_hex(id.identity.seed())), std::string::npos);
    EXPECT_EQ(text.find(to_hex(id.wallet.secret())), std::string::npos);
    EXPECT_EQ(text.find("a.b.c"), std::string::npos);
    Json j = parse_json(text);
    EXPECT_EQ(j.at("version"), kKeystoreVersion);
    EXPECT_EQ(j.at("public").at("did"), id.did().str());
}

TEST(Keystore, WrongPassphraseOrTamperRejected) {
    DeterministicEntropy e(crypto::sha256(as_bytes("salt")));
    Identity id = sample();
    std::string text = seal_keystore(id, "pw", e, KdfParams::minimal());
    try {
        open_keystore(text, "wrong");
        FAIL();
    } catch (const Error& err) {
        EXPECT_EQ(err.code(), Errc::unauthorized);
    }
    Json j = parse_json(text);
    j["public"]["eoa"] = "0x0000000000000000000000000000000000000001";
    EXPECT_THROW(open_keystore(j.dump(), "pw"), Error);
    Json v = parse_json(text);
    v["version"] = 99;
    EXPECT_THROW(open_keystore(v.dump(), "pw"), Error);
}

TEST(Keystore, FileRoundTripWithOwnerOnlyPermissions) {
    auto dir = std::filesystem::temp_directory_path() / "medsim-keystore-test";
    std::filesystem::remove_all(dir);
    auto path = dir / "sub" / "keystore.json";
    DeterministicEntropy e(crypto::sha256(as_bytes("salt")));
    Identity id = sample();
    save_keystore(path, id, "pw", e, KdfParams::minimal());
    auto perms = std::filesystem::status(path).permissions();
    EXPECT_EQ(perms & std::filesystem::perms::group_all, std::filesystem::perms::none);
    EXPECT_EQ(perms & std::filesystem::perms::others_all, std::filesystem::perms::none);
    EXPECT_EQ(load_keystore(path, "pw").wallet.eoa(), id.wallet.eoa());
    EXPECT_THROW(load_keystore(dir / "missing.json", "pw"), Error);
    std::filesystem::remove_all(dir);
}

TEST(Agent, FreshMemberSeesNoOwnServices) {
    Stack s;
    s.onboard("alice");
    for (const auto& e : s.agent("alice").catalog()) {
        EXPECT_NE(e.offering.owner, s.id("alice").wallet.eoa());
    }
}

TEST(Agent, PublishBuyAccessRoundTrip) {
    Stack s;
    s.onboard("alice");
    s.onboard("bob");
    auto pub = s.publish("alice", "the payload", 3 * kWholeToken);
    auto cat = s.agent("bob").catalog();
    ASSERT_EQ(cat.size(), 1u);
    EXPECT_EQ(cat[0].offering.service_contract, *pub.service);
    EXPECT_TRUE(cat[0].active);
    ASSERT_TRUE(cat[0].description);
    EXPECT_EQ(cat[0].description->at("name"), "svc");

    auto before = s.agent("bob").access(*pub.service);
    EXPECT_FALSE(before.decision.granted);
    EXPECT_EQ(before.decision.stage, connector::Stage::purchase);

    Amount bob0 = s.agent("bob").native_balance();
    ASSERT_TRUE(s.agent("bob").buy(*pub.service).ok());
    EXPECT_EQ(s.agent("bob").native_balance(), bob0 - 3 * kWholeToken);
    EXPECT_EQ(s.agent("bob").token_balance(*pub.access_token), kWholeToken);

    auto after = s.agent("bob").access(*pub.service);
    ASSERT_TRUE(after.decision.granted) << after.decision.reason;
    ASSERT_TRUE(after.payload);
    EXPECT_EQ(to_string(*after.payload), "the payload");
}

TEST(Agent, PresentationNeedsCredential) {
    Stack s;
    EXPECT_THROW(s.agent("alice").presentation(std::string(64, 'a')), Error);
}

TEST(Agent, UnverifiedProviderCannotPublish) {
    Stack s;
    s.agent("alice").publish_identity();
    wallet::PublishRequest req;
    req.connector_url = std::string(testing::kConnectorUrl);
    req.payload = to_bytes("x");
    req.alias = "x";
    req.price = 1;
    auto r = s.agent("alice").publish(req);
    EXPECT_FALSE(r.receipt.ok());
    EXPECT_FALSE(r.service);
}

}  // namespace
}  // namespace medsim::wallet
