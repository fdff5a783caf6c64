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

#include "medsim/common/error.hpp"
#include "support/stack.hpp"

namespace medsim::connector {
namespace {

using testing::Stack;

class ConnectorTest : public ::testing::Test {
protected:
    ConnectorTest() {
        s.onboard("alice");
        s.onboard("bob");
        pub = s.publish("alice", "hello payload");
    }

    std::string id() const { return pub.hosted.id; }

    // Valid presentation for `who` over a fresh connector challenge.
    std::string vp(const std::string& who) {
        return s.agent(who).presentation(s.conn().challenge().nonce_hex());
    }

    Stack s;
    wallet::PublishResult pub;
};

TEST_F(ConnectorTest, DeployHostsPayloadAndDescription) {
    auto svc = s.conn().service(id());
    ASSERT_TRUE(svc);
    EXPECT_EQ(svc->service_url, std::string(testing::kConnectorUrl) + "/connector/services/" + id() + "/payload");
    Json desc = parse_json(to_string(s.eco().dds().get(pub.hosted.cid)));
    EXPECT_EQ(desc.at("name"), "svc");
    auto other = s.conn().deploy_service(to_bytes("x"), Json::object(), s.id("alice").wallet.eoa());
    EXPECT_NE(other.service_url, svc->service_url);
    EXPECT_THROW(s.conn().deploy_service({}, Json::object(), s.id("alice").wallet.eoa()), Error);
}

TEST_F(ConnectorTest, PayloadNeedsGrant) {
    try {
        s.conn().fetch_payload(id(), "no-such-grant");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::unauthorized);
    }
}

TEST_F(ConnectorTest, PurchasedConsumerGetsPayloadOnce) {
    ASSERT_TRUE(s.agent("bob").buy(*pub.service).ok());
    AccessDecision d = s.conn().request_access(id(), vp("bob"));
    ASSERT_TRUE(d.granted) << d.reason;
    EXPECT_EQ(d.consumer, s.id("bob").wallet.eoa());
    EXPECT_EQ(to_string(s.conn().fetch_payload(id(), d.grant)), "hello payload");
    EXPECT_THROW(s.conn().fetch_payload(id(), d.grant), Error);
}

TEST_F(ConnectorTest, GrantExpires) {
    ASSERT_TRUE(s.agent("bob").buy(*pub.service).ok());
    AccessDecision d = s.conn().request_access(id(), vp("bob"));
    ASSERT_TRUE(d.granted);
    s.clock().advance(kDefaultGrantTtl + 1);
    EXPECT_THROW(s.conn().fetch_payload(id(), d.grant), Error);
}

TEST_F(ConnectorTest, GrantBoundToService) {
    auto other = s.publish("alice", "second");
    ASSERT_TRUE(s.agent("bob").buy(*pub.service).ok());
    AccessDecision d = s.conn().request_access(id(), vp("bob"));
    ASSERT_TRUE(d.granted);
    EXPECT_THROW(s.conn().fetch_payload(other.hosted.id, d.grant), Error);
}

TEST_F(ConnectorTest, NoPurchaseDeniedAtStage7) {
    AccessDecision d = s.conn().request_access(id(), vp("bob"));
    EXPECT_FALSE(d.granted);
    EXPECT_EQ(d.stage, Stage::purchase);
}

TEST_F(ConnectorTest, ReplayDeniedAtStage3) {
    ASSERT_TRUE(s.agent("bob").buy(*pub.service).ok());
    std::string p = vp("bob");
    ASSERT_TRUE(s.conn().request_access(id(), p).granted);
    AccessDecision again = s.conn().request_access(id(), p);
    EXPECT_FALSE(again.granted);
    EXPECT_EQ(again.stage, Stage::presentation);
}

TEST_F(ConnectorTest, UnissuedNonceDeniedAtStage3) {
    ASSERT_TRUE(s.agent("bob").buy(*pub.service).ok());
    AccessDecision d = s.conn().request_access(id(), s.agent("bob").presentation(std::string(64, '0')));
    EXPECT_EQ(d.stage, Stage::presentation);
}

TEST_F(ConnectorTest, GarbageDeniedAtStage1) {
    for (std::string bad : {"", "a.b.c", "not a jwt"}) {
        AccessDecision d = s.conn().request_access(id(), bad);
        EXPECT_EQ(d.stage, Stage::parse);
    }
}

TEST_F(ConnectorTest, UnknownServiceIsNotFound) {
    EXPECT_THROW(s.conn().request_access("nope", vp("bob")), Error);
}

TEST_F(ConnectorTest, RevokedDeniedAtStage5) {
    ASSERT_TRUE(s.agent("bob").buy(*pub.service).ok());
    auto vc = creds::VerifiableCredential::from_jwt(*s.id("bob").credential);
    s.eco().issuer().revoke(vc.id);
    EXPECT_EQ(s.conn().request_access(id(), vp("bob")).stage, Stage::revocation);
}

TEST_F(ConnectorTest, ExpiredVcDeniedAtStage4) {
    ASSERT_TRUE(s.agent("bob").buy(*pub.service).ok());
    s.clock().advance(creds::kDefaultCredentialLifetime + 1);
    EXPECT_EQ(s.conn().request_access(id(), vp("bob")).stage, Stage::credential);
}

TEST_F(ConnectorTest, UntrustedIssuerDeniedAtStage4) {
    ASSERT_TRUE(s.agent("bob").buy(*pub.service).ok());
    // Bob's own key signs a VC naming himself as issuer.
    auto& bob = s.id("bob");
    auto vc = creds::VerifiableCredential::from_jwt(*bob.credential);
    vc.issuer = bob.did();
    auto forged = creds::sign_credential(vc, bob.identity);
    std::string jwt = creds::build_presentation(bob.did(), bob.identity, bob.wallet,
                                                s.conn().challenge().nonce_hex(), forged.jwt);
    EXPECT_EQ(s.conn().request_access(id(), jwt).stage, Stage::credential);
}

TEST_F(ConnectorTest, DeactivatedHolderDeniedAtStage2) {
    ASSERT_TRUE(s.agent("bob").buy(*pub.service).ok());
    auto& bob = s.id("bob");
    s.eco().registry().deactivate(bob.did(), bob.identity.sign(as_bytes(vdr::deactivate_proof_message(bob.did(), 1))));
    EXPECT_EQ(s.conn().request_access(id(), vp("bob")).stage, Stage::holder);
}

TEST_F(ConnectorTest, ForeignWalletSignatureDeniedAtStage6) {
    ASSERT_TRUE(s.agent("bob").buy(*pub.service).ok());
    auto& bob = s.id("bob");
    std::string jwt = creds::build_presentation(bob.did(), bob.identity, s.id("carol").wallet,
                                                s.conn().challenge().nonce_hex(), *bob.credential);
    EXPECT_EQ(s.conn().request_access(id(), jwt).stage, Stage::wallet);
}

TEST_F(ConnectorTest, KidMismatchDeniedAtStage3) {
    ASSERT_TRUE(s.agent("bob").buy(*pub.service).ok());
    // Alice wraps Bob's credential in her own presentation.
    auto& alice = s.id("alice");
    std::string jwt = creds::build_presentation(alice.did(), alice.identity, alice.wallet,
                                                s.conn().challenge().nonce_hex(), *s.id("bob").credential);
    EXPECT_EQ(s.conn().request_access(id(), jwt).stage, Stage::presentation);
}

TEST_F(ConnectorTest, AccessAfterTransferringTokenAway) {
    ASSERT_TRUE(s.agent("bob").buy(*pub.service).ok());
    ASSERT_TRUE(s.agent("bob").transfer_token(*pub.access_token, s.id("carol").wallet.eoa(), 1).ok());
    EXPECT_EQ(s.conn().request_access(id(), vp("bob")).stage, Stage::purchase);
}

TEST_F(ConnectorTest, AuditLogRecordsEveryDecision) {
    ASSERT_TRUE(s.agent("bob").buy(*pub.service).ok());
    s.conn().request_access(id(), "garbage");
    auto granted = s.conn().request_access(id(), vp("bob"));
    ASSERT_TRUE(granted.granted);
    auto log = s.conn().audit_log();
    ASSERT_EQ(log.size(), 2u);
    EXPECT_FALSE(log[0].granted);
    EXPECT_EQ(log[0].stage, 1);
    EXPECT_TRUE(log[1].granted);
    EXPECT_EQ(log[1].eoa, s.id("bob").wallet.eoa().str());
    EXPECT_EQ(log[1].holder, s.id("bob").did().str());
    EXPECT_EQ(log[1].chain_height, s.eco().chain().height());
}

TEST_F(ConnectorTest, DecisionJsonRoundTrip) {
    AccessDecision d = s.conn().request_access(id(), vp("bob"));
    Json j = d.to_json();
    EXPECT_EQ(j.at("stage"), 7);
    EXPECT_EQ(j.at("code"), "NO_PROOF_OF_PURCHASE");
    AccessDecision back = AccessDecision::from_json(j);
    EXPECT_EQ(back.stage, Stage::purchase);
}

}  // namespace
}  // namespace medsim::connector
