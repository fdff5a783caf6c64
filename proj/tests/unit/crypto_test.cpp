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

#include <atomic>
#include <random>
#include <set>
#include <thread>

#include "medsim/common/error.hpp"
#include "medsim/crypto/challenge.hpp"
#include "medsim/crypto/hash.hpp"
#include "medsim/crypto/identity_key.hpp"
#include "medsim/crypto/wallet_key.hpp"

namespace medsim::crypto {
namespace {

// Expected values below come from tests/oracles/crypto_vectors.py.

std::array<std::uint8_t, 32> scalar(std::uint64_t v) {
    std::array<std::uint8_t, 32> out{};
    for (int i = 0; i < 8; ++i) {
        out[31 - i] = static_cast<std::uint8_t>(v >> (8 * i));
    }
    return out;
}

TEST(Hash, KeccakVectors) {
    EXPECT_EQ(to_hex(keccak256({})),
              "c5d2460186f7233c927e7db2dcc703c0e500b653ca82273b7bfad8045d85a470");
    EXPECT_EQ(to_hex(keccak256(as_bytes("abc"))),
              "4e03657aea45a94fc7d47ba826c8d667c0d1e6e33a64a036ec44f58fa12d6c45");
    // Crosses the 136-byte rate boundary.
    EXPECT_EQ(to_hex(keccak256(as_bytes(std::string(200, 'a')))),
              "96ea54061def936c4be90b518992fdc6f12f535068a256229aca54267b4d084d");
}

TEST(Hash, Sha256Vector) {
    EXPECT_EQ(to_hex(sha256(as_bytes("hello"))),
              "2cf24dba5fb0a30e26e83b2ac5b9e29e1b161e5c1fa7425e73043362938b9824");
}

TEST(IdentityKey, ZeroSeedIsFixed) {
    std::array<std::uint8_t, 32> zero{};
    auto a = IdentityKeyPair::generate(ByteView(zero));
    auto b = IdentityKeyPair::generate(ByteView(zero));
    EXPECT_EQ(a.public_key(), b.public_key());
    EXPECT_EQ(to_hex(a.public_key().bytes),
              "3b6a27bcceb6a42d62a3a8d02a6f0d73653215771de243a63ac048a18b59da29");
    EXPECT_EQ(a.sign(as_bytes("x")).hex(),
              "f7f495f304217c4afd4b516422d9656fa6103e8ef938385ec04a9b93bb32c253"
              "688b8dbad2187213adddd61bf9bccd411e0af385a69fd723d5b5c78f1544d403");
}

TEST(IdentityKey, UnseededKeysDiffer) {
    EXPECT_NE(IdentityKeyPair::generate().public_key(), IdentityKeyPair::generate().public_key());
}

TEST(IdentityKey, MalformedSeedRejected) {
    std::array<std::uint8_t, 31> short_seed{};
    try {
        IdentityKeyPair::generate(ByteView(short_seed));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::invalid_argument);
    }
}

TEST(IdentityKey, RoundTripAndWrongKey) {
    auto k = IdentityKeyPair::generate();
    auto other = IdentityKeyPair::generate();
    auto sig = sign_identity(k, as_bytes("x"));
    EXPECT_TRUE(verify_identity(k.public_key(), as_bytes("x"), sig));
    EXPECT_FALSE(verify_identity(other.public_key(), as_bytes("x"), sig));
    EXPECT_FALSE(verify_identity(k.public_key(), as_bytes("y"), sig));
    EXPECT_FALSE(sig.recovery_id().has_value());
}

TEST(IdentityKey, MutatedSignaturesNeverVerify) {
    auto k = IdentityKeyPair::generate();
    auto msg = as_bytes("challenge");
    auto sig = k.sign(msg);
    std::mt19937 rng(1234);
    int acceptances = 0;
    for (int i = 0; i < 1000; ++i) {
        Bytes raw = sig.bytes();
        raw[rng() % raw.size()] ^= static_cast<std::uint8_t>(1 + rng() % 255);
        if (verify_identity(k.public_key(), msg, Signature(Scheme::identity, raw))) {
            ++acceptances;
        }
    }
    EXPECT_EQ(acceptances, 0);
}

TEST(WalletKey, KnownAddresses) {
    EXPECT_EQ(WalletKeyPair::from_secret(scalar(1)).eoa().str(),
              "0x7e5f4552091a69125d5dfcb7b8c2659029395bdf");
    EXPECT_EQ(WalletKeyPair::from_secret(scalar(2)).eoa().str(),
              "0x2b5ad5c4795c026514f8317c7a215e218dccd6cf");
    EXPECT_EQ(WalletKeyPair::from_secret(scalar(0xdeadbeef)).eoa().str(),
              "0xe8a78b476ae1403b7fd39b662545ae608aced7c7");
}

TEST(WalletKey, SecretOutOfRange) {
    EXPECT_THROW(WalletKeyPair::from_secret(scalar(0)), Error);
    auto n = from_hex("fffffffffffffffffffffffffffffffebaaedce6af48a03bbfd25e8cd0364141");
    EXPECT_THROW(WalletKeyPair::from_secret(n), Error);
}

TEST(WalletKey, DeriveEoaIsPure) {
    auto k = WalletKeyPair::generate();
    EXPECT_EQ(derive_eoa(k.public_key()), derive_eoa(k.public_key()));
    EXPECT_EQ(derive_eoa(k.public_key()), k.eoa());
}

TEST(WalletKey, OffCurvePointRejected) {
    auto k = WalletKeyPair::from_secret(scalar(1));
    WalletPublicKey bad = k.public_key();
    bad.xy[63] ^= 1;
    try {
        derive_eoa(bad);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::malformed);
    }
}

TEST(WalletKey, NoCollisionsOverRandomSecrets) {
    std::set<Eoa> seen;
    Hash32 seed{};
    DeterministicEntropy entropy(seed);
    constexpr int kKeys = 10'000;
    for (int i = 0; i < kKeys; ++i) {
        seen.insert(WalletKeyPair::generate(entropy).eoa());
    }
    EXPECT_EQ(seen.size(), static_cast<std::size_t>(kKeys));
}

struct SigningVector {
    std::array<std::uint8_t, 32> secret;
    std::string message;
    std::string signature;
};

TEST(WalletKey, MatchesIndependentPersonalMessageSigner) {
    std::array<std::uint8_t, 32> third{};
    auto digest = sha256(as_bytes("medsim-wallet"));
    std::copy(digest.begin(), digest.end(), third.begin());
    std::string hex_message;
    for (int i = 0; i < 32; ++i) hex_message += "9f";
    const SigningVector vectors[] = {
        {scalar(1), "medsim challenge",
         "55900153fec7cdae825bfd569d7a4e9aab4c2fa3174f7a29541efb7730db0a94"
         "43c38575e299a37ee7fd5abfad31badc9acda61d5d5218850e3217008f227e911c"},
        {scalar(0xdeadbeef), hex_message,
         "7f04f7f0f1f077bde18bda69caf6eaaf199e73cfbbcecbe928ded3dfb1c44837"
         "6f3e1ce30873f84317fe5fbf36717f607c1ff8d3d976f2984edf72d349bdf9fe1c"},
        {third, "x",
         "071d5a2f14038c347b7221be828c0c1005c2c55e72dfe300af8906a2e1a40ce7"
         "323fe5d7dd415b04e6a24269b3079fd419c95614c5378f99e688d0f3d9c0bea71c"},
    };
    for (const auto& v : vectors) {
        auto key = WalletKeyPair::from_secret(v.secret);
        auto sig = sign_wallet(key, as_bytes(v.message));
        EXPECT_EQ(sig.hex(), v.signature);
        auto recovered = recover_wallet(as_bytes(v.message), sig);
        ASSERT_TRUE(recovered.has_value());
        EXPECT_EQ(derive_eoa(*recovered), key.eoa());
    }
}

TEST(WalletKey, RoundTripAndMismatch) {
    auto a = WalletKeyPair::generate();
    auto b = WalletKeyPair::generate();
    auto msg = as_bytes("m");
    auto sig = sign_wallet(a, msg);
    EXPECT_TRUE(verify_wallet(a.eoa(), msg, sig));
    EXPECT_FALSE(verify_wallet(b.eoa(), msg, sig));
    EXPECT_FALSE(verify_wallet(a.eoa(), as_bytes("m'"), sig));
    ASSERT_TRUE(sig.recovery_id().has_value());
    EXPECT_LE(*sig.recovery_id(), 1);
}

TEST(WalletKey, EmptyMessageRejected) {
    auto a = WalletKeyPair::generate();
    EXPECT_THROW(sign_wallet(a, {}), Error);
}

TEST(WalletKey, MalformedEncodingIsAnErrorNotFalse) {
    auto a = WalletKeyPair::generate();
    EXPECT_THROW(Signature::from_hex(Scheme::wallet, "00ff"), Error);
    Bytes raw(65, 0);
    raw[64] = 27;
    try {
        verify_wallet(a.eoa(), as_bytes("m"), Signature(Scheme::wallet, raw));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::malformed);
    }
    auto identity_sig = IdentityKeyPair::generate().sign(as_bytes("m"));
    EXPECT_THROW(verify_wallet(a.eoa(), as_bytes("m"), identity_sig), Error);
}

TEST(WalletKey, SingleByteFlipsNeverAccepted) {
    auto a = WalletKeyPair::generate();
    auto msg = as_bytes("flip me");
    auto sig = sign_wallet(a, msg);
    std::mt19937 rng(99);
    int acceptances = 0;
    for (int i = 0; i < 1000; ++i) {
        Bytes raw = sig.bytes();
        raw[rng() % raw.size()] ^= static_cast<std::uint8_t>(1 + rng() % 255);
        try {
            if (verify_wallet(a.eoa(), msg, Signature(Scheme::wallet, raw))) {
                ++acceptances;
            }
        } catch (const Error&) {
            // Malformed encodings are rejected outright.
        }
    }
    EXPECT_EQ(acceptances, 0);
}

class ChallengeStoreTest : public ::testing::Test {
protected:
    ManualClock clock{1'000};
    DeterministicEntropy entropy{Hash32{}};
    ChallengeStore store{clock, entropy};
};

TEST_F(ChallengeStoreTest, SingleUse) {
    auto c = new_challenge(store, "did:medsim:abc", 300);
    EXPECT_EQ(c.nonce_hex().size(), 64u);
    EXPECT_EQ(check_challenge(store, c.nonce_hex(), "did:medsim:abc").nonce, c.nonce);
    try {
        check_challenge(store, c.nonce_hex(), "did:medsim:abc");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::replay);
    }
}

TEST_F(ChallengeStoreTest, ExpiresAfterTtl) {
    auto c = store.issue("aud", 300);
    clock.advance(301);
    try {
        store.consume(c.nonce_hex(), "aud");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::expired);
    }
}

TEST_F(ChallengeStoreTest, BoundaryOfTtlIsStillValid) {
    auto c = store.issue("aud", 300);
    clock.advance(300);
    EXPECT_NO_THROW(store.consume(c.nonce_hex(), "aud"));
}

TEST_F(ChallengeStoreTest, AudienceMismatchDoesNotConsume) {
    auto c = store.issue("alice", 300);
    try {
        store.consume(c.nonce_hex(), "bob");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::mismatch);
    }
    EXPECT_NO_THROW(store.consume(c.nonce_hex(), "alice"));
}

TEST_F(ChallengeStoreTest, UnknownAndBadTtl) {
    try {
        store.consume(std::string(64, '0'), std::nullopt);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::not_found);
    }
    EXPECT_THROW(store.issue("x", 0), Error);
}

TEST_F(ChallengeStoreTest, DistinctNonces) {
    std::set<std::string> nonces;
    for (int i = 0; i < 500; ++i) {
        nonces.insert(store.issue("a").nonce_hex());
    }
    EXPECT_EQ(nonces.size(), 500u);
}

// Concurrent consumers racing on the same nonces: each nonce succeeds once.
TEST_F(ChallengeStoreTest, ConcurrentConsumeIsAtomic) {
    std::vector<std::string> nonces;
    for (int i = 0; i < 200; ++i) {
        nonces.push_back(store.issue("aud").nonce_hex());
    }
    std::atomic<int> successes{0};
    std::vector<std::thread> threads;
    for (int t = 0; t < 8; ++t) {
        threads.emplace_back([&] {
            for (const auto& n : nonces) {
                try {
                    store.consume(n, std::nullopt);
                    ++successes;
                } catch (const Error&) {
                }
            }
        });
    }
    for (auto& t : threads) t.join();
    EXPECT_EQ(successes.load(), 200);
    EXPECT_EQ(store.outstanding(), 0u);
}

}  // namespace
}  // namespace medsim::crypto
