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

#include "medsim/common/address.hpp"
#include "medsim/common/amount.hpp"
#include "medsim/common/bytes.hpp"
#include "medsim/common/entropy.hpp"
#include "medsim/common/error.hpp"
#include "medsim/common/json.hpp"

namespace medsim {
namespace {

TEST(Hex, RoundTripAndPrefix) {
    Bytes raw = {0x00, 0x01, 0xab, 0xff};
    EXPECT_EQ(to_hex(raw), "0001abff");
    EXPECT_EQ(from_hex("0x0001ABff"), raw);
    EXPECT_THROW(from_hex("abc"), Error);
    EXPECT_THROW(from_hex("zz"), Error);
}

TEST(Base64Url, KnownValues) {
    EXPECT_EQ(base64url_encode(as_bytes("hello?")), "aGVsbG8_");
    EXPECT_EQ(to_string(base64url_decode("aGVsbG8_")), "hello?");
    EXPECT_THROW(base64url_decode("a=b"), Error);
}

TEST(Base58, KnownValues) {
    EXPECT_EQ(base58_encode(as_bytes("hello world")), "StV1DL6CwTryKyV");
    Bytes zeros = {0, 0, 1};
    EXPECT_EQ(base58_encode(zeros), "112");
}

TEST(Amount, ParseAndPrint) {
    Amount big = kWholeToken * kWholeToken;
    EXPECT_EQ(amount_to_string(big), "1000000000000000000000000000000000000");
    EXPECT_EQ(parse_amount("1000000000000000000000000000000000000"), big);
    EXPECT_EQ(amount_to_string(0), "0");
    EXPECT_THROW(parse_amount(""), Error);
    EXPECT_THROW(parse_amount("-1"), Error);
    EXPECT_THROW(parse_amount("340282366920938463463374607431768211456"), Error);
    EXPECT_EQ(amount_to_string(parse_amount("340282366920938463463374607431768211455")),
              "340282366920938463463374607431768211455");
}

TEST(Amount, WholeTokens) {
    EXPECT_EQ(parse_tokens("2"), 2 * kWholeToken);
    EXPECT_EQ(parse_tokens("2.5"), 5 * kWholeToken / 2);
    EXPECT_EQ(parse_tokens(".5"), kWholeToken / 2);
    EXPECT_EQ(parse_tokens("0.000000000000000001"), 1);
    EXPECT_THROW(parse_tokens("0.0000000000000000001"), Error);
    EXPECT_THROW(parse_tokens("1."), Error);
    EXPECT_THROW(parse_tokens("."), Error);
    EXPECT_THROW(parse_tokens("1e3"), Error);
    EXPECT_EQ(format_tokens(5 * kWholeToken / 2), "2.5");
    EXPECT_EQ(format_tokens(1), "0.000000000000000001");
    EXPECT_EQ(format_tokens(0), "0");
    for (Amount v : {Amount(7), kWholeToken, 123 * kWholeToken + 456}) {
        EXPECT_EQ(parse_tokens(format_tokens(v)), v);
    }
}

TEST(Address, DisplayForm) {
    auto a = Address::parse("0x7E5F4552091A69125d5DfCb7b8C2659029395Bdf");
    EXPECT_EQ(a.str(), "0x7e5f4552091a69125d5dfcb7b8c2659029395bdf");
    EXPECT_EQ(a.str().size(), 42u);
    EXPECT_THROW(Address::parse("0x1234"), Error);
    EXPECT_THROW(Address::parse("7e5f4552091a69125d5dfcb7b8c2659029395bdf00"), Error);
}

TEST(Json, CanonicalSortsKeysCompactly) {
    Json j = parse_json(R"({ "b": 1, "a": { "d": [1, 2], "c": "x" } })");
    EXPECT_EQ(canonical(j), R"({"a":{"c":"x","d":[1,2]},"b":1})");
    EXPECT_THROW(parse_json("{"), Error);
}

TEST(Entropy, DeterministicStreamRepeats) {
    Hash32 seed{};
    seed[0] = 7;
    DeterministicEntropy a(seed);
    DeterministicEntropy b(seed);
    auto a1 = a.draw<32>();
    auto a2 = a.draw<32>();
    EXPECT_EQ(a1, b.draw<32>());
    EXPECT_EQ(a2, b.draw<32>());
    EXPECT_NE(a1, a2);
    DeterministicEntropy c(seed);
    EXPECT_EQ(random_uuid(c).size(), 36u);
}

}  // namespace
}  // namespace medsim
