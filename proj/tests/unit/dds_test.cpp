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
#include "medsim/dds/store.hpp"

namespace medsim::dds {
namespace {

TEST(Cid, HelloVector) {
    // sha256("hello") from tests/oracles/crypto_vectors.py
    EXPECT_EQ(Cid::of(as_bytes("hello")).str(),
              "sha256-2cf24dba5fb0a30e26e83b2ac5b9e29e1b161e5c1fa7425e73043362938b9824");
}

TEST(Cid, ParseRoundTrip) {
    Cid c = Cid::of(as_bytes("x"));
    EXPECT_EQ(Cid::parse(c.str()), c);
    for (const char* bad : {"", "sha256-", "sha256-zz", "md5-2cf24dba5fb0a30e26e83b2ac5b9e29e1b161e5c1fa7425e73043362938b9824",
                            "sha256-2cf24dba5fb0a30e26e83b2ac5b9e29e1b161e5c1fa7425e73043362938b98"}) {
        EXPECT_THROW(Cid::parse(bad), Error) << bad;
    }
}

TEST(Store, PutIsIdempotent) {
    Store s;
    Cid a = s.put(as_bytes("payload"));
    Cid b = s.put(as_bytes("payload"));
    EXPECT_EQ(a, b);
    EXPECT_EQ(s.size(), 1u);
}

TEST(Store, EmptyContentRejected) {
    Store s;
    try {
        s.put({});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::invalid_argument);
    }
}

TEST(Store, UnknownCidNotFound) {
    Store s;
    try {
        s.get(Cid::of(as_bytes("never stored")));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::not_found);
    }
    EXPECT_FALSE(s.contains(Cid::of(as_bytes("never stored"))));
}

TEST(Store, RandomRoundTripAndIntegrity) {
    Store s;
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        Bytes b(1 + rng() % 512);
        for (auto& x : b) x = static_cast<std::uint8_t>(rng());
        Cid c = s.put(b);
        Bytes back = s.get(c);
        EXPECT_EQ(back, b);
        EXPECT_EQ(Cid::of(back), c);
    }
}

}  // namespace
}  // namespace medsim::dds
