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

#pragma once

#include <string>
#include <string_view>

#include "medsim/common/json.hpp"
#include "medsim/crypto/identity_key.hpp"

namespace medsim::creds {

inline constexpr std::string_view kAlgorithm = "EdDSA";

/// Compact JWS: base64url(header) "." base64url(payload) "." base64url(sig).
/// Header and payload are serialized canonically; verification always runs
/// over the received segments, never over a re-serialization.
struct Jws {
    Json header;
    Json payload;
    std::string signing_input;  // first two segments joined by '.'
    Bytes signature;

    /// Structural parse only. Throws Errc::malformed.
    static Jws parse(std::string_view compact);

    /// False unless alg is EdDSA and the signature verifies under `key`.
    bool verify(const crypto::IdentityPublicKey& key) const;
};

std::string sign_jws(const Json& header, const Json& payload, const crypto::IdentityKeyPair& key);

}  // namespace medsim::creds
