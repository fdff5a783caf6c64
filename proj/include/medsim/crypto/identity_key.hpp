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

#include <array>
#include <optional>
#include <string>

#include "medsim/common/bytes.hpp"
#include "medsim/common/entropy.hpp"
#include "medsim/crypto/signature.hpp"

namespace medsim::crypto {

struct IdentityPublicKey {
    std::array<std::uint8_t, 32> bytes{};

    /// Base64url of the raw key, the "x" member of an OKP JWK.
    std::string jwk_x() const;
    static IdentityPublicKey from_jwk_x(std::string_view x);

    bool operator==(const IdentityPublicKey&) const = default;
};

/// Ed25519 key pair held as its 32-byte seed.
class IdentityKeyPair {
public:
    /// Deterministic when a seed is supplied; otherwise draws from the
    /// system RNG. Throws Errc::invalid_argument for a seed that is not
    /// 32 bytes.
    static IdentityKeyPair generate(std::optional<ByteView> seed = std::nullopt);
    static IdentityKeyPair generate(Entropy& entropy);

    const IdentityPublicKey& public_key() const { return public_; }
    const std::array<std::uint8_t, 32>& seed() const { return seed_; }

    Signature sign(ByteView message) const;

private:
    IdentityKeyPair() = default;

    std::array<std::uint8_t, 32> seed_{};
    std::array<std::uint8_t, 64> secret_{};
    IdentityPublicKey public_;
};

Signature sign_identity(const IdentityKeyPair& key, ByteView message);

/// False for any signature that does not verify; throws Errc::malformed if
/// the signature is not an identity-scheme signature.
bool verify_identity(const IdentityPublicKey& key, ByteView message, const Signature& sig);

}  // namespace medsim::crypto
