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

#include "medsim/common/address.hpp"
#include "medsim/common/bytes.hpp"
#include "medsim/common/entropy.hpp"
#include "medsim/crypto/signature.hpp"

namespace medsim::crypto {

/// Uncompressed secp256k1 point without the 0x04 prefix (x || y).
struct WalletPublicKey {
    std::array<std::uint8_t, 64> xy{};

    bool operator==(const WalletPublicKey&) const = default;
};

class WalletKeyPair {
public:
    /// The secret is the big-endian scalar itself and must lie in [1, n).
    /// Throws Errc::invalid_argument otherwise.
    static WalletKeyPair from_secret(ByteView secret);
    /// Without a seed, draws from the system RNG. A seed is hashed until it
    /// yields a valid scalar.
    static WalletKeyPair generate(std::optional<ByteView> seed = std::nullopt);
    static WalletKeyPair generate(Entropy& entropy);

    const std::array<std::uint8_t, 32>& secret() const { return secret_; }
    const WalletPublicKey& public_key() const { return public_; }
    const Eoa& eoa() const { return eoa_; }

    Signature sign(ByteView message) const;

private:
    WalletKeyPair() = default;

    std::array<std::uint8_t, 32> secret_{};
    WalletPublicKey public_;
    Eoa eoa_;
};

/// Keccak-256 of x || y, last 20 bytes. Throws Errc::malformed if the
/// point is not on the curve.
Eoa derive_eoa(const WalletPublicKey& key);

/// Recoverable ECDSA over the personal-message digest of `message`, with
/// RFC 6979 nonces and low-s normalisation. Throws Errc::invalid_argument
/// for an empty message.
Signature sign_wallet(const WalletKeyPair& key, ByteView message);

/// Public key that produced `sig` over the personal-message digest of
/// `message`, or nullopt if no point recovers. Throws Errc::malformed for
/// encodings that can never be valid (wrong scheme, bad v, r/s out of range,
/// high s).
std::optional<WalletPublicKey> recover_wallet(ByteView message, const Signature& sig);

/// True iff the recovered signer address equals `eoa`.
bool verify_wallet(const Eoa& eoa, ByteView message, const Signature& sig);

/// Raw-digest primitives, exposed for test vectors.
Signature sign_digest(const std::array<std::uint8_t, 32>& secret, const Hash32& digest);
std::optional<WalletPublicKey> recover_digest(const Hash32& digest, const Signature& sig);

}  // namespace medsim::crypto
