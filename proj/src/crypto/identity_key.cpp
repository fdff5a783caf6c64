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

#include "medsim/crypto/identity_key.hpp"

#include <sodium.h>

#include "medsim/common/error.hpp"

namespace medsim::crypto {

std::string IdentityPublicKey::jwk_x() const { return base64url_encode(bytes); }

IdentityPublicKey IdentityPublicKey::from_jwk_x(std::string_view x) {
    Bytes raw = base64url_decode(x);
    if (raw.size() != 32) {
        throw Error(Errc::malformed, "Ed25519 public key must be 32 bytes");
    }
    IdentityPublicKey key;
    std::copy(raw.begin(), raw.end(), key.bytes.begin());
    return key;
}

IdentityKeyPair IdentityKeyPair::generate(std::optional<ByteView> seed) {
    ensure_sodium();
    IdentityKeyPair kp;
    if (seed) {
        if (seed->size() != kp.seed_.size()) {
            throw Error(Errc::invalid_argument, "identity seed must be 32 bytes");
        }
        std::copy(seed->begin(), seed->end(), kp.seed_.begin());
    } else {
        randombytes_buf(kp.seed_.data(), kp.seed_.size());
    }
    crypto_sign_ed25519_seed_keypair(kp.public_.bytes.data(), kp.secret_.data(), kp.seed_.data());
    return kp;
}

IdentityKeyPair IdentityKeyPair::generate(Entropy& entropy) {
    auto seed = entropy.draw<32>();
    return generate(ByteView(seed));
}

Signature IdentityKeyPair::sign(ByteView message) const {
    Bytes sig(crypto_sign_ed25519_BYTES);
    crypto_sign_ed25519_detached(sig.data(), nullptr, message.data(), message.size(),
                                 secret_.data());
    return Signature(Scheme::identity, std::move(sig));
}

Signature sign_identity(const IdentityKeyPair& key, ByteView message) { return key.sign(message); }

bool verify_identity(const IdentityPublicKey& key, ByteView message, const Signature& sig) {
    if (sig.scheme() != Scheme::identity) {
        throw Error(Errc::malformed, "expected an identity-scheme signature");
    }
    ensure_sodium();
    return crypto_sign_ed25519_verify_detached(sig.bytes().data(), message.data(), message.size(),
                                               key.bytes.data()) == 0;
}

}  // namespace medsim::crypto
