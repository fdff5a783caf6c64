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

#include <filesystem>
#include <optional>
#include <string>

#include "medsim/common/entropy.hpp"
#include "medsim/crypto/identity_key.hpp"
#include "medsim/crypto/wallet_key.hpp"
#include "medsim/vdr/did.hpp"

namespace medsim::wallet {

inline constexpr int kKeystoreVersion = 1;

/// Everything a member keeps locally.
struct Identity {
    crypto::IdentityKeyPair identity;
    crypto::WalletKeyPair wallet;
    vdr::DidDocument document;
    std::optional<std::string> credential;  // VC JWT once joined

    static Identity generate(Entropy& entropy);
    const vdr::Did& did() const { return document.id(); }
};

struct KdfParams {
    unsigned long long opslimit;
    std::size_t memlimit;

    static KdfParams interactive();
    /// Library minimum; for tests only.
    static KdfParams minimal();
};

/// Versioned JSON keystore. Secrets and the credential are sealed with
/// XChaCha20-Poly1305 under an Argon2id key; only the DID and EOA are in
/// the clear.
std::string seal_keystore(const Identity& id, std::string_view passphrase, Entropy& entropy,
                          KdfParams kdf = KdfParams::interactive());

/// Errors: malformed (layout or version), unauthorized (wrong passphrase
/// or tampered file).
Identity open_keystore(std::string_view text, std::string_view passphrase);

/// Writes atomically with owner-only permissions.
void save_keystore(const std::filesystem::path& path, const Identity& id, std::string_view passphrase,
                   Entropy& entropy, KdfParams kdf = KdfParams::interactive());
/// Errors: not_found, plus those of open_keystore.
Identity load_keystore(const std::filesystem::path& path, std::string_view passphrase);

}  // namespace medsim::wallet
