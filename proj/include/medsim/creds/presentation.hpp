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
#include <vector>

#include "medsim/creds/credential.hpp"
#include "medsim/crypto/signature.hpp"
#include "medsim/crypto/wallet_key.hpp"

namespace medsim::creds {

/// Verifiable presentation sent to a connector:
///
///   header  {alg: EdDSA, typ: JWT, kid: <holder DID>#identity-key, nonce}
///   payload {iss: <holder DID>,
///            vp: {type: "VerifiablePresentation", VerifiableCredential: [jwt]},
///            walletSignature: <hex σ_a over the nonce>}
///
/// The envelope is signed with the holder's identity key.
struct Presentation {
    std::string kid;
    std::string nonce;
    std::string holder;
    std::vector<std::string> credentials;
    crypto::Signature wallet_signature{crypto::Scheme::wallet, Bytes(crypto::Signature::kWalletSize)};
    Jws envelope;

    /// Throws Errc::malformed for anything but the exact layout above with
    /// a non-empty credential list.
    static Presentation parse(std::string_view jwt);
};

std::string build_presentation(const vdr::Did& holder, const crypto::IdentityKeyPair& identity,
                               const crypto::WalletKeyPair& wallet, std::string_view nonce_hex,
                               const std::string& credential_jwt);

/// σ over a challenge: both key domains sign the ASCII nonce hex.
crypto::Signature sign_challenge(const crypto::IdentityKeyPair& key, std::string_view nonce_hex);
crypto::Signature sign_challenge(const crypto::WalletKeyPair& key, std::string_view nonce_hex);

/// Join request answering an issuer challenge: σ_id by the identity key and
/// σ_w by the wallet key over the same nonce.
struct CredentialRequest {
    vdr::Did did;
    std::string nonce;
    crypto::Signature sigma_id{crypto::Scheme::identity, Bytes(crypto::Signature::kIdentitySize)};
    crypto::Signature sigma_w{crypto::Scheme::wallet, Bytes(crypto::Signature::kWalletSize)};

    Json to_json() const;
    /// Throws Errc::malformed.
    static CredentialRequest from_json(const Json& j);
};

CredentialRequest make_credential_request(const vdr::Did& did, std::string_view nonce_hex,
                                          const crypto::IdentityKeyPair& identity,
                                          const crypto::WalletKeyPair& wallet);

}  // namespace medsim::creds
