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

#include <cstdint>
#include <string>

#include "medsim/common/address.hpp"
#include "medsim/creds/jws.hpp"
#include "medsim/vdr/did.hpp"

namespace medsim::creds {

inline constexpr std::int64_t kDefaultCredentialLifetime = 365LL * 24 * 3600;

/// Membership credential binding a subject DID to its wallet EOA. Carried
/// as an EdDSA-signed JWT; `jwt` is the exact envelope the issuer produced.
struct VerifiableCredential {
    std::string id;
    vdr::Did issuer;
    vdr::Did subject;
    std::int64_t issuance_date = 0;
    std::int64_t expiration_date = 0;
    Eoa eoa;
    std::string jwt;

    /// JWT claims: iss, sub, jti, nbf, exp plus the W3C "vc" object.
    Json claims() const;

    /// Decodes the envelope without checking its signature. Throws
    /// Errc::malformed when required claims are missing or inconsistent.
    static VerifiableCredential from_jwt(std::string_view jwt);

    /// Signature under the issuer key, with alg and kid checked.
    bool verify_signature(const crypto::IdentityPublicKey& issuer_key) const;
    bool valid_at(std::int64_t now) const { return issuance_date <= now && now <= expiration_date; }
};

/// Signs the credential as the issuer and fills in `jwt`.
VerifiableCredential sign_credential(VerifiableCredential vc, const crypto::IdentityKeyPair& issuer_key);

}  // namespace medsim::creds
