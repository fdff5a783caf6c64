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

#include <map>
#include <mutex>
#include <set>
#include <string>

#include "medsim/common/clock.hpp"
#include "medsim/common/entropy.hpp"
#include "medsim/contracts/protocol.hpp"
#include "medsim/creds/credential.hpp"
#include "medsim/creds/presentation.hpp"
#include "medsim/crypto/challenge.hpp"
#include "medsim/scp/chain.hpp"
#include "medsim/vdr/registry.hpp"

namespace medsim::issuer {

struct IssuerConfig {
    std::int64_t credential_lifetime = creds::kDefaultCredentialLifetime;
    std::int64_t challenge_ttl = crypto::kDefaultChallengeTtl;
};

/// Joining service. Owns the issuer identity key and the admin wallet that
/// controls the Identity contract.
///
/// issue() releases a credential only after the on-chain binding has been
/// committed; a reverted addUser means no credential.
class Issuer {
public:
    /// Publishes the issuer DID document to `registry`.
    Issuer(vdr::Registry& registry, scp::Chain& chain, contracts::ProtocolAddresses addresses,
           const Clock& clock, Entropy& entropy, crypto::IdentityKeyPair identity,
           crypto::WalletKeyPair admin, IssuerConfig config = {});

    const vdr::Did& did() const { return did_; }
    const vdr::DidDocument& document() const { return document_; }
    Eoa admin_eoa() const { return admin_.eoa(); }

    /// Errors: malformed (bad DID), not_found (unresolvable), deactivated.
    crypto::Challenge challenge(std::string_view did);

    /// Errors: not_found / replay / expired / mismatch (challenge),
    /// not_found / deactivated (DID), malformed (document shape),
    /// bad_signature (σ_id or σ_w), duplicate (EOA already bound),
    /// reverted (any other on-chain failure).
    creds::VerifiableCredential issue(const creds::CredentialRequest& request);

    /// Idempotent. Errors: not_found (not issued here), reverted.
    void revoke(std::string_view vc_id);

    std::size_t issued_count() const;

private:
    vdr::Resolution resolve_active(const vdr::Did& did) const;
    scp::Receipt submit(std::string method, Json args);

    vdr::Registry& registry_;
    scp::Chain& chain_;
    contracts::ProtocolAddresses addresses_;
    const Clock& clock_;
    Entropy& entropy_;
    crypto::IdentityKeyPair identity_;
    crypto::WalletKeyPair admin_;
    IssuerConfig config_;
    vdr::DidDocument document_;
    vdr::Did did_;
    crypto::ChallengeStore challenges_;

    mutable std::mutex mu_;  // serializes issuance and revocation
    std::set<std::string, std::less<>> issued_;
};

}  // namespace medsim::issuer
