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

#include "medsim/issuer/issuer.hpp"

#include "medsim/common/error.hpp"

namespace medsim::issuer {

Issuer::Issuer(vdr::Registry& registry, scp::Chain& chain, contracts::ProtocolAddresses addresses,
               const Clock& clock, Entropy& entropy, crypto::IdentityKeyPair identity,
               crypto::WalletKeyPair admin, IssuerConfig config)
    : registry_(registry),
      chain_(chain),
      addresses_(addresses),
      clock_(clock),
      entropy_(entropy),
      identity_(std::move(identity)),
      admin_(std::move(admin)),
      config_(config),
      document_(vdr::DidDocument::for_member(identity_.public_key(), admin_.eoa())),
      did_(document_.id()),
      challenges_(clock, entropy) {
    try {
        registry_.create(document_);
    } catch (const Error& e) {
        // A restarted issuer with the same keys finds its document in place.
        if (e.code() != Errc::duplicate) throw;
    }
}

vdr::Resolution Issuer::resolve_active(const vdr::Did& did) const {
    vdr::Resolution res = registry_.resolve(did);
    if (res.deactivated) throw Error(Errc::deactivated, "DID is deactivated: " + did.str());
    return res;
}

crypto::Challenge Issuer::challenge(std::string_view did_text) {
    vdr::Did did = vdr::Did::parse(did_text);
    resolve_active(did);
    return challenges_.issue(did.str(), config_.challenge_ttl);
}

scp::Receipt Issuer::submit(std::string method, Json args) {
    scp::Transaction tx;
    tx.from = admin_.eoa();
    tx.to = addresses_.identity;
    tx.method = std::move(method);
    tx.args = std::move(args);
    tx.nonce = chain_.nonce(tx.from);
    tx.sign(admin_);
    return chain_.submit(tx);
}

creds::VerifiableCredential Issuer::issue(const creds::CredentialRequest& request) {
    std::lock_guard lock(mu_);
    // The challenge is spent even if a later check fails.
    challenges_.consume(request.nonce, request.did.str());

    vdr::Resolution res = resolve_active(request.did);
    const vdr::DidDocument& doc = res.document;
    doc.validate_member_shape();
    const crypto::IdentityPublicKey identity_key = *doc.identity_key();
    const Eoa eoa = *doc.wallet_eoa();

    bool id_ok = false;
    bool wallet_ok = false;
    try {
        id_ok = crypto::verify_identity(identity_key, as_bytes(request.nonce), request.sigma_id);
        wallet_ok = crypto::verify_wallet(eoa, as_bytes(request.nonce), request.sigma_w);
    } catch (const Error&) {
    }
    if (!id_ok) throw Error(Errc::bad_signature, "identity signature does not verify under the DID key");
    if (!wallet_ok) throw Error(Errc::bad_signature, "wallet signature does not recover to the DID document EOA");

    creds::VerifiableCredential vc;
    vc.id = "urn:vc:medsim:" + random_uuid(entropy_);
    vc.issuer = did_;
    vc.subject = request.did;
    vc.issuance_date = clock_.now();
    vc.expiration_date = vc.issuance_date + config_.credential_lifetime;
    vc.eoa = eoa;

    scp::Receipt receipt = submit("addUser", {{"vc_id", vc.id},
                                              {"eoa", eoa.str()},
                                              {"issuance", vc.issuance_date},
                                              {"expiration", vc.expiration_date}});
    if (!receipt.ok()) {
        Errc code = receipt.error.rfind("DUPLICATE_EOA", 0) == 0 ? Errc::duplicate : Errc::reverted;
        throw Error(code, "identity registration reverted: " + receipt.error);
    }
    issued_.insert(vc.id);
    return creds::sign_credential(std::move(vc), identity_);
}

void Issuer::revoke(std::string_view vc_id) {
    std::lock_guard lock(mu_);
    if (!issued_.contains(vc_id)) {
        throw Error(Errc::not_found, "credential not issued here: " + std::string(vc_id));
    }
    scp::Receipt receipt = submit("revoke", {{"vc_id", std::string(vc_id)}});
    if (!receipt.ok()) throw Error(Errc::reverted, "revocation reverted: " + receipt.error);
}

std::size_t Issuer::issued_count() const {
    std::lock_guard lock(mu_);
    return issued_.size();
}

}  // namespace medsim::issuer
