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

#include "medsim/creds/presentation.hpp"

#include "medsim/common/error.hpp"

namespace medsim::creds {

Presentation Presentation::parse(std::string_view jwt) {
    Presentation vp;
    vp.envelope = Jws::parse(jwt);
    const Json& h = vp.envelope.header;
    const Json& p = vp.envelope.payload;
    vp.kid = require_string(h, "kid");
    vp.nonce = require_string(h, "nonce");
    if (vp.nonce.size() != 64) throw Error(Errc::malformed, "nonce must be 64 hex characters");
    vp.holder = require_string(p, "iss");
    const Json& inner = require_field(p, "vp");
    if (require_string(inner, "type") != "VerifiablePresentation") {
        throw Error(Errc::malformed, "vp.type must be VerifiablePresentation");
    }
    const Json& list = require_field(inner, "VerifiableCredential");
    if (!list.is_array() || list.empty()) {
        throw Error(Errc::malformed, "VerifiableCredential must be a non-empty list");
    }
    for (const auto& c : list) {
        if (!c.is_string()) throw Error(Errc::malformed, "credentials are JWT strings");
        vp.credentials.push_back(c.get<std::string>());
    }
    vp.wallet_signature =
        crypto::Signature::from_hex(crypto::Scheme::wallet, require_string(p, "walletSignature"));
    return vp;
}

crypto::Signature sign_challenge(const crypto::IdentityKeyPair& key, std::string_view nonce_hex) {
    return key.sign(as_bytes(nonce_hex));
}

crypto::Signature sign_challenge(const crypto::WalletKeyPair& key, std::string_view nonce_hex) {
    return key.sign(as_bytes(nonce_hex));
}

std::string build_presentation(const vdr::Did& holder, const crypto::IdentityKeyPair& identity,
                               const crypto::WalletKeyPair& wallet, std::string_view nonce_hex,
                               const std::string& credential_jwt) {
    Json header{{"alg", kAlgorithm},
                {"typ", "JWT"},
                {"kid", holder.str() + "#" + std::string(vdr::kIdentityKeyFragment)},
                {"nonce", nonce_hex}};
    Json payload{{"iss", holder.str()},
                 {"vp", {{"type", "VerifiablePresentation"},
                         {"VerifiableCredential", Json::array({credential_jwt})}}},
                 {"walletSignature", sign_challenge(wallet, nonce_hex).hex()}};
    return sign_jws(header, payload, identity);
}

Json CredentialRequest::to_json() const {
    return Json{{"did", did.str()}, {"nonce", nonce}, {"sigma_id", sigma_id.hex()}, {"sigma_w", sigma_w.hex()}};
}

CredentialRequest CredentialRequest::from_json(const Json& j) {
    if (!j.is_object()) throw Error(Errc::malformed, "credential request must be an object");
    CredentialRequest r;
    r.did = vdr::Did::parse(require_string(j, "did"));
    r.nonce = require_string(j, "nonce");
    r.sigma_id = crypto::Signature::from_hex(crypto::Scheme::identity, require_string(j, "sigma_id"));
    r.sigma_w = crypto::Signature::from_hex(crypto::Scheme::wallet, require_string(j, "sigma_w"));
    return r;
}

CredentialRequest make_credential_request(const vdr::Did& did, std::string_view nonce_hex,
                                          const crypto::IdentityKeyPair& identity,
                                          const crypto::WalletKeyPair& wallet) {
    return {did, std::string(nonce_hex), sign_challenge(identity, nonce_hex), sign_challenge(wallet, nonce_hex)};
}

}  // namespace medsim::creds
