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

#include "medsim/creds/credential.hpp"

#include "medsim/common/clock.hpp"
#include "medsim/common/error.hpp"

namespace medsim::creds {

namespace {

std::string issuer_kid(const vdr::Did& issuer) {
    return issuer.str() + "#" + std::string(vdr::kIdentityKeyFragment);
}

}  // namespace

Json VerifiableCredential::claims() const {
    Json vc{{"@context", Json::array({"https://www.w3.org/2018/credentials/v1"})},
            {"type", Json::array({"VerifiableCredential", "MembershipCredential"})},
            {"id", id},
            {"issuer", issuer.str()},
            {"issuanceDate", format_utc(issuance_date)},
            {"expirationDate", format_utc(expiration_date)},
            {"credentialSubject", {{"id", subject.str()}, {"eoa", eoa.str()}}}};
    return Json{{"iss", issuer.str()},
                {"sub", subject.str()},
                {"jti", id},
                {"nbf", issuance_date},
                {"exp", expiration_date},
                {"vc", std::move(vc)}};
}

VerifiableCredential VerifiableCredential::from_jwt(std::string_view jwt) {
    Jws jws = Jws::parse(jwt);
    const Json& p = jws.payload;
    VerifiableCredential vc;
    vc.id = require_string(p, "jti");
    vc.issuer = vdr::Did::parse(require_string(p, "iss"));
    vc.subject = vdr::Did::parse(require_string(p, "sub"));
    vc.issuance_date = require_int(p, "nbf");
    vc.expiration_date = require_int(p, "exp");
    const Json& inner = require_field(p, "vc");
    const Json& subject = require_field(inner, "credentialSubject");
    vc.eoa = Address::parse(require_string(subject, "eoa"));
    if (require_string(inner, "id") != vc.id || require_string(inner, "issuer") != vc.issuer.str() ||
        require_string(subject, "id") != vc.subject.str()) {
        throw Error(Errc::malformed, "credential claims disagree with the JWT registered claims");
    }
    vc.jwt = std::string(jwt);
    return vc;
}

bool VerifiableCredential::verify_signature(const crypto::IdentityPublicKey& issuer_key) const {
    Jws jws;
    try {
        jws = Jws::parse(jwt);
    } catch (const Error&) {
        return false;
    }
    auto kid = jws.header.find("kid");
    if (kid == jws.header.end() || *kid != issuer_kid(issuer)) return false;
    return jws.verify(issuer_key);
}

VerifiableCredential sign_credential(VerifiableCredential vc, const crypto::IdentityKeyPair& issuer_key) {
    Json header{{"alg", kAlgorithm}, {"typ", "JWT"}, {"kid", issuer_kid(vc.issuer)}};
    vc.jwt = sign_jws(header, vc.claims(), issuer_key);
    return vc;
}

}  // namespace medsim::creds
