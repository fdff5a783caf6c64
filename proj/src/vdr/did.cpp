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

#include "medsim/vdr/did.hpp"

#include <algorithm>
#include <cctype>

#include "medsim/common/error.hpp"
#include "medsim/crypto/hash.hpp"

namespace medsim::vdr {
namespace {

bool valid_component(std::string_view s, bool allow_colon) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [&](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '-' || c == '_' ||
               (allow_colon && c == ':');
    });
}

}  // namespace

Did::Did(std::string method, std::string specific_id)
    : method_(std::move(method)), specific_id_(std::move(specific_id)) {}

Did Did::parse(std::string_view text) {
    if (!text.starts_with("did:")) {
        throw Error(Errc::malformed, "DID must start with 'did:'");
    }
    text.remove_prefix(4);
    auto colon = text.find(':');
    if (colon == std::string_view::npos) {
        throw Error(Errc::malformed, "DID is missing the method-specific id");
    }
    auto method = text.substr(0, colon);
    auto specific = text.substr(colon + 1);
    if (!valid_component(method, false) || !valid_component(specific, true)) {
        throw Error(Errc::malformed, "invalid DID syntax");
    }
    return Did(std::string(method), std::string(specific));
}

std::pair<Did, std::string> split_did_url(std::string_view did_url) {
    auto hash = did_url.find('#');
    if (hash == std::string_view::npos || hash + 1 == did_url.size()) {
        throw Error(Errc::malformed, "DID URL must carry a #fragment");
    }
    return {Did::parse(did_url.substr(0, hash)), std::string(did_url.substr(hash + 1))};
}

std::string_view method_type_name(MethodType type) {
    switch (type) {
    case MethodType::json_web_key: return "JsonWebKey";
    case MethodType::ecdsa_secp256k1_recovery: return "EcdsaSecp256k1RecoveryMethod2020";
    }
    return "";
}

DidDocument DidDocument::for_member(const crypto::IdentityPublicKey& identity, const Eoa& eoa) {
    DidDocument doc(Did(std::string(kMethodName), ""),
                    {
                        {std::string(kIdentityKeyFragment), MethodType::json_web_key, identity},
                        {std::string(kWalletFragment), MethodType::ecdsa_secp256k1_recovery, eoa},
                    });
    doc.id_ = Did(std::string(kMethodName), doc.derive_specific_id());
    return doc;
}

std::optional<crypto::IdentityPublicKey> DidDocument::identity_key() const {
    for (const auto& m : methods_) {
        if (m.type == MethodType::json_web_key) {
            return std::get<crypto::IdentityPublicKey>(m.material);
        }
    }
    return std::nullopt;
}

std::optional<Eoa> DidDocument::wallet_eoa() const {
    for (const auto& m : methods_) {
        if (m.type == MethodType::ecdsa_secp256k1_recovery) {
            return std::get<Eoa>(m.material);
        }
    }
    return std::nullopt;
}

const VerificationMethod* DidDocument::find_method(std::string_view fragment) const {
    for (const auto& m : methods_) {
        if (m.fragment == fragment) {
            return &m;
        }
    }
    return nullptr;
}

void DidDocument::validate_member_shape() const {
    auto count = [&](MethodType t) {
        return std::count_if(methods_.begin(), methods_.end(),
                             [&](const auto& m) { return m.type == t; });
    };
    if (count(MethodType::json_web_key) != 1 || count(MethodType::ecdsa_secp256k1_recovery) != 1) {
        throw Error(Errc::malformed,
                    "member DID document needs exactly one JsonWebKey and one "
                    "EcdsaSecp256k1RecoveryMethod2020 verification method");
    }
}

std::string DidDocument::derive_specific_id() const {
    DidDocument tmpl(Did(id_.method(), ""), methods_);
    return base58_encode(crypto::sha256(as_bytes(canonical(tmpl.to_json()))));
}

Json DidDocument::to_json() const {
    const std::string did = id_.str();
    Json methods = Json::array();
    for (const auto& m : methods_) {
        Json entry = {
            {"id", did + "#" + m.fragment},
            {"type", method_type_name(m.type)},
            {"controller", did},
        };
        if (m.type == MethodType::json_web_key) {
            entry["publicKeyJwk"] = {
                {"kty", "OKP"},
                {"crv", "Ed25519"},
                {"x", std::get<crypto::IdentityPublicKey>(m.material).jwk_x()},
            };
        } else {
            entry["blockchainAccountId"] = std::get<Eoa>(m.material).str();
        }
        methods.push_back(std::move(entry));
    }
    return Json{
        {"@context", Json::array({"https://www.w3.org/ns/did/v1"})},
        {"id", did},
        {"verificationMethod", std::move(methods)},
    };
}

DidDocument DidDocument::from_json(const Json& j) {
    Did id = Did::parse(require_string(j, "id"));
    const Json& list = require_field(j, "verificationMethod");
    if (!list.is_array()) {
        throw Error(Errc::malformed, "verificationMethod must be an array");
    }
    std::vector<VerificationMethod> methods;
    for (const auto& entry : list) {
        auto [owner, fragment] = split_did_url(require_string(entry, "id"));
        if (owner != id || require_string(entry, "controller") != id.str()) {
            throw Error(Errc::malformed, "verification method belongs to another DID");
        }
        std::string type = require_string(entry, "type");
        if (type == method_type_name(MethodType::json_web_key)) {
            const Json& jwk = require_field(entry, "publicKeyJwk");
            if (require_string(jwk, "kty") != "OKP" || require_string(jwk, "crv") != "Ed25519") {
                throw Error(Errc::malformed, "only Ed25519 OKP keys are supported");
            }
            methods.push_back({fragment, MethodType::json_web_key,
                               crypto::IdentityPublicKey::from_jwk_x(require_string(jwk, "x"))});
        } else if (type == method_type_name(MethodType::ecdsa_secp256k1_recovery)) {
            methods.push_back({fragment, MethodType::ecdsa_secp256k1_recovery,
                               Address::parse(require_string(entry, "blockchainAccountId"))});
        } else {
            throw Error(Errc::malformed, "unsupported verification method type '" + type + "'");
        }
    }
    return DidDocument(std::move(id), std::move(methods));
}

}  // namespace medsim::vdr
