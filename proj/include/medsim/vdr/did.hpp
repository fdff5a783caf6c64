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

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "medsim/common/address.hpp"
#include "medsim/common/json.hpp"
#include "medsim/crypto/identity_key.hpp"

namespace medsim::vdr {

inline constexpr std::string_view kMethodName = "medsim";

/// did:<method-name>:<method-specific-id>
class Did {
public:
    Did() = default;
    Did(std::string method, std::string specific_id);

    /// Throws Errc::malformed unless the text has exactly the three-part form
    /// with non-empty components.
    static Did parse(std::string_view text);

    const std::string& method() const { return method_; }
    const std::string& specific_id() const { return specific_id_; }
    std::string str() const { return "did:" + method_ + ":" + specific_id_; }

    auto operator<=>(const Did&) const = default;

private:
    std::string method_;
    std::string specific_id_;
};

/// Splits "did:...#fragment" into the DID and the fragment.
std::pair<Did, std::string> split_did_url(std::string_view did_url);

enum class MethodType { json_web_key, ecdsa_secp256k1_recovery };

std::string_view method_type_name(MethodType type);

struct VerificationMethod {
    std::string fragment;  // without '#'
    MethodType type = MethodType::json_web_key;
    std::variant<crypto::IdentityPublicKey, Eoa> material;

    bool operator==(const VerificationMethod&) const = default;
};

inline constexpr std::string_view kIdentityKeyFragment = "identity-key";
inline constexpr std::string_view kWalletFragment = "wallet";

class DidDocument {
public:
    DidDocument() = default;
    DidDocument(Did id, std::vector<VerificationMethod> methods)
        : id_(std::move(id)), methods_(std::move(methods)) {}

    /// Builds an ecosystem-member document (one JsonWebKey holding the
    /// identity key, one EcdsaSecp256k1RecoveryMethod2020 holding the EOA)
    /// and derives its id from the document content.
    static DidDocument for_member(const crypto::IdentityPublicKey& identity, const Eoa& eoa);

    const Did& id() const { return id_; }
    const std::vector<VerificationMethod>& methods() const { return methods_; }

    /// First JsonWebKey / EcdsaSecp256k1RecoveryMethod2020 method, if any.
    std::optional<crypto::IdentityPublicKey> identity_key() const;
    std::optional<Eoa> wallet_eoa() const;
    const VerificationMethod* find_method(std::string_view fragment) const;

    /// Exactly one method of each type. Throws Errc::malformed otherwise.
    void validate_member_shape() const;

    /// Derived method-specific id: base58(SHA-256(canonical form with an
    /// empty method-specific id)).
    std::string derive_specific_id() const;
    bool id_matches_content() const { return derive_specific_id() == id_.specific_id(); }

    Json to_json() const;
    static DidDocument from_json(const Json& j);

    bool operator==(const DidDocument&) const = default;

private:
    Did id_;
    std::vector<VerificationMethod> methods_;
};

}  // namespace medsim::vdr
