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

#include "medsim/creds/jws.hpp"

#include "medsim/common/error.hpp"

namespace medsim::creds {

namespace {

std::string encode_segment(const Json& j) { return base64url_encode(as_bytes(canonical(j))); }

Json decode_segment(std::string_view seg, std::string_view what) {
    Bytes raw;
    try {
        raw = base64url_decode(seg);
    } catch (const Error&) {
        throw Error(Errc::malformed, std::string(what) + " is not base64url");
    }
    Json j;
    try {
        j = parse_json(to_string(raw));
    } catch (const Error&) {
        throw Error(Errc::malformed, std::string(what) + " is not JSON");
    }
    if (!j.is_object()) throw Error(Errc::malformed, std::string(what) + " must be a JSON object");
    return j;
}

}  // namespace

Jws Jws::parse(std::string_view compact) {
    auto first = compact.find('.');
    auto second = first == std::string_view::npos ? first : compact.find('.', first + 1);
    if (second == std::string_view::npos || compact.find('.', second + 1) != std::string_view::npos) {
        throw Error(Errc::malformed, "compact JWS needs exactly three segments");
    }
    Jws jws;
    jws.header = decode_segment(compact.substr(0, first), "JWS header");
    jws.payload = decode_segment(compact.substr(first + 1, second - first - 1), "JWS payload");
    jws.signing_input = std::string(compact.substr(0, second));
    try {
        jws.signature = base64url_decode(compact.substr(second + 1));
    } catch (const Error&) {
        throw Error(Errc::malformed, "JWS signature is not base64url");
    }
    if (jws.signature.size() != crypto::Signature::kIdentitySize) {
        throw Error(Errc::malformed, "JWS signature must be 64 bytes");
    }
    return jws;
}

bool Jws::verify(const crypto::IdentityPublicKey& key) const {
    auto alg = header.find("alg");
    if (alg == header.end() || *alg != kAlgorithm) return false;
    return crypto::verify_identity(key, as_bytes(signing_input),
                                   crypto::Signature(crypto::Scheme::identity, signature));
}

std::string sign_jws(const Json& header, const Json& payload, const crypto::IdentityKeyPair& key) {
    std::string input = encode_segment(header) + "." + encode_segment(payload);
    crypto::Signature sig = key.sign(as_bytes(input));
    return input + "." + base64url_encode(sig.bytes());
}

}  // namespace medsim::creds
