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

#include "medsim/vdr/registry.hpp"

#include <mutex>

#include "medsim/common/error.hpp"

namespace medsim::vdr {

std::string update_proof_message(const Did& did, std::size_t version, const DidDocument& next) {
    return "medsim-vdr:update:" + did.str() + ":" + std::to_string(version) + ":" +
           canonical(next.to_json());
}

std::string deactivate_proof_message(const Did& did, std::size_t version) {
    return "medsim-vdr:deactivate:" + did.str() + ":" + std::to_string(version);
}

Did Registry::create(const DidDocument& doc) {
    if (doc.id().method() != kMethodName) {
        throw Error(Errc::malformed, "unsupported DID method '" + doc.id().method() + "'");
    }
    doc.validate_member_shape();
    if (!doc.id_matches_content()) {
        throw Error(Errc::malformed, "method-specific id does not match the document content");
    }
    std::unique_lock lock(mu_);
    auto [it, inserted] = records_.try_emplace(doc.id());
    if (!inserted) {
        throw Error(Errc::duplicate, "DID already registered: " + doc.id().str());
    }
    it->second.versions.push_back(doc);
    return doc.id();
}

Resolution Registry::resolve(const Did& did) const {
    std::shared_lock lock(mu_);
    auto it = records_.find(did);
    if (it == records_.end()) {
        throw Error(Errc::not_found, "unknown DID: " + did.str());
    }
    return {it->second.versions.back(), it->second.deactivated, it->second.versions.size()};
}

Registry::Record& Registry::authorise(const Did& did, std::string_view message,
                                      const crypto::Signature& proof) {
    auto it = records_.find(did);
    if (it == records_.end()) {
        throw Error(Errc::not_found, "unknown DID: " + did.str());
    }
    if (it->second.deactivated) {
        throw Error(Errc::deactivated, "DID is deactivated: " + did.str());
    }
    auto key = it->second.versions.back().identity_key();
    if (!key || proof.scheme() != crypto::Scheme::identity ||
        !crypto::verify_identity(*key, as_bytes(message), proof)) {
        throw Error(Errc::bad_signature, "proof is not signed by the current identity key");
    }
    return it->second;
}

void Registry::update(const Did& did, const DidDocument& next, const crypto::Signature& proof) {
    if (next.id() != did) {
        throw Error(Errc::malformed, "updated document must keep its id");
    }
    next.validate_member_shape();
    std::unique_lock lock(mu_);
    auto it = records_.find(did);
    std::size_t version = it == records_.end() ? 0 : it->second.versions.size();
    Record& rec = authorise(did, update_proof_message(did, version, next), proof);
    rec.versions.push_back(next);
}

void Registry::deactivate(const Did& did, const crypto::Signature& proof) {
    std::unique_lock lock(mu_);
    auto it = records_.find(did);
    std::size_t version = it == records_.end() ? 0 : it->second.versions.size();
    Record& rec = authorise(did, deactivate_proof_message(did, version), proof);
    rec.deactivated = true;
}

std::vector<DidDocument> Registry::history(const Did& did) const {
    std::shared_lock lock(mu_);
    auto it = records_.find(did);
    if (it == records_.end()) {
        throw Error(Errc::not_found, "unknown DID: " + did.str());
    }
    return it->second.versions;
}

std::size_t Registry::size() const {
    std::shared_lock lock(mu_);
    return records_.size();
}

}  // namespace medsim::vdr
