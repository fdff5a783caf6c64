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

#include "medsim/dds/store.hpp"

#include <mutex>

#include "medsim/common/error.hpp"
#include "medsim/crypto/hash.hpp"

namespace medsim::dds {

namespace {
constexpr std::string_view kPrefix = "sha256-";
}

Cid Cid::of(ByteView content) { return Cid(crypto::sha256(content)); }

Cid Cid::parse(std::string_view text) {
    if (!text.starts_with(kPrefix) || text.size() != kPrefix.size() + 64) {
        throw Error(Errc::malformed, "CID must be 'sha256-' followed by 64 hex digits");
    }
    return Cid(fixed_from_hex<32>(text.substr(kPrefix.size())));
}

std::string Cid::str() const { return std::string(kPrefix) + to_hex(digest_); }

Cid Store::put(ByteView content) {
    if (content.empty()) {
        throw Error(Errc::invalid_argument, "refusing to store empty content");
    }
    Cid cid = Cid::of(content);
    std::unique_lock lock(mu_);
    blobs_.try_emplace(cid, content.begin(), content.end());
    return cid;
}

Bytes Store::get(const Cid& cid) const {
    std::shared_lock lock(mu_);
    auto it = blobs_.find(cid);
    if (it == blobs_.end()) {
        throw Error(Errc::not_found, "unknown CID: " + cid.str());
    }
    if (Cid::of(it->second) != cid) {
        throw Error(Errc::internal, "stored content no longer matches " + cid.str());
    }
    return it->second;
}

bool Store::contains(const Cid& cid) const {
    std::shared_lock lock(mu_);
    return blobs_.contains(cid);
}

std::size_t Store::size() const {
    std::shared_lock lock(mu_);
    return blobs_.size();
}

}  // namespace medsim::dds
