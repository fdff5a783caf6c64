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
#include <shared_mutex>
#include <string>
#include <string_view>

#include "medsim/common/bytes.hpp"

namespace medsim::dds {

/// Content identifier: SHA-256 of the stored bytes, displayed as
/// "sha256-<hex>".
class Cid {
public:
    Cid() = default;
    explicit Cid(const Hash32& digest) : digest_(digest) {}

    static Cid of(ByteView content);
    /// Throws Errc::malformed.
    static Cid parse(std::string_view text);

    const Hash32& digest() const { return digest_; }
    std::string str() const;

    auto operator<=>(const Cid&) const = default;

private:
    Hash32 digest_{};
};

/// Write-once content-addressed blob store.
class Store {
public:
    /// Idempotent. Throws Errc::invalid_argument for empty content.
    Cid put(ByteView content);

    /// Re-hashes the blob on every read; throws Errc::not_found for unknown
    /// ids and Errc::internal if the stored bytes no longer match.
    Bytes get(const Cid& cid) const;

    bool contains(const Cid& cid) const;
    std::size_t size() const;

private:
    mutable std::shared_mutex mu_;
    std::map<Cid, Bytes> blobs_;
};

}  // namespace medsim::dds
