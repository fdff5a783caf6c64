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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "medsim/common/bytes.hpp"

namespace medsim::crypto {

enum class Scheme { identity, wallet };

/// Detached signature in one of the two key domains.
///
/// identity: 64-byte Ed25519 signature.
/// wallet:   65 bytes r || s || v with v = 27 + recovery id.
class Signature {
public:
    static constexpr std::size_t kIdentitySize = 64;
    static constexpr std::size_t kWalletSize = 65;

    /// Validates the length for the scheme; throws Errc::malformed.
    Signature(Scheme scheme, Bytes bytes);

    static Signature from_hex(Scheme scheme, std::string_view hex);

    Scheme scheme() const { return scheme_; }
    const Bytes& bytes() const { return bytes_; }
    std::optional<int> recovery_id() const;
    std::string hex() const;

    bool operator==(const Signature&) const = default;

private:
    Scheme scheme_;
    Bytes bytes_;
};

}  // namespace medsim::crypto
