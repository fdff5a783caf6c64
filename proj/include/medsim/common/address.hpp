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

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "medsim/common/bytes.hpp"

namespace medsim {

/// 20-byte account identifier shared by externally owned accounts and
/// contracts. Display form is 0x-prefixed lowercase hex (42 chars).
class Address {
public:
    static constexpr std::size_t kSize = 20;

    Address() = default;
    explicit Address(const std::array<std::uint8_t, kSize>& raw) : raw_(raw) {}

    static Address parse(std::string_view text);
    /// Last 20 bytes of a 32-byte digest.
    static Address from_digest(const Hash32& digest);

    const std::array<std::uint8_t, kSize>& raw() const { return raw_; }
    std::string str() const;
    bool is_zero() const;

    auto operator<=>(const Address&) const = default;

private:
    std::array<std::uint8_t, kSize> raw_{};
};

using Eoa = Address;

}  // namespace medsim
