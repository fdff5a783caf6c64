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

#include <algorithm>
#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace medsim {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;
using Hash32 = std::array<std::uint8_t, 32>;

inline ByteView as_bytes(std::string_view s) {
    return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()};
}

inline Bytes to_bytes(std::string_view s) {
    auto v = as_bytes(s);
    return {v.begin(), v.end()};
}

inline std::string to_string(ByteView b) {
    return {reinterpret_cast<const char*>(b.data()), b.size()};
}

/// Lowercase hex, no prefix.
std::string to_hex(ByteView data);

/// Accepts an optional 0x prefix and either case. Throws Errc::malformed.
Bytes from_hex(std::string_view hex);

[[noreturn]] void throw_length_mismatch(std::size_t want, std::size_t got);

/// Decodes exactly N bytes or throws Errc::malformed.
template <std::size_t N>
std::array<std::uint8_t, N> fixed_from_hex(std::string_view hex) {
    Bytes raw = from_hex(hex);
    std::array<std::uint8_t, N> out{};
    if (raw.size() != N) {
        throw_length_mismatch(N, raw.size());
    }
    std::copy(raw.begin(), raw.end(), out.begin());
    return out;
}

/// RFC 4648 section 5 alphabet without padding (JWS compact form).
std::string base64url_encode(ByteView data);
Bytes base64url_decode(std::string_view text);

/// Bitcoin alphabet.
std::string base58_encode(ByteView data);

}  // namespace medsim
