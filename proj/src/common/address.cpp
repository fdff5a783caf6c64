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

#include "medsim/common/address.hpp"

#include <algorithm>

#include "medsim/common/error.hpp"

namespace medsim {

Address Address::parse(std::string_view text) {
    if (text.size() != 2 + 2 * kSize || !(text.starts_with("0x") || text.starts_with("0X"))) {
        throw Error(Errc::malformed, "address must be 0x followed by 40 hex digits");
    }
    return Address(fixed_from_hex<kSize>(text));
}

Address Address::from_digest(const Hash32& digest) {
    std::array<std::uint8_t, kSize> raw{};
    std::copy(digest.end() - kSize, digest.end(), raw.begin());
    return Address(raw);
}

std::string Address::str() const { return "0x" + to_hex(raw_); }

bool Address::is_zero() const {
    return std::all_of(raw_.begin(), raw_.end(), [](auto b) { return b == 0; });
}

}  // namespace medsim
