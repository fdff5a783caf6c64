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

#include <string>
#include <string_view>

namespace medsim {

/// Native and access-token quantities in base units.
using Amount = unsigned __int128;

/// 10^18 base units make one display token (native or AT).
inline constexpr Amount kWholeToken = static_cast<Amount>(1'000'000'000'000'000'000ULL);

std::string amount_to_string(Amount value);

/// Decimal digits only; throws Errc::malformed on junk or overflow.
Amount parse_amount(std::string_view text);

/// "2", "2.5", "0.000000000000000001" in whole tokens -> base units.
/// At most 18 fractional digits. Throws Errc::malformed.
Amount parse_tokens(std::string_view text);
/// Inverse of parse_tokens with trailing fractional zeros trimmed.
std::string format_tokens(Amount value);

/// Throws Errc::invalid_argument on overflow.
Amount checked_add(Amount a, Amount b);

}  // namespace medsim
