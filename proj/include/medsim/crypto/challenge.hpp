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
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "medsim/common/clock.hpp"
#include "medsim/common/entropy.hpp"
#include "medsim/common/json.hpp"

namespace medsim::crypto {

inline constexpr std::int64_t kDefaultChallengeTtl = 300;

struct Challenge {
    std::array<std::uint8_t, 32> nonce{};
    std::int64_t issued_at = 0;
    std::int64_t ttl = 0;
    std::string audience;

    /// 64 lowercase hex characters; this string is what holders sign.
    std::string nonce_hex() const;
    bool expired_at(std::int64_t now) const { return now > issued_at + ttl; }

    Json to_json() const;
    static Challenge from_json(const Json& j);
};

/// Single-use challenge registry. consume() is atomic: a nonce is handed
/// out successfully at most once.
class ChallengeStore {
public:
    ChallengeStore(const Clock& clock, Entropy& entropy) : clock_(clock), entropy_(entropy) {}

    /// Throws Errc::invalid_argument when ttl <= 0.
    Challenge issue(std::string audience, std::int64_t ttl = kDefaultChallengeTtl);

    /// Errors: not_found (never issued), replay (already consumed), expired,
    /// mismatch (audience given and different). Mismatch does not consume.
    Challenge consume(std::string_view nonce_hex, std::optional<std::string_view> audience);

    std::size_t outstanding() const;

private:
    const Clock& clock_;
    Entropy& entropy_;
    mutable std::mutex mu_;
    std::map<std::string, Challenge, std::less<>> live_;
    std::set<std::string, std::less<>> consumed_;
};

Challenge new_challenge(ChallengeStore& store, std::string audience,
                        std::int64_t ttl = kDefaultChallengeTtl);
Challenge check_challenge(ChallengeStore& store, std::string_view nonce_hex,
                          std::string_view audience);

}  // namespace medsim::crypto
