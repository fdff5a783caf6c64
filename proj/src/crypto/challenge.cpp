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

#include "medsim/crypto/challenge.hpp"

#include "medsim/common/error.hpp"

namespace medsim::crypto {

std::string Challenge::nonce_hex() const { return to_hex(nonce); }

Json Challenge::to_json() const {
    return Json{{"nonce", nonce_hex()}, {"issued_at", issued_at}, {"ttl", ttl}, {"audience", audience}};
}

Challenge Challenge::from_json(const Json& j) {
    Challenge c;
    c.nonce = fixed_from_hex<32>(require_string(j, "nonce"));
    c.issued_at = require_int(j, "issued_at");
    c.ttl = require_int(j, "ttl");
    c.audience = require_string(j, "audience");
    return c;
}

Challenge ChallengeStore::issue(std::string audience, std::int64_t ttl) {
    if (ttl <= 0) {
        throw Error(Errc::invalid_argument, "challenge ttl must be positive");
    }
    Challenge c;
    c.issued_at = clock_.now();
    c.ttl = ttl;
    c.audience = std::move(audience);
    std::lock_guard lock(mu_);
    do {
        entropy_.fill(c.nonce);
    } while (live_.contains(c.nonce_hex()) || consumed_.contains(c.nonce_hex()));
    live_.emplace(c.nonce_hex(), c);
    return c;
}

Challenge ChallengeStore::consume(std::string_view nonce_hex,
                                  std::optional<std::string_view> audience) {
    std::lock_guard lock(mu_);
    auto it = live_.find(nonce_hex);
    if (it == live_.end()) {
        if (consumed_.contains(nonce_hex)) {
            throw Error(Errc::replay, "challenge already used");
        }
        throw Error(Errc::not_found, "unknown challenge");
    }
    if (it->second.expired_at(clock_.now())) {
        throw Error(Errc::expired, "challenge expired");
    }
    if (audience && *audience != it->second.audience) {
        throw Error(Errc::mismatch, "challenge was issued to a different audience");
    }
    Challenge c = it->second;
    consumed_.emplace(it->first);
    live_.erase(it);
    return c;
}

std::size_t ChallengeStore::outstanding() const {
    std::lock_guard lock(mu_);
    return live_.size();
}

Challenge new_challenge(ChallengeStore& store, std::string audience, std::int64_t ttl) {
    return store.issue(std::move(audience), ttl);
}

Challenge check_challenge(ChallengeStore& store, std::string_view nonce_hex,
                          std::string_view audience) {
    return store.consume(nonce_hex, audience);
}

}  // namespace medsim::crypto
