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

#include "medsim/common/entropy.hpp"


#include <cstdlib>

#include <sodium.h>

namespace medsim {

void ensure_sodium() {
    static const bool ready = [] { return sodium_init() >= 0; }();
    if (!ready) {
        std::abort();
    }
}

void SystemEntropy::fill(std::span<std::uint8_t> out) {
    ensure_sodium();
    randombytes_buf(out.data(), out.size());
}

void DeterministicEntropy::fill(std::span<std::uint8_t> out) {
    std::lock_guard lock(mu_);
    std::array<std::uint8_t, 40> block_seed{};
    std::copy(seed_.begin(), seed_.end(), block_seed.begin());
    for (int i = 0; i < 8; ++i) {
        block_seed[32 + i] = static_cast<std::uint8_t>(counter_ >> (56 - 8 * i));
    }
    ++counter_;
    std::array<std::uint8_t, randombytes_SEEDBYTES> stream_seed{};
    crypto_hash_sha256(stream_seed.data(), block_seed.data(), block_seed.size());
    randombytes_buf_deterministic(out.data(), out.size(), stream_seed.data());
}

std::string random_uuid(Entropy& entropy) {
    auto b = entropy.draw<16>();
    b[6] = static_cast<std::uint8_t>((b[6] & 0x0f) | 0x40);
    b[8] = static_cast<std::uint8_t>((b[8] & 0x3f) | 0x80);
    std::string hex = to_hex(b);
    return hex.substr(0, 8) + "-" + hex.substr(8, 4) + "-" + hex.substr(12, 4) + "-" +
           hex.substr(16, 4) + "-" + hex.substr(20);
}

}  // namespace medsim
