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
#include <mutex>
#include <span>

#include "medsim/common/bytes.hpp"

namespace medsim {

/// Source of random bytes.
class Entropy {
public:
    virtual ~Entropy() = default;
    virtual void fill(std::span<std::uint8_t> out) = 0;

    template <std::size_t N>
    std::array<std::uint8_t, N> draw() {
        std::array<std::uint8_t, N> out{};
        fill(out);
        return out;
    }
};

class SystemEntropy final : public Entropy {
public:
    void fill(std::span<std::uint8_t> out) override;
};

/// Reproducible stream: block i is expanded from SHA-256(seed || i).
class DeterministicEntropy final : public Entropy {
public:
    explicit DeterministicEntropy(const Hash32& seed) : seed_(seed) {}

    void fill(std::span<std::uint8_t> out) override;

private:
    std::mutex mu_;
    Hash32 seed_;
    std::uint64_t counter_ = 0;
};

/// Idempotent libsodium initialisation.
void ensure_sodium();

/// Random v4 UUID string drawn from the given source.
std::string random_uuid(Entropy& entropy);

}  // namespace medsim
