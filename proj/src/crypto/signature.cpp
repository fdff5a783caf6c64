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

#include "medsim/crypto/signature.hpp"

#include "medsim/common/error.hpp"

namespace medsim::crypto {

Signature::Signature(Scheme scheme, Bytes bytes) : scheme_(scheme), bytes_(std::move(bytes)) {
    std::size_t want = scheme_ == Scheme::identity ? kIdentitySize : kWalletSize;
    if (bytes_.size() != want) {
        throw Error(Errc::malformed, "signature must be " + std::to_string(want) + " bytes, got " +
                                         std::to_string(bytes_.size()));
    }
}

Signature Signature::from_hex(Scheme scheme, std::string_view hex) {
    return Signature(scheme, medsim::from_hex(hex));
}

std::optional<int> Signature::recovery_id() const {
    if (scheme_ != Scheme::wallet) {
        return std::nullopt;
    }
    int v = bytes_[64];
    return v >= 27 ? v - 27 : v;
}

std::string Signature::hex() const { return to_hex(bytes_); }

}  // namespace medsim::crypto
