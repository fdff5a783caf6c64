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

#include "medsim/common/bytes.hpp"

namespace medsim::crypto {

Hash32 sha256(ByteView data);

/// Original Keccak-256 (0x01 padding), as used for account addresses. Not
/// FIPS-202 SHA3-256.
Hash32 keccak256(ByteView data);

/// Digest of the personal-message envelope
/// "\x19Ethereum Signed Message:\n" || decimal(len) || message.
Hash32 personal_message_hash(ByteView message);

}  // namespace medsim::crypto
