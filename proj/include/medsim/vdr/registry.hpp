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
#include <map>
#include <shared_mutex>
#include <string>
#include <vector>

#include "medsim/crypto/signature.hpp"
#include "medsim/vdr/did.hpp"

namespace medsim::vdr {

struct Resolution {
    DidDocument document;  // latest version
    bool deactivated = false;
    std::size_t version = 0;  // 1-based count of stored versions
};

/// Messages the current identity key signs to authorise a change. The
/// version binds the proof to one registry state.
std::string update_proof_message(const Did& did, std::size_t version, const DidDocument& next);
std::string deactivate_proof_message(const Did& did, std::size_t version);

/// In-memory verifiable data registry. Append-only: every accepted
/// create/update adds a version; deactivation is terminal.
class Registry {
public:
    /// Errors: malformed (shape or derived-id check fails), duplicate.
    Did create(const DidDocument& doc);

    /// Errors: not_found.
    Resolution resolve(const Did& did) const;

    /// Errors: not_found, deactivated, bad_signature, malformed.
    void update(const Did& did, const DidDocument& next, const crypto::Signature& proof);
    void deactivate(const Did& did, const crypto::Signature& proof);

    std::vector<DidDocument> history(const Did& did) const;
    std::size_t size() const;

private:
    struct Record {
        std::vector<DidDocument> versions;
        bool deactivated = false;
    };

    Record& authorise(const Did& did, std::string_view message, const crypto::Signature& proof);

    mutable std::shared_mutex mu_;
    std::map<Did, Record> records_;
};

}  // namespace medsim::vdr
