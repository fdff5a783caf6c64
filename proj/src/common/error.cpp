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

#include "medsim/common/error.hpp"

namespace medsim {

std::string_view errc_name(Errc code) {
    switch (code) {
    case Errc::malformed: return "malformed";
    case Errc::invalid_argument: return "invalid_argument";
    case Errc::not_found: return "not_found";
    case Errc::duplicate: return "duplicate";
    case Errc::unauthorized: return "unauthorized";
    case Errc::bad_signature: return "bad_signature";
    case Errc::expired: return "expired";
    case Errc::replay: return "replay";
    case Errc::mismatch: return "mismatch";
    case Errc::deactivated: return "deactivated";
    case Errc::reverted: return "reverted";
    case Errc::unavailable: return "unavailable";
    case Errc::internal: return "internal";
    }
    return "unknown";
}

Errc errc_from_name(std::string_view name) {
    for (int i = 0; i <= static_cast<int>(Errc::internal); ++i) {
        if (errc_name(static_cast<Errc>(i)) == name) return static_cast<Errc>(i);
    }
    return Errc::internal;
}

}  // namespace medsim
