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

#include "medsim/common/address.hpp"
#include "medsim/common/error.hpp"
#include "medsim/common/json.hpp"
#include "medsim/scp/contract.hpp"

namespace medsim::contracts::detail {

// Argument decoding for contract entry points. Malformed input aborts the
// call with an Error, which the platform turns into a revert.

inline Address arg_address(const Json& args, std::string_view key) {
    return Address::parse(require_string(args, key));
}

inline Amount arg_amount(const Json& args, std::string_view key) {
    return require_amount(args, key);
}

inline std::string arg_string(const Json& args, std::string_view key) {
    return require_string(args, key);
}

inline std::int64_t arg_int(const Json& args, std::string_view key) {
    return require_int(args, key);
}

inline Json amount_json(Amount a) { return amount_to_string(a); }

}  // namespace medsim::contracts::detail
