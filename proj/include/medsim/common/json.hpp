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

#include <nlohmann/json.hpp>

#include "medsim/common/amount.hpp"

namespace medsim {

using Json = nlohmann::json;

/// Sorted keys, no insignificant whitespace. Used for every hashed or
/// signed JSON payload.
std::string canonical(const Json& value);

/// Parses untrusted text; throws Errc::malformed instead of json exceptions.
Json parse_json(std::string_view text);

/// Typed field access for untrusted objects; each throws Errc::malformed
/// when the field is missing or has the wrong type.
std::string require_string(const Json& obj, std::string_view key);
std::int64_t require_int(const Json& obj, std::string_view key);
const Json& require_field(const Json& obj, std::string_view key);
Amount require_amount(const Json& obj, std::string_view key);

}  // namespace medsim
