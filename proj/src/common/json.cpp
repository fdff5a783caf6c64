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

#include "medsim/common/json.hpp"

#include "medsim/common/error.hpp"

namespace medsim {

std::string canonical(const Json& value) {
    // std::map backed objects: keys come out sorted.
    return value.dump(-1, ' ', false, Json::error_handler_t::strict);
}

Json parse_json(std::string_view text) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const Json::exception& e) {
        throw Error(Errc::malformed, std::string("invalid JSON: ") + e.what());
    }
}

const Json& require_field(const Json& obj, std::string_view key) {
    if (!obj.is_object()) {
        throw Error(Errc::malformed, "expected a JSON object");
    }
    auto it = obj.find(key);
    if (it == obj.end()) {
        throw Error(Errc::malformed, "missing field '" + std::string(key) + "'");
    }
    return *it;
}

std::string require_string(const Json& obj, std::string_view key) {
    const Json& v = require_field(obj, key);
    if (!v.is_string()) {
        throw Error(Errc::malformed, "field '" + std::string(key) + "' must be a string");
    }
    return v.get<std::string>();
}

std::int64_t require_int(const Json& obj, std::string_view key) {
    const Json& v = require_field(obj, key);
    if (!v.is_number_integer()) {
        throw Error(Errc::malformed, "field '" + std::string(key) + "' must be an integer");
    }
    return v.get<std::int64_t>();
}

Amount require_amount(const Json& obj, std::string_view key) {
    const Json& v = require_field(obj, key);
    if (v.is_string()) {
        return parse_amount(v.get_ref<const std::string&>());
    }
    if (v.is_number_unsigned()) {
        return v.get<std::uint64_t>();
    }
    throw Error(Errc::malformed, "field '" + std::string(key) + "' must be a decimal amount");
}

}  // namespace medsim
