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
#include <string_view>

#include "medsim/common/error.hpp"
#include "medsim/common/json.hpp"

namespace medsim::net {

/// Status used for an Error with the given code.
int http_status(Errc code);

/// {"error": {"code": "...", "message": "..."}}
Json error_body(Errc code, std::string_view message);

/// "http://host:port/path" -> {"http://host:port", "/path"}. Throws
/// Errc::malformed for anything but plain http URLs.
std::pair<std::string, std::string> split_url(std::string_view url);

}  // namespace medsim::net
