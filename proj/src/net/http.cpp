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

#include "medsim/net/http.hpp"

namespace medsim::net {

int http_status(Errc code) {
    switch (code) {
        case Errc::malformed:
        case Errc::invalid_argument:
            return 400;
        case Errc::unauthorized:
        case Errc::bad_signature:
            return 401;
        case Errc::not_found:
            return 404;
        case Errc::duplicate:
        case Errc::replay:
        case Errc::mismatch:
            return 409;
        case Errc::expired:
        case Errc::deactivated:
            return 410;
        case Errc::reverted:
            return 422;
        case Errc::unavailable:
            return 503;
        case Errc::internal:
            break;
    }
    return 500;
}

Json error_body(Errc code, std::string_view message) {
    return Json{{"error", {{"code", errc_name(code)}, {"message", message}}}};
}

std::pair<std::string, std::string> split_url(std::string_view url) {
    constexpr std::string_view scheme = "http://";
    if (url.substr(0, scheme.size()) != scheme || url.size() == scheme.size()) {
        throw Error(Errc::malformed, "expected an http:// URL: " + std::string(url));
    }
    auto slash = url.find('/', scheme.size());
    if (slash == std::string_view::npos) return {std::string(url), "/"};
    return {std::string(url.substr(0, slash)), std::string(url.substr(slash))};
}

}  // namespace medsim::net
