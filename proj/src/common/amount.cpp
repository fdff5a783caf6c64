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

#include "medsim/common/amount.hpp"

#include <algorithm>

#include "medsim/common/error.hpp"

namespace medsim {

std::string amount_to_string(Amount value) {
    if (value == 0) {
        return "0";
    }
    std::string out;
    while (value > 0) {
        out.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
        value /= 10;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

Amount parse_amount(std::string_view text) {
    if (text.empty() || text.size() > 39) {
        throw Error(Errc::malformed, "invalid amount: '" + std::string(text) + "'");
    }
    constexpr Amount kMax = ~static_cast<Amount>(0);
    Amount value = 0;
    for (char c : text) {
        if (c < '0' || c > '9') {
            throw Error(Errc::malformed, "invalid amount: '" + std::string(text) + "'");
        }
        auto digit = static_cast<Amount>(c - '0');
        if (value > (kMax - digit) / 10) {
            throw Error(Errc::malformed, "amount overflows 128 bits");
        }
        value = value * 10 + digit;
    }
    return value;
}

Amount parse_tokens(std::string_view text) {
    auto dot = text.find('.');
    std::string_view whole = text.substr(0, dot);
    std::string frac = dot == std::string_view::npos ? "" : std::string(text.substr(dot + 1));
    if ((whole.empty() && frac.empty()) || frac.size() > 18 || (dot != std::string_view::npos && frac.empty())) {
        throw Error(Errc::malformed, "invalid token amount: '" + std::string(text) + "'");
    }
    frac.resize(18, '0');
    Amount w = whole.empty() ? 0 : parse_amount(whole);
    if (w > (~static_cast<Amount>(0)) / kWholeToken) {
        throw Error(Errc::malformed, "token amount overflows 128 bits");
    }
    return checked_add(w * kWholeToken, parse_amount(frac));
}

std::string format_tokens(Amount value) {
    std::string out = amount_to_string(value / kWholeToken);
    Amount rem = value % kWholeToken;
    if (rem == 0) return out;
    std::string frac = amount_to_string(rem);
    frac.insert(0, 18 - frac.size(), '0');
    while (frac.back() == '0') frac.pop_back();
    return out + "." + frac;
}

Amount checked_add(Amount a, Amount b) {
    if (a > ~static_cast<Amount>(0) - b) {
        throw Error(Errc::invalid_argument, "amount overflow");
    }
    return a + b;
}

}  // namespace medsim
