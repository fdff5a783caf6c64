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
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "medsim/common/address.hpp"
#include "medsim/common/amount.hpp"
#include "medsim/common/json.hpp"
#include "medsim/crypto/signature.hpp"
#include "medsim/crypto/wallet_key.hpp"

namespace medsim::scp {

struct Event {
    Address emitter;
    std::string name;
    Json payload = Json::object();
    std::uint64_t height = 0;

    Json to_json() const;
    static Event from_json(const Json& j);
    bool operator==(const Event&) const = default;
};

/// A signed state transition.
///
///   to = contract, method non-empty  -> contract call
///   to = account,  method empty      -> native transfer
///   to = nullopt                     -> deploy; method is the code id
struct Transaction {
    Address from;
    std::optional<Address> to;
    std::string method;
    Json args = Json::object();
    Amount value = 0;
    std::uint64_t nonce = 0;
    std::optional<crypto::Signature> signature;

    Json unsigned_json() const;
    /// Canonical JSON of every field except the signature.
    std::string signing_payload() const;
    void sign(const crypto::WalletKeyPair& key);
    std::string hash_hex() const;

    Json to_json() const;
    static Transaction from_json(const Json& j);
};

enum class TxStatus { ok, reverted };

struct Receipt {
    TxStatus status = TxStatus::ok;
    std::string error;  // revert reason
    std::vector<Event> events;
    Json result;
    std::uint64_t height = 0;  // height assigned on success
    std::string tx_hash;
    std::optional<Address> contract_address;

    bool ok() const { return status == TxStatus::ok; }
    Json to_json() const;
    static Receipt from_json(const Json& j);
};

/// Thrown by contract code to abort the enclosing transaction.
class Revert : public std::runtime_error {
public:
    explicit Revert(const std::string& reason) : std::runtime_error(reason) {}
};

}  // namespace medsim::scp
