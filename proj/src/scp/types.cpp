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

#include "medsim/scp/types.hpp"

#include "medsim/common/error.hpp"
#include "medsim/crypto/hash.hpp"

namespace medsim::scp {

Json Event::to_json() const {
    return Json{{"emitter", emitter.str()}, {"name", name}, {"payload", payload}, {"height", height}};
}

Event Event::from_json(const Json& j) {
    Event e;
    e.emitter = Address::parse(require_string(j, "emitter"));
    e.name = require_string(j, "name");
    e.payload = require_field(j, "payload");
    e.height = static_cast<std::uint64_t>(require_int(j, "height"));
    return e;
}

Json Transaction::unsigned_json() const {
    return Json{
        {"from", from.str()},
        {"to", to ? Json(to->str()) : Json(nullptr)},
        {"method", method},
        {"args", args},
        {"value", amount_to_string(value)},
        {"nonce", nonce},
    };
}

std::string Transaction::signing_payload() const { return canonical(unsigned_json()); }

void Transaction::sign(const crypto::WalletKeyPair& key) {
    signature = crypto::sign_wallet(key, as_bytes(signing_payload()));
}

std::string Transaction::hash_hex() const {
    Json j = to_json();
    return "0x" + to_hex(crypto::keccak256(as_bytes(canonical(j))));
}

Json Transaction::to_json() const {
    Json j = unsigned_json();
    j["signature"] = signature ? Json(signature->hex()) : Json(nullptr);
    return j;
}

Transaction Transaction::from_json(const Json& j) {
    Transaction tx;
    tx.from = Address::parse(require_string(j, "from"));
    const Json& to = require_field(j, "to");
    if (!to.is_null()) {
        if (!to.is_string()) throw Error(Errc::malformed, "field 'to' must be an address or null");
        tx.to = Address::parse(to.get<std::string>());
    }
    tx.method = require_string(j, "method");
    tx.args = require_field(j, "args");
    tx.value = require_amount(j, "value");
    const Json& nonce = require_field(j, "nonce");
    if (!nonce.is_number_unsigned()) throw Error(Errc::malformed, "field 'nonce' must be unsigned");
    tx.nonce = nonce.get<std::uint64_t>();
    auto it = j.find("signature");
    if (it != j.end() && !it->is_null()) {
        if (!it->is_string()) throw Error(Errc::malformed, "signature must be hex");
        tx.signature = crypto::Signature::from_hex(crypto::Scheme::wallet, it->get<std::string>());
    }
    return tx;
}

Json Receipt::to_json() const {
    Json evs = Json::array();
    for (const auto& e : events) evs.push_back(e.to_json());
    return Json{
        {"status", ok() ? "ok" : "reverted"},
        {"error", error},
        {"events", std::move(evs)},
        {"result", result},
        {"height", height},
        {"tx_hash", tx_hash},
        {"contract_address", contract_address ? Json(contract_address->str()) : Json(nullptr)},
    };
}

Receipt Receipt::from_json(const Json& j) {
    Receipt r;
    std::string status = require_string(j, "status");
    if (status != "ok" && status != "reverted") throw Error(Errc::malformed, "bad receipt status");
    r.status = status == "ok" ? TxStatus::ok : TxStatus::reverted;
    r.error = require_string(j, "error");
    for (const auto& e : require_field(j, "events")) r.events.push_back(Event::from_json(e));
    r.result = require_field(j, "result");
    r.height = static_cast<std::uint64_t>(require_int(j, "height"));
    r.tx_hash = require_string(j, "tx_hash");
    const Json& addr = require_field(j, "contract_address");
    if (!addr.is_null()) r.contract_address = Address::parse(addr.get<std::string>());
    return r;
}

}  // namespace medsim::scp
