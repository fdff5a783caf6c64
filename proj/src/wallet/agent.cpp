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

#include "medsim/wallet/agent.hpp"

#include "medsim/common/error.hpp"
#include "medsim/node/ecosystem.hpp"

namespace medsim::wallet {

void Agent::publish_identity() { backend_.publish_did(id_.document); }

creds::VerifiableCredential Agent::join() {
    crypto::Challenge ch = backend_.issuer_challenge(id_.did());
    auto request = creds::make_credential_request(id_.did(), ch.nonce_hex(), id_.identity, id_.wallet);
    std::string jwt = backend_.request_credential(request);
    auto vc = creds::VerifiableCredential::from_jwt(jwt);
    if (vc.subject != id_.did() || vc.eoa != eoa()) {
        throw Error(Errc::mismatch, "issuer returned a credential for someone else");
    }
    id_.credential = jwt;
    return vc;
}

scp::Receipt Agent::send(std::optional<Address> to, std::string method, Json args, Amount value) {
    scp::Transaction tx;
    tx.from = eoa();
    tx.to = to;
    tx.method = std::move(method);
    tx.args = std::move(args);
    tx.value = value;
    tx.nonce = backend_.nonce(tx.from);
    tx.sign(id_.wallet);
    return backend_.submit(tx);
}

PublishResult Agent::publish(const PublishRequest& req) {
    PublishResult out;
    out.hosted = backend_.deploy_service(req.connector_url, req.payload, req.description, eoa());
    out.receipt = send(backend_.protocol().factory, "tokenize",
                       {{"alias", req.alias},
                        {"cid", out.hosted.cid.str()},
                        {"service_url", out.hosted.service_url},
                        {"supply", amount_to_string(req.supply)},
                        {"price", amount_to_string(req.price)}});
    if (out.receipt.ok()) {
        out.service = Address::parse(out.receipt.result.at("service").get<std::string>());
        out.access_token = Address::parse(out.receipt.result.at("access_token").get<std::string>());
    }
    return out;
}

std::vector<CatalogEntry> Agent::catalog() {
    auto proto = backend_.protocol();
    std::vector<CatalogEntry> out;
    for (const auto& j : backend_.call(proto.factory, "listOfferings", Json::object())) {
        CatalogEntry e;
        e.offering = contracts::ServiceOffering::from_json(j);
        try {
            e.description = parse_json(to_string(backend_.dds_get(dds::Cid::parse(e.offering.cid))));
        } catch (const Error&) {
        }
        Json listing = backend_.call(proto.exchange, "listing", {{"service", e.offering.service_contract.str()}});
        e.active = listing.is_object() && listing.value("active", false);
        out.push_back(std::move(e));
    }
    return out;
}

Amount Agent::listed_price(const Address& service) {
    Json listing = backend_.call(backend_.protocol().exchange, "listing", {{"service", service.str()}});
    if (!listing.is_object()) throw Error(Errc::not_found, "service is not listed: " + service.str());
    return parse_amount(listing.at("price").get<std::string>());
}

scp::Receipt Agent::buy(const Address& service) { return buy(service, listed_price(service)); }

scp::Receipt Agent::buy(const Address& service, Amount value) {
    return send(backend_.protocol().exchange, "buy", {{"service", service.str()}}, value);
}

std::string Agent::presentation(std::string_view nonce_hex) const {
    if (!id_.credential) throw Error(Errc::unauthorized, "no credential; join first");
    return creds::build_presentation(id_.did(), id_.identity, id_.wallet, nonce_hex, *id_.credential);
}

AccessResult Agent::access(const Address& service) {
    Json meta = backend_.call(service, "metadata", Json::object());
    auto [url, service_id] = node::split_service_url(meta.at("service_url").get<std::string>());
    crypto::Challenge ch = backend_.connector_challenge(url);
    AccessResult out;
    out.decision = backend_.request_access(url, service_id, presentation(ch.nonce_hex()));
    if (out.decision.granted) {
        out.payload = backend_.fetch_payload(url, service_id, out.decision.grant);
    }
    return out;
}

Amount Agent::native_balance() { return backend_.balance(eoa()); }

Amount Agent::token_balance(const Address& token) {
    return parse_amount(backend_.call(token, "balanceOf", {{"account", eoa().str()}}).get<std::string>());
}

scp::Receipt Agent::transfer_native(const Address& to, Amount amount) {
    return send(to, "", Json::object(), amount);
}

scp::Receipt Agent::transfer_token(const Address& token, const Address& to, Amount amount) {
    return send(token, "transfer", {{"to", to.str()}, {"amount", amount_to_string(amount)}});
}

}  // namespace medsim::wallet
