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

#include "medsim/net/http_backend.hpp"

#include <httplib.h>

#include <algorithm>

#include "medsim/common/error.hpp"
#include "medsim/net/http.hpp"

namespace medsim::net {

namespace {

constexpr const char* kJson = "application/json";

[[noreturn]] void raise(const WireRecord& rec) {
    Errc code = Errc::internal;
    std::string message = rec.method + " " + rec.url + " -> " + std::to_string(rec.status);
    try {
        Json j = Json::parse(rec.response_body);
        const Json& e = j.at("error");
        code = errc_from_name(e.at("code").get<std::string>());
        message = e.at("message").get<std::string>();
    } catch (const std::exception&) {
    }
    throw Error(code, message);
}

vdr::Resolution resolution_from(const Json& j) {
    vdr::Resolution r{vdr::DidDocument::from_json(require_field(j, "document")), false, 0};
    r.deactivated = require_field(j, "deactivated").get<bool>();
    r.version = static_cast<std::size_t>(require_int(j, "version"));
    return r;
}

std::string path_of(const std::string& base_url, const std::string& suffix) {
    auto [origin, path] = split_url(base_url);
    if (path == "/") path.clear();
    return path + suffix;
}

}  // namespace

HttpBackend::HttpBackend(Endpoints endpoints, WireTap tap) : endpoints_(std::move(endpoints)), tap_(std::move(tap)) {}

HttpBackend::~HttpBackend() = default;

WireRecord HttpBackend::request(const std::string& base, const std::string& method, const std::string& path,
                                const std::string& body, const std::string& content_type,
                                const std::string& bearer, std::initializer_list<int> pass) {
    auto [origin, prefix] = split_url(base);
    std::string full = path_of(base, path);
    httplib::Client cli(origin);
    cli.set_connection_timeout(5);
    cli.set_read_timeout(30);
    httplib::Headers headers;
    if (!bearer.empty()) headers.emplace("Authorization", "Bearer " + bearer);
    std::string ctype = content_type.empty() ? kJson : content_type;

    httplib::Result res;
    if (method == "GET") {
        res = cli.Get(full, headers);
    } else if (method == "POST") {
        res = cli.Post(full, headers, body, ctype);
    } else if (method == "PATCH") {
        res = cli.Patch(full, headers, body, ctype);
    } else if (method == "DELETE") {
        res = cli.Delete(full, headers, body, ctype);
    } else {
        throw Error(Errc::invalid_argument, "unsupported method " + method);
    }
    if (!res) {
        throw Error(Errc::unavailable, "cannot reach " + origin + ": " + httplib::to_string(res.error()));
    }
    WireRecord rec{method, origin + full, body, headers.empty() ? "" : headers.begin()->second, res->status,
                   res->body};
    if (tap_) tap_(rec);
    bool ok = res->status >= 200 && res->status < 300;
    if (!ok && std::find(pass.begin(), pass.end(), res->status) == pass.end()) raise(rec);
    return rec;
}

void HttpBackend::publish_did(const vdr::DidDocument& doc) {
    request(endpoints_.vdr, "POST", "/dids", doc.to_json().dump());
}

vdr::Resolution HttpBackend::resolve_did(const vdr::Did& did) {
    return resolution_from(parse_json(request(endpoints_.vdr, "GET", "/dids/" + did.str()).response_body));
}

crypto::Challenge HttpBackend::issuer_challenge(const vdr::Did& did) {
    auto rec = request(endpoints_.issuer, "GET", "/issuer/challenge?did=" + httplib::detail::encode_query_param(did.str()));
    return crypto::Challenge::from_json(parse_json(rec.response_body));
}

std::string HttpBackend::request_credential(const creds::CredentialRequest& req) {
    return request(endpoints_.issuer, "POST", "/issuer/credentials", req.to_json().dump()).response_body;
}

dds::Cid HttpBackend::dds_put(ByteView content) {
    auto rec = request(endpoints_.dds, "POST", "/dds", to_string(content), "application/octet-stream");
    return dds::Cid::parse(rec.response_body);
}

Bytes HttpBackend::dds_get(const dds::Cid& cid) {
    Bytes out = to_bytes(request(endpoints_.dds, "GET", "/dds/" + cid.str()).response_body);
    if (dds::Cid::of(out) != cid) throw Error(Errc::mismatch, "DDS returned content for another id");
    return out;
}

contracts::ProtocolAddresses HttpBackend::protocol() {
    Json j = parse_json(request(endpoints_.scp, "GET", "/state/system").response_body);
    return contracts::ProtocolAddresses::from_json(require_field(j, "protocol"));
}

scp::Receipt HttpBackend::submit(const scp::Transaction& tx) {
    return scp::Receipt::from_json(parse_json(request(endpoints_.scp, "POST", "/tx", tx.to_json().dump()).response_body));
}

Json HttpBackend::call(const Address& contract, std::string_view method, const Json& args) {
    Json body{{"to", contract.str()}, {"method", method}, {"args", args}};
    return require_field(parse_json(request(endpoints_.scp, "POST", "/call", body.dump()).response_body), "result");
}

Amount HttpBackend::balance(const Address& account) {
    Json j = parse_json(request(endpoints_.scp, "GET", "/state/balance/" + account.str()).response_body);
    return require_amount(j, "balance");
}

std::uint64_t HttpBackend::nonce(const Address& account) {
    Json j = parse_json(request(endpoints_.scp, "GET", "/state/nonce/" + account.str()).response_body);
    return static_cast<std::uint64_t>(require_int(j, "nonce"));
}

wallet::DeployedService HttpBackend::deploy_service(const std::string& url, ByteView payload,
                                                    const Json& description, const Eoa& owner) {
    Json body{{"payload", base64url_encode(payload)}, {"description", description}, {"owner", owner.str()}};
    Json j = parse_json(request(url, "POST", "/connector/services", body.dump()).response_body);
    return {require_string(j, "id"), require_string(j, "service_url"), dds::Cid::parse(require_string(j, "cid"))};
}

crypto::Challenge HttpBackend::connector_challenge(const std::string& url) {
    return crypto::Challenge::from_json(parse_json(request(url, "GET", "/connector/challenge").response_body));
}

connector::AccessDecision HttpBackend::request_access(const std::string& url, const std::string& service_id,
                                                      const std::string& presentation) {
    auto rec = request(url, "POST", "/connector/services/" + service_id + "/access", presentation, "application/jwt",
                       {}, {403});
    return connector::AccessDecision::from_json(parse_json(rec.response_body));
}

Bytes HttpBackend::fetch_payload(const std::string& url, const std::string& service_id, const std::string& grant) {
    return to_bytes(request(url, "GET", "/connector/services/" + service_id + "/payload", {}, {}, grant).response_body);
}

}  // namespace medsim::net
