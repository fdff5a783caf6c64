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

#include "medsim/net/server.hpp"

#include <httplib.h>

#include "medsim/common/error.hpp"
#include "medsim/net/http.hpp"

namespace medsim::net {

namespace {

constexpr const char* kJson = "application/json";

void send_json(httplib::Response& res, const Json& body, int status = 200) {
    res.status = status;
    res.set_content(body.dump(), kJson);
}

std::string bearer(const httplib::Request& req) {
    std::string h = req.get_header_value("Authorization");
    constexpr std::string_view prefix = "Bearer ";
    if (h.rfind(prefix, 0) != 0) return {};
    return h.substr(prefix.size());
}

bool loopback(const httplib::Request& req) {
    return req.remote_addr == "127.0.0.1" || req.remote_addr == "::1" ||
           req.remote_addr.rfind("::ffff:127.", 0) == 0;
}

Json resolution_json(const vdr::Resolution& r) {
    return Json{{"document", r.document.to_json()}, {"deactivated", r.deactivated}, {"version", r.version}};
}

}  // namespace

NodeServer::NodeServer(node::Ecosystem& eco, ServerOptions options)
    : eco_(eco), options_(std::move(options)), http_(std::make_unique<httplib::Server>()) {
    if (options_.port == 0) {
        port_ = http_->bind_to_any_port(options_.host);
    } else if (http_->bind_to_port(options_.host, options_.port)) {
        port_ = options_.port;
    } else {
        port_ = -1;
    }
    if (port_ <= 0) {
        throw Error(Errc::unavailable, "cannot bind " + options_.host + ":" + std::to_string(options_.port));
    }
    if (options_.serve_connector) connector_ = &eco_.add_connector(base_url());
    routes();
}

NodeServer::~NodeServer() { stop(); }

std::string NodeServer::base_url() const { return "http://" + options_.host + ":" + std::to_string(port_); }

void NodeServer::run() { http_->listen_after_bind(); }

void NodeServer::start() {
    thread_ = std::thread([this] { run(); });
    http_->wait_until_ready();
}

void NodeServer::stop() {
    http_->stop();
    if (thread_.joinable()) thread_.join();
}

void NodeServer::routes() {
    http_->set_pre_routing_handler([](const httplib::Request& req, httplib::Response& res) {
        res.set_header("Access-Control-Allow-Origin", "*");
        if (req.method == "OPTIONS") {
            res.set_header("Access-Control-Allow-Methods", "GET, POST, PATCH, DELETE, OPTIONS");
            res.set_header("Access-Control-Allow-Headers", "Authorization, Content-Type");
            res.status = 204;
            return httplib::Server::HandlerResponse::Handled;
        }
        return httplib::Server::HandlerResponse::Unhandled;
    });
    http_->set_exception_handler([](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
        try {
            std::rethrow_exception(ep);
        } catch (const Error& e) {
            send_json(res, error_body(e.code(), e.what()), http_status(e.code()));
        } catch (const std::exception& e) {
            send_json(res, error_body(Errc::internal, e.what()), 500);
        }
    });
    http_->set_error_handler([](const httplib::Request&, httplib::Response& res) {
        if (res.body.empty()) {
            res.set_content(error_body(res.status == 404 ? Errc::not_found : Errc::malformed, "no such route").dump(),
                            kJson);
        }
    });
    if (options_.serve_core) core_routes();
    if (options_.serve_connector) connector_routes();
}

void NodeServer::core_routes() {
    auto& h = *http_;

    // VDR
    h.Post("/dids", [this](const httplib::Request& req, httplib::Response& res) {
        auto doc = vdr::DidDocument::from_json(parse_json(req.body));
        std::lock_guard lock(mu_);
        auto did = eco_.registry().create(doc);
        send_json(res, resolution_json(eco_.registry().resolve(did)), 201);
    });
    h.Get(R"(/dids/([^/]+))", [this](const httplib::Request& req, httplib::Response& res) {
        auto did = vdr::Did::parse(req.matches[1].str());
        std::lock_guard lock(mu_);
        send_json(res, resolution_json(eco_.registry().resolve(did)));
    });
    h.Patch(R"(/dids/([^/]+))", [this](const httplib::Request& req, httplib::Response& res) {
        auto did = vdr::Did::parse(req.matches[1].str());
        Json body = parse_json(req.body);
        auto next = vdr::DidDocument::from_json(require_field(body, "document"));
        auto proof = crypto::Signature::from_hex(crypto::Scheme::identity, require_string(body, "proof"));
        std::lock_guard lock(mu_);
        eco_.registry().update(did, next, proof);
        send_json(res, resolution_json(eco_.registry().resolve(did)));
    });
    h.Delete(R"(/dids/([^/]+))", [this](const httplib::Request& req, httplib::Response& res) {
        auto did = vdr::Did::parse(req.matches[1].str());
        Json body = parse_json(req.body);
        auto proof = crypto::Signature::from_hex(crypto::Scheme::identity, require_string(body, "proof"));
        std::lock_guard lock(mu_);
        eco_.registry().deactivate(did, proof);
        send_json(res, resolution_json(eco_.registry().resolve(did)));
    });

    // DDS
    h.Post("/dds", [this](const httplib::Request& req, httplib::Response& res) {
        std::lock_guard lock(mu_);
        auto cid = eco_.dds().put(as_bytes(req.body));
        res.status = 201;
        res.set_content(cid.str(), "text/plain");
    });
    h.Get(R"(/dds/([^/]+))", [this](const httplib::Request& req, httplib::Response& res) {
        auto cid = dds::Cid::parse(req.matches[1].str());
        std::lock_guard lock(mu_);
        res.set_content(to_string(eco_.dds().get(cid)), "application/octet-stream");
    });

    // SCP
    h.Post("/tx", [this](const httplib::Request& req, httplib::Response& res) {
        auto tx = scp::Transaction::from_json(parse_json(req.body));
        std::lock_guard lock(mu_);
        send_json(res, eco_.chain().submit(tx).to_json());
    });
    h.Post("/call", [this](const httplib::Request& req, httplib::Response& res) {
        Json body = parse_json(req.body);
        auto to = Address::parse(require_string(body, "to"));
        std::string method = require_string(body, "method");
        Json args = body.value("args", Json::object());
        std::lock_guard lock(mu_);
        send_json(res, Json{{"result", eco_.chain().call_static(to, method, args)}});
    });
    h.Get("/events", [this](const httplib::Request& req, httplib::Response& res) {
        std::uint64_t from = 0;
        if (req.has_param("from_height")) {
            try {
                from = std::stoull(req.get_param_value("from_height"));
            } catch (const std::exception&) {
                throw Error(Errc::malformed, "from_height must be a non-negative integer");
            }
        }
        Json out = Json::array();
        std::lock_guard lock(mu_);
        for (const auto& e : eco_.chain().events(from)) out.push_back(e.to_json());
        send_json(res, Json{{"events", std::move(out)}, {"height", eco_.chain().height()}});
    });
    h.Get(R"(/state/balance/([^/]+))", [this](const httplib::Request& req, httplib::Response& res) {
        auto a = Address::parse(req.matches[1].str());
        std::lock_guard lock(mu_);
        send_json(res, Json{{"address", a.str()}, {"balance", amount_to_string(eco_.chain().balance(a))}});
    });
    h.Get(R"(/state/nonce/([^/]+))", [this](const httplib::Request& req, httplib::Response& res) {
        auto a = Address::parse(req.matches[1].str());
        std::lock_guard lock(mu_);
        send_json(res, Json{{"address", a.str()}, {"nonce", eco_.chain().nonce(a)}});
    });
    h.Get("/state/system", [this](const httplib::Request&, httplib::Response& res) {
        std::lock_guard lock(mu_);
        send_json(res, Json{{"protocol", eco_.addresses().to_json()},
                            {"height", eco_.chain().height()},
                            {"now", eco_.chain().now()},
                            {"state_hash", to_hex(eco_.chain().state_hash())},
                            {"issuer", eco_.issuer().did().str()},
                            {"connectors", eco_.connector_urls()}});
    });

    // Issuer
    h.Get("/issuer/did", [this](const httplib::Request&, httplib::Response& res) {
        send_json(res, eco_.issuer().document().to_json());
    });
    h.Get("/issuer/challenge", [this](const httplib::Request& req, httplib::Response& res) {
        if (!req.has_param("did")) throw Error(Errc::malformed, "missing did parameter");
        std::lock_guard lock(mu_);
        send_json(res, eco_.issuer().challenge(req.get_param_value("did")).to_json());
    });
    h.Post("/issuer/credentials", [this](const httplib::Request& req, httplib::Response& res) {
        auto request = creds::CredentialRequest::from_json(parse_json(req.body));
        std::lock_guard lock(mu_);
        auto vc = eco_.issuer().issue(request);
        res.status = 201;
        res.set_content(vc.jwt, "application/jwt");
    });
    h.Post(R"(/issuer/revocations/([^/]+))", [this](const httplib::Request& req, httplib::Response& res) {
        if (options_.admin_token.empty() || bearer(req) != options_.admin_token) {
            throw Error(Errc::unauthorized, "revocation requires the admin token");
        }
        std::string id = req.matches[1].str();
        std::lock_guard lock(mu_);
        eco_.issuer().revoke(id);
        send_json(res, Json{{"revoked", id}});
    });
}

void NodeServer::connector_routes() {
    auto& h = *http_;
    h.Get("/connector/challenge", [this](const httplib::Request&, httplib::Response& res) {
        std::lock_guard lock(mu_);
        send_json(res, connector_->challenge().to_json());
    });
    h.Post("/connector/services", [this](const httplib::Request& req, httplib::Response& res) {
        if (!loopback(req)) throw Error(Errc::unauthorized, "service deployment is provider-local");
        Json body = parse_json(req.body);
        Bytes payload = base64url_decode(require_string(body, "payload"));
        auto owner = Address::parse(require_string(body, "owner"));
        Json description = body.value("description", Json::object());
        std::lock_guard lock(mu_);
        auto svc = connector_->deploy_service(std::move(payload), description, owner);
        send_json(res, Json{{"id", svc.id}, {"service_url", svc.service_url}, {"cid", svc.cid.str()}}, 201);
    });
    h.Post(R"(/connector/services/([^/]+)/access)", [this](const httplib::Request& req, httplib::Response& res) {
        std::lock_guard lock(mu_);
        auto d = connector_->request_access(req.matches[1].str(), req.body);
        send_json(res, d.to_json(), d.granted ? 200 : 403);
    });
    h.Get(R"(/connector/services/([^/]+)/payload)", [this](const httplib::Request& req, httplib::Response& res) {
        std::lock_guard lock(mu_);
        Bytes payload = connector_->fetch_payload(req.matches[1].str(), bearer(req));
        res.set_content(to_string(payload), "application/octet-stream");
    });
}

}  // namespace medsim::net
