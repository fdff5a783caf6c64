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

#include <functional>
#include <map>
#include <memory>
#include <string>

#include "medsim/wallet/backend.hpp"

namespace medsim::net {

struct Endpoints {
    std::string vdr;
    std::string dds;
    std::string scp;
    std::string issuer;

    /// All four services behind one node.
    static Endpoints single(const std::string& url) { return {url, url, url, url}; }
};

/// One HTTP exchange as seen on the wire.
struct WireRecord {
    std::string method;
    std::string url;
    std::string request_body;
    std::string authorization;
    int status = 0;
    std::string response_body;
};

using WireTap = std::function<void(const WireRecord&)>;

/// Backend speaking the node HTTP API. Service errors come back as the
/// same Error codes the in-process backend throws.
class HttpBackend final : public wallet::Backend {
public:
    explicit HttpBackend(Endpoints endpoints, WireTap tap = {});
    ~HttpBackend() override;

    void publish_did(const vdr::DidDocument& doc) override;
    vdr::Resolution resolve_did(const vdr::Did& did) override;
    crypto::Challenge issuer_challenge(const vdr::Did& did) override;
    std::string request_credential(const creds::CredentialRequest& request) override;
    dds::Cid dds_put(ByteView content) override;
    Bytes dds_get(const dds::Cid& cid) override;
    contracts::ProtocolAddresses protocol() override;
    scp::Receipt submit(const scp::Transaction& tx) override;
    Json call(const Address& contract, std::string_view method, const Json& args) override;
    Amount balance(const Address& account) override;
    std::uint64_t nonce(const Address& account) override;
    wallet::DeployedService deploy_service(const std::string& connector_url, ByteView payload,
                                           const Json& description, const Eoa& owner) override;
    crypto::Challenge connector_challenge(const std::string& connector_url) override;
    connector::AccessDecision request_access(const std::string& connector_url,
                                             const std::string& service_id,
                                             const std::string& presentation) override;
    Bytes fetch_payload(const std::string& connector_url, const std::string& service_id,
                        const std::string& grant) override;

    /// Raw request for callers outside the Backend surface. Non-2xx
    /// responses other than those listed in `pass` raise the mapped Error.
    WireRecord request(const std::string& base, const std::string& method, const std::string& path,
                       const std::string& body = {}, const std::string& content_type = {},
                       const std::string& bearer = {}, std::initializer_list<int> pass = {});

private:
    Endpoints endpoints_;
    WireTap tap_;
};

}  // namespace medsim::net
