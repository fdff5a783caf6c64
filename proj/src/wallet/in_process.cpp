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

#include "medsim/common/error.hpp"
#include "medsim/node/ecosystem.hpp"
#include "medsim/wallet/backend.hpp"

namespace medsim::wallet {

connector::Connector& InProcessBackend::connector(const std::string& url) {
    auto* c = eco_.connector(url);
    if (!c) throw Error(Errc::unavailable, "no connector at " + url);
    return *c;
}

void InProcessBackend::publish_did(const vdr::DidDocument& doc) { eco_.registry().create(doc); }

vdr::Resolution InProcessBackend::resolve_did(const vdr::Did& did) { return eco_.registry().resolve(did); }

crypto::Challenge InProcessBackend::issuer_challenge(const vdr::Did& did) {
    return eco_.issuer().challenge(did.str());
}

std::string InProcessBackend::request_credential(const creds::CredentialRequest& request) {
    return eco_.issuer().issue(request).jwt;
}

dds::Cid InProcessBackend::dds_put(ByteView content) { return eco_.dds().put(content); }

Bytes InProcessBackend::dds_get(const dds::Cid& cid) { return eco_.dds().get(cid); }

contracts::ProtocolAddresses InProcessBackend::protocol() { return eco_.addresses(); }

scp::Receipt InProcessBackend::submit(const scp::Transaction& tx) { return eco_.chain().submit(tx); }

Json InProcessBackend::call(const Address& contract, std::string_view method, const Json& args) {
    return eco_.chain().call_static(contract, method, args);
}

Amount InProcessBackend::balance(const Address& account) { return eco_.chain().balance(account); }

std::uint64_t InProcessBackend::nonce(const Address& account) { return eco_.chain().nonce(account); }

DeployedService InProcessBackend::deploy_service(const std::string& url, ByteView payload,
                                                 const Json& description, const Eoa& owner) {
    auto svc = connector(url).deploy_service(Bytes(payload.begin(), payload.end()), description, owner);
    return {svc.id, svc.service_url, svc.cid};
}

crypto::Challenge InProcessBackend::connector_challenge(const std::string& url) {
    return connector(url).challenge();
}

connector::AccessDecision InProcessBackend::request_access(const std::string& url,
                                                           const std::string& service_id,
                                                           const std::string& presentation) {
    return connector(url).request_access(service_id, presentation);
}

Bytes InProcessBackend::fetch_payload(const std::string& url, const std::string& service_id,
                                      const std::string& grant) {
    return connector(url).fetch_payload(service_id, grant);
}

}  // namespace medsim::wallet
