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

#include <memory>
#include <mutex>
#include <string>
#include <thread>

#include "medsim/node/ecosystem.hpp"

namespace httplib {
class Server;
}

namespace medsim::net {

struct ServerOptions {
    std::string host = "127.0.0.1";
    int port = 0;  // 0 picks a free port
    /// Bearer token for POST /issuer/revocations. Empty disables the route.
    std::string admin_token;
    /// VDR, DDS, SCP and issuer routes. A connector-only server leaves
    /// them to another process.
    bool serve_core = true;
    bool serve_connector = true;
};

/// HTTP front of an in-process ecosystem. Binds on construction; when
/// serving a connector, one is registered under base_url().
class NodeServer {
public:
    NodeServer(node::Ecosystem& eco, ServerOptions options);
    ~NodeServer();
    NodeServer(const NodeServer&) = delete;
    NodeServer& operator=(const NodeServer&) = delete;

    int port() const { return port_; }
    std::string base_url() const;

    /// Blocks until stop().
    void run();
    /// Serves on a background thread.
    void start();
    void stop();

private:
    void routes();
    void core_routes();
    void connector_routes();

    node::Ecosystem& eco_;
    ServerOptions options_;
    std::unique_ptr<httplib::Server> http_;
    int port_ = 0;
    connector::Connector* connector_ = nullptr;
    std::mutex mu_;  // one request at a time touches the ecosystem
    std::thread thread_;
};

}  // namespace medsim::net
