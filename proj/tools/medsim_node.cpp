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

#include <csignal>
#include <iostream>

#include <CLI11.hpp>

#include "medsim/common/error.hpp"
#include "medsim/crypto/hash.hpp"
#include "medsim/net/server.hpp"

namespace {

medsim::net::NodeServer* g_server = nullptr;

void on_signal(int) {
    if (g_server) g_server->stop();
}

}  // namespace

int main(int argc, char** argv) {
    using namespace medsim;
    CLI::App app{"medsim node: VDR, DDS, SCP, issuer and a connector over HTTP", "medsim-node"};
    net::ServerOptions opts;
    std::string seed, genesis_file;
    std::vector<std::string> funds;
    app.add_option("--host", opts.host, "Bind address");
    app.add_option("--port", opts.port, "Port; 0 picks one");
    app.add_option("--admin-token", opts.admin_token, "Bearer token for revocations");
    app.add_option("--seed", seed, "Seed string: deterministic keys and a logical clock");
    app.add_option("--fund", funds, "EOA=TOKENS genesis allocation; repeatable");
    CLI11_PARSE(app, argc, argv);

    try {
        node::EcosystemOptions eco_opts;
        if (!seed.empty()) eco_opts.seed = crypto::sha256(as_bytes(seed));
        for (const auto& f : funds) {
            auto eq = f.find('=');
            if (eq == std::string::npos) throw Error(Errc::malformed, "--fund expects EOA=TOKENS: " + f);
            eco_opts.allocations[Address::parse(f.substr(0, eq))] = parse_tokens(f.substr(eq + 1));
        }
        node::Ecosystem eco(eco_opts);
        net::NodeServer server(eco, opts);
        g_server = &server;
        std::signal(SIGINT, on_signal);
        std::signal(SIGTERM, on_signal);
        std::cout << "listening " << server.base_url() << "\n"
                  << "issuer " << eco.issuer().did().str() << "\n"
                  << "protocol " << eco.addresses().to_json().dump() << std::endl;
        server.run();
    } catch (const Error& e) {
        std::cerr << "error: " << errc_name(e.code()) << ": " << e.what() << "\n";
        return 1;
    }
    return 0;
}
