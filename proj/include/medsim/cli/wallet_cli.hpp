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

#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "medsim/net/http_backend.hpp"

namespace medsim::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitError = 1,
    kExitUsage = 2,
    kExitReverted = 3,
    kExitDenied = 10,  // plus the pipeline stage, 11..17
};

/// Snapshot of the variables the CLI reads.
struct Environment {
    std::map<std::string, std::string> vars;

    static Environment from_process();
    std::optional<std::string> get(const std::string& name) const;
};

struct WalletConfig {
    net::Endpoints endpoints;
    std::string connector;
    std::filesystem::path keystore;
    std::string kdf = "interactive";  // or "minimal"
};

/// Values given on the command line; empty means unset.
struct ConfigFlags {
    std::string config;
    std::string keystore;
    std::string node;
    std::string vdr, dds, scp, issuer;
    std::string connector;
};

/// Flags beat MEDSIM_CONFIG / MEDSIM_KEYSTORE, which beat the config file.
/// The file is JSON: {"node" | "vdr","dds","scp","issuer", "connector",
/// "keystore", "kdf"}. "node" fills any of the four service URLs not set
/// individually. Errors: not_found (named config file missing), malformed.
WalletConfig resolve_config(const ConfigFlags& flags, const Environment& env);

/// `medsim-wallet` entry point. Arguments exclude the program name.
int wallet_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                const Environment& env = Environment::from_process());

}  // namespace medsim::cli
