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

#include "medsim/cli/wallet_cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "medsim/common/error.hpp"
#include "medsim/creds/credential.hpp"
#include "medsim/wallet/agent.hpp"

extern char** environ;

namespace medsim::cli {

Environment Environment::from_process() {
    Environment env;
    for (char** e = environ; e && *e; ++e) {
        std::string_view kv(*e);
        auto eq = kv.find('=');
        if (eq != std::string_view::npos) env.vars.emplace(kv.substr(0, eq), kv.substr(eq + 1));
    }
    return env;
}

std::optional<std::string> Environment::get(const std::string& name) const {
    auto it = vars.find(name);
    if (it == vars.end() || it->second.empty()) return std::nullopt;
    return it->second;
}

namespace {

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::not_found, "cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string pick(const std::string& flag, std::optional<std::string> env, const Json& file, const char* key) {
    if (!flag.empty()) return flag;
    if (env) return *env;
    if (file.contains(key)) {
        if (!file[key].is_string()) throw Error(Errc::malformed, std::string("config field ") + key + " must be a string");
        return file[key].get<std::string>();
    }
    return {};
}

}  // namespace

WalletConfig resolve_config(const ConfigFlags& flags, const Environment& env) {
    Json file = Json::object();
    std::string path = pick(flags.config, env.get("MEDSIM_CONFIG"), Json::object(), "");
    if (!path.empty()) {
        file = parse_json(read_file(path));
    } else if (auto home = env.get("HOME")) {
        auto fallback = std::filesystem::path(*home) / ".config" / "medsim" / "config.json";
        if (std::filesystem::exists(fallback)) file = parse_json(read_file(fallback));
    }
    if (!file.is_object()) throw Error(Errc::malformed, "config file must hold a JSON object");

    WalletConfig cfg;
    std::string node = pick(flags.node, std::nullopt, file, "node");
    auto endpoint = [&](const std::string& flag, const char* key) {
        std::string v = pick(flag, std::nullopt, file, key);
        if (v.empty() && !flags.node.empty()) return flags.node;
        return v.empty() ? node : v;
    };
    cfg.endpoints.vdr = endpoint(flags.vdr, "vdr");
    cfg.endpoints.dds = endpoint(flags.dds, "dds");
    cfg.endpoints.scp = endpoint(flags.scp, "scp");
    cfg.endpoints.issuer = endpoint(flags.issuer, "issuer");
    cfg.connector = pick(flags.connector, std::nullopt, file, "connector");
    if (cfg.connector.empty()) cfg.connector = node;
    std::string ks = pick(flags.keystore, env.get("MEDSIM_KEYSTORE"), file, "keystore");
    if (ks.empty()) {
        auto home = env.get("HOME");
        ks = (std::filesystem::path(home ? *home : ".") / ".medsim" / "keystore.json").string();
    }
    cfg.keystore = ks;
    std::string kdf = pick("", std::nullopt, file, "kdf");
    if (!kdf.empty()) cfg.kdf = kdf;
    if (cfg.kdf != "interactive" && cfg.kdf != "minimal") throw Error(Errc::malformed, "kdf must be interactive or minimal");
    return cfg;
}

namespace {

struct Denied {
    connector::AccessDecision decision;
};

struct Reverted {
    std::string reason;
};

class Session {
public:
    Session(const WalletConfig& cfg, std::string passphrase) : cfg_(cfg), passphrase_(std::move(passphrase)) {}

    net::HttpBackend& backend() {
        auto need = [](const std::string& url, const char* what) {
            if (url.empty()) throw Error(Errc::invalid_argument, std::string("no ") + what + " endpoint configured");
        };
        need(cfg_.endpoints.vdr, "VDR");
        need(cfg_.endpoints.dds, "DDS");
        need(cfg_.endpoints.scp, "SCP");
        need(cfg_.endpoints.issuer, "issuer");
        if (!backend_) backend_ = std::make_unique<net::HttpBackend>(cfg_.endpoints);
        return *backend_;
    }

    wallet::Identity& identity() {
        if (!identity_) identity_ = wallet::load_keystore(cfg_.keystore, passphrase());
        return *identity_;
    }

    wallet::Agent agent() { return wallet::Agent(backend(), identity()); }

    void save(const wallet::Identity& id) {
        SystemEntropy e;
        auto kdf = cfg_.kdf == "minimal" ? wallet::KdfParams::minimal() : wallet::KdfParams::interactive();
        wallet::save_keystore(cfg_.keystore, id, passphrase(), e, kdf);
    }

    const std::string& passphrase() const {
        if (passphrase_.empty()) {
            throw Error(Errc::unauthorized, "no passphrase: use --passphrase or MEDSIM_PASSPHRASE");
        }
        return passphrase_;
    }

    const WalletConfig& config() const { return cfg_; }

private:
    WalletConfig cfg_;
    std::string passphrase_;
    std::unique_ptr<net::HttpBackend> backend_;
    std::optional<wallet::Identity> identity_;
};

Json receipt_summary(const scp::Receipt& r) {
    return Json{{"status", r.ok() ? "ok" : "reverted"}, {"tx", r.tx_hash}, {"height", r.height}, {"error", r.error}};
}

void require_ok(const scp::Receipt& r) {
    if (!r.ok()) throw Reverted{r.error};
}

void print_human(std::ostream& out, const Json& j) {
    for (const auto& [k, v] : j.items()) {
        out << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
}

}  // namespace

int wallet_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Environment& env) {
    CLI::App app{"medsim wallet: identity, joining, publishing, buying and access", "medsim-wallet"};
    app.require_subcommand(1);
    app.fallthrough();

    ConfigFlags flags;
    std::string passphrase;
    bool json = false;
    app.add_option("--config", flags.config, "Config file (JSON)");
    app.add_option("--keystore", flags.keystore, "Keystore path");
    app.add_option("--node", flags.node, "Base URL serving VDR, DDS, SCP and issuer");
    app.add_option("--vdr", flags.vdr, "VDR base URL");
    app.add_option("--dds", flags.dds, "DDS base URL");
    app.add_option("--scp", flags.scp, "SCP base URL");
    app.add_option("--issuer", flags.issuer, "Issuer base URL");
    app.add_option("--passphrase", passphrase, "Keystore passphrase (or MEDSIM_PASSPHRASE)");
    app.add_flag("--json", json, "Machine-readable output");

    auto* identity = app.add_subcommand("identity", "Key and DID lifecycle");
    identity->require_subcommand(1);
    auto* create = identity->add_subcommand("create", "Generate keys, publish the DID document, write the keystore");
    std::string seed;
    bool offline = false, force = false;
    create->add_option("--seed", seed, "32-byte hex seed for reproducible keys");
    create->add_flag("--offline", offline, "Do not publish the DID document");
    create->add_flag("--force", force, "Overwrite an existing keystore");
    auto* show = identity->add_subcommand("show", "Print DID, EOA and credential");
    auto* publish_did = identity->add_subcommand("publish", "Register the DID document with the VDR");

    auto* join = app.add_subcommand("join", "Obtain a membership credential from the issuer");

    auto* publish = app.add_subcommand("publish", "Host a payload on a connector and tokenize it");
    std::string payload, payload_file, description = "{}", alias, supply = "1", price;
    publish->add_option("--payload", payload, "Payload text");
    publish->add_option("--payload-file", payload_file, "Payload file");
    publish->add_option("--description", description, "Description JSON, or @file");
    publish->add_option("--alias", alias, "Catalog alias")->required();
    publish->add_option("--supply", supply, "Access tokens to mint (whole tokens)");
    publish->add_option("--price", price, "Price per access token (whole native tokens)")->required();
    publish->add_option("--connector", flags.connector, "Connector base URL");

    auto* catalog = app.add_subcommand("catalog", "List tokenized services");

    std::string service, value, out_file, to, amount, token;
    auto* buy = app.add_subcommand("buy", "Buy one access token at the listed price");
    buy->add_option("--service", service, "Service contract")->required();
    buy->add_option("--value", value, "Attach this value instead of the listed price");

    auto* access = app.add_subcommand("access", "Present the credential and fetch the payload");
    access->add_option("--service", service, "Service contract")->required();
    access->add_option("--out", out_file, "Write the payload here instead of stdout");

    auto* balance = app.add_subcommand("balance", "Native balance, or an access token balance");
    balance->add_option("--token", token, "Access token contract");

    auto* transfer = app.add_subcommand("transfer", "Send native tokens or access tokens");
    transfer->add_option("--to", to, "Recipient")->required();
    transfer->add_option("--amount", amount, "Whole tokens")->required();
    transfer->add_option("--token", token, "Access token contract; native when absent");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    auto emit = [&](const Json& j) {
        if (json) {
            out << j.dump() << "\n";
        } else {
            print_human(out, j);
        }
    };

    try {
        WalletConfig cfg = resolve_config(flags, env);
        if (passphrase.empty()) passphrase = env.get("MEDSIM_PASSPHRASE").value_or("");
        Session s(cfg, passphrase);

        if (create->parsed()) {
            if (std::filesystem::exists(cfg.keystore) && !force) {
                throw Error(Errc::duplicate, "keystore exists: " + cfg.keystore.string() + " (use --force)");
            }
            s.passphrase();
            std::unique_ptr<Entropy> e;
            if (seed.empty()) {
                e = std::make_unique<SystemEntropy>();
            } else {
                e = std::make_unique<DeterministicEntropy>(fixed_from_hex<32>(seed));
            }
            wallet::Identity id = wallet::Identity::generate(*e);
            if (!offline) s.backend().publish_did(id.document);
            s.save(id);
            emit(Json{{"did", id.did().str()},
                      {"eoa", id.wallet.eoa().str()},
                      {"keystore", cfg.keystore.string()},
                      {"published", !offline}});
        } else if (show->parsed()) {
            auto& id = s.identity();
            Json j{{"did", id.did().str()}, {"eoa", id.wallet.eoa().str()}, {"credential", nullptr}};
            if (id.credential) {
                auto vc = creds::VerifiableCredential::from_jwt(*id.credential);
                j["credential"] = vc.id;
                j["expires"] = format_utc(vc.expiration_date);
            }
            if (json) j["document"] = id.document.to_json();
            emit(j);
        } else if (publish_did->parsed()) {
            s.agent().publish_identity();
            emit(Json{{"did", s.identity().did().str()}, {"published", true}});
        } else if (join->parsed()) {
            auto vc = s.agent().join();
            s.save(s.identity());
            emit(Json{{"credential", vc.id}, {"issuer", vc.issuer.str()}, {"expires", format_utc(vc.expiration_date)}});
        } else if (publish->parsed()) {
            if (payload.empty() == payload_file.empty()) {
                throw Error(Errc::invalid_argument, "give exactly one of --payload and --payload-file");
            }
            if (cfg.connector.empty()) throw Error(Errc::invalid_argument, "no connector configured (--connector)");
            wallet::PublishRequest req;
            req.connector_url = cfg.connector;
            req.payload = to_bytes(payload_file.empty() ? payload : read_file(payload_file));
            req.description = parse_json(description.rfind('@', 0) == 0 ? read_file(description.substr(1)) : description);
            req.alias = alias;
            req.supply = parse_tokens(supply);
            req.price = parse_tokens(price);
            auto r = s.agent().publish(req);
            require_ok(r.receipt);
            emit(Json{{"service", r.service->str()},
                      {"access_token", r.access_token->str()},
                      {"service_url", r.hosted.service_url},
                      {"cid", r.hosted.cid.str()}});
        } else if (catalog->parsed()) {
            auto entries = wallet::Agent(s.backend(), s.identity()).catalog();
            if (json) {
                Json arr = Json::array();
                for (const auto& e : entries) {
                    Json j = e.offering.to_json();
                    j["active"] = e.active;
                    j["description"] = e.description ? *e.description : Json(nullptr);
                    j["own"] = e.offering.owner == s.identity().wallet.eoa();
                    arr.push_back(std::move(j));
                }
                out << Json{{"services", arr}}.dump() << "\n";
            } else {
                out << std::left << std::setw(44) << "SERVICE" << std::setw(20) << "ALIAS" << std::setw(12) << "PRICE"
                    << std::setw(8) << "ACTIVE" << "OWNER\n";
                for (const auto& e : entries) {
                    out << std::setw(44) << e.offering.service_contract.str() << std::setw(20) << e.offering.alias
                        << std::setw(12) << format_tokens(e.offering.price) << std::setw(8)
                        << (e.active ? "yes" : "no") << e.offering.owner.str() << "\n";
                }
            }
        } else if (buy->parsed()) {
            auto agent = s.agent();
            auto svc = Address::parse(service);
            auto r = value.empty() ? agent.buy(svc) : agent.buy(svc, parse_tokens(value));
            require_ok(r);
            emit(receipt_summary(r));
        } else if (access->parsed()) {
            auto r = s.agent().access(Address::parse(service));
            if (!r.decision.granted) throw Denied{r.decision};
            if (!out_file.empty()) {
                std::ofstream f(out_file, std::ios::binary);
                f << to_string(*r.payload);
                if (!f) throw Error(Errc::internal, "cannot write " + out_file);
                emit(Json{{"granted", true}, {"bytes", r.payload->size()}, {"out", out_file}});
            } else if (json) {
                emit(Json{{"granted", true}, {"bytes", r.payload->size()}, {"payload", base64url_encode(*r.payload)}});
            } else {
                out << to_string(*r.payload);
            }
        } else if (balance->parsed()) {
            auto agent = s.agent();
            Json j{{"eoa", agent.eoa().str()}, {"native", format_tokens(agent.native_balance())}};
            if (!token.empty()) j["token"] = format_tokens(agent.token_balance(Address::parse(token)));
            emit(j);
        } else if (transfer->parsed()) {
            auto agent = s.agent();
            auto dest = Address::parse(to);
            Amount a = parse_tokens(amount);
            auto r = token.empty() ? agent.transfer_native(dest, a) : agent.transfer_token(Address::parse(token), dest, a);
            require_ok(r);
            emit(receipt_summary(r));
        }
        return kExitOk;
    } catch (const Denied& d) {
        int stage = static_cast<int>(*d.decision.stage);
        if (json) {
            out << d.decision.to_json().dump() << "\n";
        } else {
            err << "denied: stage " << stage << " " << connector::stage_code(*d.decision.stage) << ": "
                << d.decision.reason << "\n";
        }
        return kExitDenied + stage;
    } catch (const Reverted& r) {
        if (json) {
            out << Json{{"status", "reverted"}, {"error", r.reason}}.dump() << "\n";
        } else {
            err << "reverted: " << r.reason << "\n";
        }
        return kExitReverted;
    } catch (const Error& e) {
        if (json) {
            out << Json{{"error", {{"code", errc_name(e.code())}, {"message", e.what()}}}}.dump() << "\n";
        } else {
            err << "error: " << errc_name(e.code()) << ": " << e.what() << "\n";
        }
        return e.code() == Errc::reverted ? kExitReverted : kExitError;
    }
}

}  // namespace medsim::cli
