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

#include "medsim/harness/scenario.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "medsim/common/error.hpp"
#include "medsim/crypto/hash.hpp"
#include "medsim/node/ecosystem.hpp"
#include "medsim/wallet/agent.hpp"

namespace medsim::harness {

namespace {

constexpr std::string_view kConnectorUrl = "http://connector.harness";

const std::set<std::string, std::less<>> kOps = {
    "join", "publish", "buy", "access", "revoke", "advance_clock", "expire_vc",
    "transfer_at", "transfer", "mint", "burn", "deactivate",
};
const std::set<std::string, std::less<>> kFaults = {"", "corrupt_signature", "underpay", "force_revert"};
const std::set<std::string, std::less<>> kExpect = {"", "ok", "reverted", "denied", "error"};

bool needs_actor(std::string_view op) { return op != "advance_clock"; }

bool needs_service(std::string_view op) {
    return op == "publish" || op == "buy" || op == "access" || op == "transfer_at" || op == "mint" || op == "burn";
}

std::string corrupt_tail(std::string s) {
    // Inside the signature segment, clear of the padding bits.
    char& c = s[s.size() - 10];
    c = c == 'A' ? 'B' : 'A';
    return s;
}

}  // namespace

Scenario Scenario::from_json(const Json& j) {
    if (!j.is_object()) throw Error(Errc::malformed, "scenario must be a JSON object");
    Scenario s;
    s.name = j.value("name", "scenario");
    s.seed = require_string(j, "seed");
    if (j.contains("start_time")) s.start_time = require_int(j, "start_time");
    std::set<std::string, std::less<>> names;
    for (const auto& a : require_field(j, "actors")) {
        Actor actor{require_string(a, "name"), a.contains("funding") ? parse_tokens(require_string(a, "funding")) : 0};
        if (!names.insert(actor.name).second) throw Error(Errc::invalid_argument, "duplicate actor " + actor.name);
        s.actors.push_back(std::move(actor));
    }
    std::set<std::string, std::less<>> services;
    std::size_t i = 0;
    for (const auto& sj : require_field(j, "steps")) {
        Step step;
        step.op = require_string(sj, "op");
        std::string where = "step " + std::to_string(i++) + " (" + step.op + ")";
        if (!kOps.contains(step.op)) throw Error(Errc::invalid_argument, where + ": unknown op");
        step.actor = sj.value("actor", "");
        if (needs_actor(step.op) && !names.contains(step.actor)) {
            throw Error(Errc::invalid_argument, where + ": unknown actor '" + step.actor + "'");
        }
        for (const char* key : {"to"}) {
            if (sj.contains(key) && !names.contains(sj[key].get<std::string>())) {
                throw Error(Errc::invalid_argument, where + ": unknown actor '" + sj[key].get<std::string>() + "'");
            }
        }
        if (needs_service(step.op)) {
            std::string label = require_string(sj, "service");
            if (step.op == "publish") {
                if (!services.insert(label).second) throw Error(Errc::invalid_argument, where + ": service reused");
            } else if (!services.contains(label)) {
                throw Error(Errc::invalid_argument, where + ": unknown service '" + label + "'");
            }
        }
        step.fault = sj.value("fault", "");
        if (!kFaults.contains(step.fault)) throw Error(Errc::invalid_argument, where + ": unknown fault " + step.fault);
        step.expect = sj.value("expect", "");
        if (!kExpect.contains(step.expect)) throw Error(Errc::invalid_argument, where + ": bad expect");
        step.expect_stage = sj.value("expect_stage", 0);
        step.args = sj;
        s.steps.push_back(std::move(step));
    }
    return s;
}

Scenario Scenario::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::not_found, "cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return from_json(parse_json(ss.str()));
}

bool TranscriptReport::passed() const {
    if (!violations.empty()) return false;
    for (const auto& s : steps) {
        if (!s.met) return false;
    }
    return true;
}

Json TranscriptReport::to_json() const {
    Json st = Json::array();
    for (const auto& s : steps) {
        st.push_back({{"index", s.index}, {"op", s.op}, {"actor", s.actor}, {"status", s.status}, {"met", s.met},
                      {"detail", s.detail}});
    }
    Json ev = Json::array();
    for (const auto& e : events) ev.push_back(e.to_json());
    return Json{{"scenario", scenario},
                {"steps", std::move(st)},
                {"events", std::move(ev)},
                {"balances", balances},
                {"catalog", catalog},
                {"state_hash", state_hash},
                {"height", height},
                {"invariants", {{"checks", invariant_checks}, {"violations", violations}}},
                {"passed", passed()}};
}

namespace {

struct Published {
    Bytes payload;
    Address service;
    Address token;
    std::string service_url;
};

class Runner {
public:
    explicit Runner(const Scenario& s) : s_(s) {
        DeterministicEntropy keys(crypto::sha256(as_bytes("actors:" + s.seed)));
        node::EcosystemOptions opts;
        opts.seed = crypto::sha256(as_bytes(s.seed));
        opts.start_time = s.start_time;
        for (const auto& a : s.actors) {
            ids_.emplace(a.name, std::make_unique<wallet::Identity>(wallet::Identity::generate(keys)));
            if (a.funding > 0) opts.allocations[ids_.at(a.name)->wallet.eoa()] = a.funding;
            supply_ += a.funding;
        }
        eco_ = std::make_unique<node::Ecosystem>(opts);
        eco_->add_connector(std::string(kConnectorUrl));
        backend_ = std::make_unique<wallet::InProcessBackend>(*eco_);
        for (const auto& a : s.actors) agents_.emplace(a.name, wallet::Agent(*backend_, *ids_.at(a.name)));
    }

    TranscriptReport run() {
        TranscriptReport r;
        r.scenario = s_.name;
        for (std::size_t i = 0; i < s_.steps.size(); ++i) {
            const Step& step = s_.steps[i];
            Hash32 before = chain().state_hash();
            StepOutcome o{i, step.op, step.actor, "ok", true, Json::object()};
            if (step.fault == "force_revert") chain().inject_revert_next("FORCED_REVERT");
            try {
                execute(step, o);
            } catch (const Error& e) {
                o.status = e.code() == Errc::reverted ? "reverted" : "error";
                o.detail["error"] = {{"code", errc_name(e.code())}, {"message", e.what()}};
            }
            if (step.fault == "force_revert") chain().inject_revert_next("");
            o.met = meets(step, o);
            check(r, o, before);
            r.steps.push_back(std::move(o));
        }
        r.events = chain().events();
        for (const auto& a : s_.actors) {
            Json tokens = Json::object();
            for (const auto& [label, p] : published_) tokens[label] = format_tokens(token_balance(p.token, eoa(a.name)));
            r.balances[a.name] = {{"eoa", eoa(a.name).str()},
                                  {"native", format_tokens(chain().balance(eoa(a.name)))},
                                  {"tokens", std::move(tokens)}};
        }
        r.catalog = chain().call_static(eco_->addresses().factory, "listOfferings", Json::object());
        r.state_hash = to_hex(chain().state_hash());
        r.height = chain().height();
        return r;
    }

private:
    scp::Chain& chain() { return eco_->chain(); }
    wallet::Agent& agent(const std::string& n) { return agents_.at(n); }
    wallet::Identity& id(const std::string& n) { return *ids_.at(n); }
    Eoa eoa(const std::string& n) { return ids_.at(n)->wallet.eoa(); }
    const Published& svc(const Step& st) { return published_.at(st.args.at("service").get<std::string>()); }

    Amount token_balance(const Address& token, const Address& who) {
        return parse_amount(chain().call_static(token, "balanceOf", {{"account", who.str()}}).get<std::string>());
    }

    Amount arg_tokens(const Step& st, const char* key, Amount fallback) {
        return st.args.contains(key) ? parse_tokens(st.args[key].get<std::string>()) : fallback;
    }

    void receipt(const scp::Receipt& rc, StepOutcome& o) {
        o.detail["tx"] = rc.tx_hash;
        o.detail["height"] = rc.height;
        if (!rc.ok()) {
            o.status = "reverted";
            o.detail["reason"] = rc.error;
        }
    }

    scp::Receipt send_corrupted(const std::string& actor, const Address& to, std::string method, Json args,
                                Amount value) {
        scp::Transaction tx;
        tx.from = eoa(actor);
        tx.to = to;
        tx.method = std::move(method);
        tx.args = std::move(args);
        tx.value = value;
        tx.nonce = chain().nonce(tx.from);
        tx.sign(id(actor).wallet);
        Bytes sig = tx.signature->bytes();
        sig[10] ^= 0x01;
        tx.signature = crypto::Signature(crypto::Scheme::wallet, sig);
        return chain().submit(tx);
    }

    void execute(const Step& st, StepOutcome& o) {
        const std::string& op = st.op;
        if (op == "join") {
            auto& who = id(st.actor);
            if (!joined_published_.contains(st.actor)) {
                agent(st.actor).publish_identity();
                joined_published_.insert(st.actor);
            }
            if (st.fault == "corrupt_signature") {
                auto ch = backend_->issuer_challenge(who.did());
                auto req = creds::make_credential_request(who.did(), ch.nonce_hex(), who.identity, who.wallet);
                Bytes w = req.sigma_w.bytes();
                w[5] ^= 0x01;
                req.sigma_w = crypto::Signature(crypto::Scheme::wallet, w);
                backend_->request_credential(req);
                return;
            }
            auto vc = agent(st.actor).join();
            o.detail["vc"] = vc.id;
            o.detail["expires"] = vc.expiration_date;
        } else if (op == "publish") {
            wallet::PublishRequest req;
            req.connector_url = std::string(kConnectorUrl);
            req.payload = to_bytes(st.args.value("payload", "payload:" + st.args.at("service").get<std::string>()));
            req.description = st.args.value("description", Json{{"name", st.args.at("service")}});
            req.alias = st.args.at("service");
            req.supply = arg_tokens(st, "supply", kWholeToken);
            req.price = arg_tokens(st, "price", kWholeToken);
            auto res = agent(st.actor).publish(req);
            receipt(res.receipt, o);
            o.detail["service_url"] = res.hosted.service_url;
            if (res.service) {
                published_[req.alias] = {req.payload, *res.service, *res.access_token, res.hosted.service_url};
                o.detail["service"] = res.service->str();
                o.detail["access_token"] = res.access_token->str();
            }
        } else if (op == "buy") {
            const auto& p = svc(st);
            Amount price = agent(st.actor).listed_price(p.service);
            Amount value = arg_tokens(st, "value", price);
            if (st.fault == "underpay") value = price - 1;
            o.detail["value"] = format_tokens(value);
            if (st.fault == "corrupt_signature") {
                receipt(send_corrupted(st.actor, eco_->addresses().exchange, "buy", {{"service", p.service.str()}},
                                       value),
                        o);
                return;
            }
            receipt(agent(st.actor).buy(p.service, value), o);
        } else if (op == "access") {
            const auto& p = svc(st);
            auto [base, sid] = node::split_service_url(p.service_url);
            auto ch = backend_->connector_challenge(base);
            std::string vp = agent(st.actor).presentation(ch.nonce_hex());
            if (st.fault == "corrupt_signature") vp = corrupt_tail(vp);
            auto d = backend_->request_access(base, sid, vp);
            o.detail["granted"] = d.granted;
            if (!d.granted) {
                o.status = "denied";
                o.detail["stage"] = static_cast<int>(*d.stage);
                o.detail["code"] = connector::stage_code(*d.stage);
                o.detail["reason"] = d.reason;
                return;
            }
            Bytes got = backend_->fetch_payload(base, sid, d.grant);
            o.detail["payload_match"] = got == p.payload;
            o.detail["bytes"] = got.size();
            if (got != p.payload) throw Error(Errc::mismatch, "payload differs from the published bytes");
        } else if (op == "revoke") {
            auto& who = id(st.actor);
            if (!who.credential) throw Error(Errc::invalid_argument, st.actor + " holds no credential");
            auto vc = creds::VerifiableCredential::from_jwt(*who.credential);
            eco_->issuer().revoke(vc.id);
            o.detail["vc"] = vc.id;
        } else if (op == "advance_clock") {
            std::int64_t secs = require_int(st.args, "seconds");
            if (secs < 0) throw Error(Errc::invalid_argument, "clock only moves forward");
            eco_->logical_clock()->advance(secs);
            o.detail["now"] = eco_->clock().now();
        } else if (op == "expire_vc") {
            auto& who = id(st.actor);
            if (!who.credential) throw Error(Errc::invalid_argument, st.actor + " holds no credential");
            auto vc = creds::VerifiableCredential::from_jwt(*who.credential);
            std::int64_t now = eco_->clock().now();
            if (vc.expiration_date >= now) eco_->logical_clock()->advance(vc.expiration_date - now + 1);
            o.detail["now"] = eco_->clock().now();
        } else if (op == "transfer_at") {
            const auto& p = svc(st);
            Amount amount = arg_tokens(st, "amount", kWholeToken);
            Address to = eoa(st.args.at("to").get<std::string>());
            receipt(agent(st.actor).transfer_token(p.token, to, amount), o);
        } else if (op == "transfer") {
            Amount amount = arg_tokens(st, "amount", kWholeToken);
            receipt(agent(st.actor).transfer_native(eoa(st.args.at("to").get<std::string>()), amount), o);
        } else if (op == "mint" || op == "burn") {
            const auto& p = svc(st);
            Amount amount = arg_tokens(st, "amount", kWholeToken);
            receipt(agent(st.actor).send(p.token, op, {{"amount", amount_to_string(amount)}}), o);
        } else if (op == "deactivate") {
            auto& who = id(st.actor);
            std::size_t version = eco_->registry().resolve(who.did()).version;
            auto proof = who.identity.sign(as_bytes(vdr::deactivate_proof_message(who.did(), version)));
            eco_->registry().deactivate(who.did(), proof);
        }
    }

    static bool meets(const Step& st, const StepOutcome& o) {
        std::string want = st.expect.empty() ? "ok" : st.expect;
        if (o.status != want) return false;
        if (st.expect_stage != 0 && o.detail.value("stage", 0) != st.expect_stage) return false;
        return true;
    }

    void check(TranscriptReport& r, const StepOutcome& o, const Hash32& before) {
        ++r.invariant_checks;
        std::string at = "step " + std::to_string(o.index) + " (" + o.op + "): ";
        if (chain().total_native_supply() != supply_) r.violations.push_back(at + "native supply changed");
        if (o.status != "ok" && chain().state_hash() != before) {
            r.violations.push_back(at + "failed step changed chain state");
        }
        // Every access token: balances sum to the supply, and the supply
        // equals mints minus burns seen in the event log.
        std::map<Address, Amount> minted, burned;
        const std::string zero = Address{}.str();
        for (const auto& e : chain().events()) {
            if (e.name != "Transfer" || chain().code_of(e.emitter) != "access_token") continue;
            Amount amt = parse_amount(e.payload.at("amount").get<std::string>());
            if (e.payload.at("from") == zero) minted[e.emitter] += amt;
            if (e.payload.at("to") == zero) burned[e.emitter] += amt;
        }
        Json ledger = chain().snapshot().at("ledger").at("contracts");
        for (const auto& [addr, c] : ledger.items()) {
            if (c.at("code") != "access_token") continue;
            const Json& state = c.at("state");
            Amount total = parse_amount(state.at("total_supply").get<std::string>());
            Amount sum = 0;
            for (const auto& [_, v] : state.at("balances").items()) sum += parse_amount(v.get<std::string>());
            Address a = Address::parse(addr);
            if (sum != total) r.violations.push_back(at + "token " + addr + " balances do not sum to supply");
            if (minted[a] - burned[a] != total) r.violations.push_back(at + "token " + addr + " supply != mints - burns");
        }
        if (o.op == "access" && o.status == "ok" && !o.detail.value("payload_match", false)) {
            r.violations.push_back(at + "granted payload differs");
        }
    }

    const Scenario& s_;
    Amount supply_ = 0;
    std::map<std::string, std::unique_ptr<wallet::Identity>> ids_;
    std::unique_ptr<node::Ecosystem> eco_;
    std::unique_ptr<wallet::InProcessBackend> backend_;
    std::map<std::string, wallet::Agent> agents_;
    std::map<std::string, Published> published_;
    std::set<std::string> joined_published_;
};

}  // namespace

TranscriptReport run(const Scenario& scenario) { return Runner(scenario).run(); }

}  // namespace medsim::harness
