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
#include <string>
#include <vector>

#include "medsim/common/amount.hpp"
#include "medsim/common/json.hpp"
#include "medsim/scp/types.hpp"

namespace medsim::harness {

struct Actor {
    std::string name;
    Amount funding = 0;
};

/// One scripted action. `args` keeps the step object as written.
struct Step {
    std::string op;
    std::string actor;
    std::string fault;   // "", corrupt_signature, underpay, force_revert
    std::string expect;  // "", ok, reverted, denied, error
    int expect_stage = 0;
    Json args = Json::object();
};

struct Scenario {
    std::string name;
    std::string seed;
    std::int64_t start_time = 1'700'000'000;
    std::vector<Actor> actors;
    std::vector<Step> steps;

    /// Errors: malformed, invalid_argument (unknown op, fault, actor or
    /// service label).
    static Scenario from_json(const Json& j);
    static Scenario load(const std::filesystem::path& path);
};

struct StepOutcome {
    std::size_t index = 0;
    std::string op;
    std::string actor;
    std::string status;  // ok, reverted, denied, error
    bool met = true;     // status (and stage) match the expectation
    Json detail = Json::object();
};

struct TranscriptReport {
    std::string scenario;
    std::vector<StepOutcome> steps;
    std::vector<scp::Event> events;
    Json balances = Json::object();
    Json catalog = Json::array();
    std::string state_hash;
    std::uint64_t height = 0;
    std::size_t invariant_checks = 0;
    std::vector<std::string> violations;

    bool passed() const;
    Json to_json() const;
    /// Canonical JSON; identical runs give identical bytes.
    std::string text() const { return canonical(to_json()); }
};

/// Boots a seeded in-process ecosystem, runs the steps in order and checks
/// conservation, token reconciliation and failed-step atomicity after each.
TranscriptReport run(const Scenario& scenario);

}  // namespace medsim::harness
