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

#include <iostream>

#include <CLI11.hpp>

#include "medsim/common/error.hpp"
#include "medsim/harness/scenario.hpp"

int main(int argc, char** argv) {
    using namespace medsim;
    CLI::App app{"medsim scenario harness", "medsim-harness"};
    app.require_subcommand(1);
    auto* run = app.add_subcommand("run", "Run a scenario file");
    std::string file;
    bool json_report = false;
    run->add_option("file", file, "Scenario JSON")->required();
    run->add_flag("--json-report", json_report, "Print the full transcript as JSON");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        auto report = harness::run(harness::Scenario::load(file));
        if (json_report) {
            std::cout << report.text() << "\n";
        } else {
            for (const auto& s : report.steps) {
                std::cout << "#" << s.index << " " << s.op << " " << s.actor << " " << s.status
                          << (s.met ? "" : "  UNEXPECTED") << "\n";
            }
            for (const auto& v : report.violations) std::cout << "violation: " << v << "\n";
            std::cout << (report.passed() ? "PASS" : "FAIL") << " " << report.scenario << " steps=" << report.steps.size()
                      << " height=" << report.height << " state=" << report.state_hash << "\n";
        }
        return report.passed() ? 0 : 1;
    } catch (const Error& e) {
        std::cerr << "error: " << errc_name(e.code()) << ": " << e.what() << "\n";
        return 1;
    }
}
