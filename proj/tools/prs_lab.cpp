// Copyright 2026 The prs-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>

#include "prslab/errors.hpp"
#include "prslab/kernels.hpp"
#include "prslab/lab.hpp"

namespace {

constexpr int kExitFlagsFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRuntime = 3;

nlohmann::json parse_value(const std::string& text) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error&) {
        return text;
    }
}

}  // namespace

namespace {

const std::map<std::string, std::string> kDescriptions = {
    {"hybrids-check", "Exact hybrid density matrices and trace distances on an (N, t) grid"},
    {"attack-run", "Gram-projection or purity distinguisher against the generator"},
    {"tomography-bench", "Error of base and boosted Pauli tomography"},
    {"verify-correctness", "Valid/Invalid rates of verifiable tomography"},
    {"commit-demo", "Commit/reveal round trips, extractor and garbage transcripts"},
    {"binding-search", "Exhaustive double-opening search over key pairs"},
    {"otp-demo", "Pseudo one-time pad encryption round trips"},
    {"smallrange-stats", "Marginal and collision statistics of small-range tables"},
};

}  // namespace

int main(int argc, char** argv) {
    using prslab::lab::ConfigError;
    CLI::App app{"Experiment runner for pseudorandom-state constructions and protocols", "prs-lab"};
    app.require_subcommand(1);
    app.set_version_flag("--version", prslab::lab::kToolVersion);

    std::string config_path;
    std::optional<std::uint64_t> seed, trials;
    std::optional<std::string> preset, out;
    std::optional<unsigned> workers;
    std::vector<std::string> sets;
    std::string attack_kind;
    bool quiet = false;

    for (const auto& name : prslab::lab::experiment_names()) {
        auto* sub = app.add_subcommand(name, kDescriptions.at(name));
        sub->add_option("--config", config_path, "JSON config file")->required()->check(CLI::ExistingFile);
        sub->add_option("--seed", seed, "Master seed (overrides the config)");
        sub->add_option("--trials", trials, "Trial count (overrides the config)");
        sub->add_option("--preset", preset, "Parameter preset")->check(CLI::IsMember({"paper", "desk"}));
        sub->add_option("--out", out, "Report directory");
        sub->add_option("--workers", workers, "Worker threads (0 = all cores)");
        sub->add_option("--set", sets, "Override a parameter: key=value (value parsed as JSON when possible)");
        sub->add_flag("--quiet", quiet, "Only print the verdict line");
        if (name == "attack-run") {
            sub->add_option("kind", attack_kind, "gram or purity")->check(CLI::IsMember({"gram", "purity"}));
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitUsage;
    }
    const std::string experiment = app.get_subcommands().front()->get_name();

    prslab::lab::Report report;
    std::filesystem::path out_dir;
    try {
        std::ifstream in(config_path);
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(in);
        } catch (const nlohmann::json::parse_error& e) {
            throw ConfigError(config_path + ": " + e.what());
        }
        auto config = prslab::lab::config_from_json(doc, experiment);
        if (seed) config.seed = *seed;
        if (trials) config.trials = *trials;
        if (preset) config.preset = *preset;
        if (out) config.out = *out;
        if (workers) config.workers = *workers;
        if (!attack_kind.empty()) config.params["kind"] = attack_kind;
        for (const auto& s : sets) {
            auto eq = s.find('=');
            if (eq == std::string::npos || eq == 0) throw ConfigError("--set: expected key=value, got '" + s + "'");
            config.params[s.substr(0, eq)] = parse_value(s.substr(eq + 1));
        }
        if (const char* cache = std::getenv("PRS_LAB_CACHE"); cache && *cache) config.cache = cache;
        out_dir = config.out.empty() ? std::filesystem::path("prs-lab-out") : config.out;
        report = prslab::lab::run(config);
    } catch (const ConfigError& e) {
        std::cerr << "prs-lab: invalid config: " << e.what() << "\n";
        return kExitUsage;
    } catch (const prslab::InfeasibleError& e) {
        std::cerr << "prs-lab: infeasible: " << e.what() << "\n";
        return kExitRuntime;
    } catch (const std::exception& e) {
        std::cerr << "prs-lab: error: " << e.what() << "\n";
        return kExitRuntime;
    }

    try {
        auto files = prslab::lab::write_report(report, out_dir);
        if (!quiet) {
            std::cout << "kernels: " << prslab::kernels::isa_name(prslab::kernels::active().isa) << "\n";
            for (const auto& f : report.flags) {
                std::cout << (f.pass ? "PASS " : "FAIL ") << f.name << ": " << f.value << " " << f.relation << " "
                          << f.bound << "  [" << f.anchor << "]\n";
            }
            for (const auto& f : files) std::cout << "wrote " << f.string() << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "prs-lab: error: " << e.what() << "\n";
        return kExitRuntime;
    }
    std::cout << experiment << ": " << (report.all_pass() ? "all flags pass" : "some flags FAILED") << " ("
              << report.flags.size() << " flags, " << report.wall_seconds << " s)\n";
    return report.all_pass() ? 0 : kExitFlagsFailed;
}
