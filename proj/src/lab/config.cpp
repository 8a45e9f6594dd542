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

#include <algorithm>
#include <chrono>

#include "prslab/errors.hpp"
#include "prslab/lab.hpp"

namespace prslab::lab {

namespace {

const std::vector<std::string> kExperiments = {"hybrids-check",       "attack-run",     "tomography-bench",
                                               "verify-correctness",  "commit-demo",    "binding-search",
                                               "otp-demo",            "smallrange-stats"};

std::uint64_t read_u64(const nlohmann::json& j, const std::string& path) {
    if (!j.is_number_integer() || (j.is_number_integer() && !j.is_number_unsigned() && j.get<std::int64_t>() < 0)) {
        throw ConfigError(path + ": expected a non-negative integer");
    }
    return j.get<std::uint64_t>();
}

}  // namespace

const std::vector<std::string>& experiment_names() { return kExperiments; }

void ExperimentConfig::validate() const {
    if (std::find(kExperiments.begin(), kExperiments.end(), experiment) == kExperiments.end()) {
        throw ConfigError("experiment: unknown experiment '" + experiment + "'");
    }
    if (!seed) {
        throw ConfigError("seed: required (set it in the config or pass --seed)");
    }
    if (preset != "paper" && preset != "desk") {
        throw ConfigError("preset: expected 'paper' or 'desk', got '" + preset + "'");
    }
    if (trials && *trials == 0) {
        throw ConfigError("trials: must be positive");
    }
    if (!params.is_object()) {
        throw ConfigError("params: expected an object");
    }
}

nlohmann::json ExperimentConfig::echo() const {
    nlohmann::json j = {{"experiment", experiment}, {"preset", preset}, {"params", params}};
    j["seed"] = seed ? nlohmann::json(*seed) : nlohmann::json(nullptr);
    j["trials"] = trials ? nlohmann::json(*trials) : nlohmann::json(nullptr);
    return j;
}

ExperimentConfig config_from_json(const nlohmann::json& doc, const std::string& experiment) {
    if (!doc.is_object()) {
        throw ConfigError("<root>: expected a JSON object");
    }
    const nlohmann::json& section = doc.contains(experiment) ? doc.at(experiment) : doc;
    std::string prefix = doc.contains(experiment) ? experiment + "." : "";
    if (!section.is_object()) {
        throw ConfigError(experiment + ": expected an object");
    }
    ExperimentConfig c;
    c.experiment = experiment;
    for (const auto& [key, value] : section.items()) {
        const std::string path = prefix + key;
        if (key == "seed") {
            c.seed = read_u64(value, path);
        } else if (key == "trials") {
            c.trials = read_u64(value, path);
        } else if (key == "workers") {
            c.workers = static_cast<unsigned>(read_u64(value, path));
        } else if (key == "preset") {
            if (!value.is_string()) throw ConfigError(path + ": expected a string");
            c.preset = value.get<std::string>();
        } else if (key == "out") {
            if (!value.is_string()) throw ConfigError(path + ": expected a string");
            c.out = value.get<std::string>();
        } else if (key == "params") {
            if (!value.is_object()) throw ConfigError(path + ": expected an object");
            c.params = value;
        } else if (key == "experiment" || key == "comment") {
            continue;
        } else if (std::find(kExperiments.begin(), kExperiments.end(), key) != kExperiments.end()) {
            continue;
        } else {
            throw ConfigError(path + ": unknown key");
        }
    }
    return c;
}

const nlohmann::json& Params::empty() {
    static const nlohmann::json e = nlohmann::json::object();
    return e;
}

std::int64_t Params::integer(const std::string& key, std::int64_t fallback) const {
    if (!j_.contains(key)) return fallback;
    const auto& v = j_.at(key);
    if (!v.is_number_integer()) throw ConfigError(path(key) + ": expected an integer");
    return v.get<std::int64_t>();
}

double Params::number(const std::string& key, double fallback) const {
    if (!j_.contains(key)) return fallback;
    const auto& v = j_.at(key);
    if (!v.is_number()) throw ConfigError(path(key) + ": expected a number");
    return v.get<double>();
}

bool Params::boolean(const std::string& key, bool fallback) const {
    if (!j_.contains(key)) return fallback;
    const auto& v = j_.at(key);
    if (!v.is_boolean()) throw ConfigError(path(key) + ": expected a boolean");
    return v.get<bool>();
}

std::string Params::string(const std::string& key, const std::string& fallback) const {
    if (!j_.contains(key)) return fallback;
    const auto& v = j_.at(key);
    if (!v.is_string()) throw ConfigError(path(key) + ": expected a string");
    return v.get<std::string>();
}

Params Params::child(const std::string& key) const {
    if (!j_.contains(key)) return Params(empty(), path(key));
    const auto& v = j_.at(key);
    if (!v.is_object()) throw ConfigError(path(key) + ": expected an object");
    return Params(v, path(key));
}

const nlohmann::json& Params::raw(const std::string& key) const {
    return j_.contains(key) ? j_.at(key) : empty();
}

Report run(const ExperimentConfig& config) {
    config.validate();
    auto start = std::chrono::steady_clock::now();
    Report r;
    const auto& e = config.experiment;
    try {
        if (e == "hybrids-check") r = run_hybrids_check(config);
        else if (e == "attack-run") r = run_attack(config);
        else if (e == "tomography-bench") r = run_tomography_bench(config);
        else if (e == "verify-correctness") r = run_verify_correctness(config);
        else if (e == "commit-demo") r = run_commit_demo(config);
        else if (e == "binding-search") r = run_binding_search(config);
        else if (e == "otp-demo") r = run_otp_demo(config);
        else r = run_smallrange_stats(config);
    } catch (const DomainError& err) {
        throw ConfigError(std::string("params: ") + err.what());
    }
    r.experiment = e;
    r.config = config.echo();
    r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

}  // namespace prslab::lab
