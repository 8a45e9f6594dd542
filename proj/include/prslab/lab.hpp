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

#pragma once

#include <cstdint>
#include <filesystem>
#include <nlohmann/json.hpp>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "prslab/report.hpp"

namespace prslab::lab {

/// Invalid configuration; the message starts with the offending field path.
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ExperimentConfig {
    std::string experiment;
    nlohmann::json params = nlohmann::json::object();
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> trials;
    std::string preset = "desk";
    std::filesystem::path out;
    unsigned workers = 1;
    /// Fixture directory (PRS_LAB_CACHE); empty disables fixture checks.
    std::filesystem::path cache;

    void validate() const;
    /// Everything that determines the report content.
    nlohmann::json echo() const;
};

const std::vector<std::string>& experiment_names();

/// Reads the section named after `experiment` when the document has one,
/// otherwise the document itself. Recognized keys: seed, trials, preset,
/// workers, out, params.
ExperimentConfig config_from_json(const nlohmann::json& doc, const std::string& experiment);

/// Typed access to config.params with field-path errors.
class Params {
   public:
    explicit Params(const nlohmann::json& params, std::string prefix = "params") : j_(params), prefix_(std::move(prefix)) {}

    bool has(const std::string& key) const { return j_.contains(key); }
    std::int64_t integer(const std::string& key, std::int64_t fallback) const;
    double number(const std::string& key, double fallback) const;
    bool boolean(const std::string& key, bool fallback) const;
    std::string string(const std::string& key, const std::string& fallback) const;
    Params child(const std::string& key) const;
    const nlohmann::json& raw(const std::string& key) const;
    std::string path(const std::string& key) const { return prefix_ + "." + key; }

   private:
    static const nlohmann::json& empty();
    nlohmann::json j_;
    std::string prefix_;
};

Report run(const ExperimentConfig& config);

Report run_hybrids_check(const ExperimentConfig& config);
Report run_attack(const ExperimentConfig& config);
Report run_tomography_bench(const ExperimentConfig& config);
Report run_verify_correctness(const ExperimentConfig& config);
Report run_commit_demo(const ExperimentConfig& config);
Report run_binding_search(const ExperimentConfig& config);
Report run_otp_demo(const ExperimentConfig& config);
Report run_smallrange_stats(const ExperimentConfig& config);

}  // namespace prslab::lab
