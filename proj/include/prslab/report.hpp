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

#include <filesystem>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

namespace prslab::lab {

inline constexpr const char* kToolVersion = "0.3.0";

/// One asserted bound. `anchor` names the statement being checked.
struct Flag {
    std::string name;
    bool pass = false;
    double value = 0.0;
    std::string relation;  // "<=", ">=", "=="
    double bound = 0.0;
    std::string anchor;

    nlohmann::json to_json() const;
};

Flag flag_le(std::string name, double value, double bound, std::string anchor);
Flag flag_ge(std::string name, double value, double bound, std::string anchor);
Flag flag_eq(std::string name, double value, double target, double tol, std::string anchor);

struct Series {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

struct Chart {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<Series> series;
    bool log_y = false;
};

/// Self-contained SVG line chart with axes, ticks and a legend.
std::string render_svg(const Chart& chart);

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

std::string render_csv(const Table& table);

struct Report {
    std::string experiment;
    nlohmann::json config;
    nlohmann::json metrics = nlohmann::json::object();
    std::vector<Flag> flags;
    double wall_seconds = 0.0;
    std::optional<Table> table;
    std::optional<Chart> chart;

    bool all_pass() const;
    /// Timing is the only field that may differ between identical runs.
    nlohmann::json to_json(bool include_timing = true) const;
};

/// Writes <experiment>.json and, when present, .csv and .svg into `dir`.
std::vector<std::filesystem::path> write_report(const Report& report, const std::filesystem::path& dir);

}  // namespace prslab::lab
