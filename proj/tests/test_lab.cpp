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

#include <gtest/gtest.h>

#include <fstream>

#include "prslab/lab.hpp"

using namespace prslab::lab;
using nlohmann::json;

namespace {

std::string config_error(const json& doc, const std::string& experiment) {
    try {
        config_from_json(doc, experiment).validate();
    } catch (const ConfigError& e) {
        return e.what();
    }
    return "";
}

ExperimentConfig hybrids(json params) {
    ExperimentConfig c;
    c.experiment = "hybrids-check";
    c.seed = 1;
    c.params = std::move(params);
    return c;
}

}  // namespace

TEST(config, errors_name_the_field) {
    EXPECT_EQ(config_error({{"trials", 3}}, "hybrids-check").rfind("seed", 0), 0u);
    EXPECT_EQ(config_error({{"seed", 1}, {"bogus", 2}}, "hybrids-check").rfind("bogus", 0), 0u);
    EXPECT_EQ(config_error({{"seed", 1}, {"preset", "huge"}}, "hybrids-check").rfind("preset", 0), 0u);
    EXPECT_EQ(config_error({{"seed", 1}, {"trials", 0}}, "hybrids-check").rfind("trials", 0), 0u);
    EXPECT_EQ(config_error({{"seed", "one"}}, "hybrids-check").rfind("seed", 0), 0u);
    EXPECT_EQ(config_error({{"seed", 1}}, "hybrids-check"), "");
}

TEST(config, sections_select_the_experiment) {
    json doc = {{"otp-demo", {{"seed", 9}, {"trials", 4}}}, {"hybrids-check", {{"seed", 3}}}};
    auto c = config_from_json(doc, "otp-demo");
    EXPECT_EQ(c.seed, 9u);
    EXPECT_EQ(c.trials, 4u);
    EXPECT_EQ(config_from_json(doc, "hybrids-check").seed, 3u);
}

TEST(config, params_type_errors) {
    Params p(json{{"n", "three"}, {"eta", 0.5}, {"inner", {{"flag", 1}}}});
    EXPECT_THROW(p.integer("n", 1), ConfigError);
    EXPECT_DOUBLE_EQ(p.number("eta", 1.0), 0.5);
    EXPECT_EQ(p.integer("missing", 7), 7);
    try {
        p.child("inner").boolean("flag", false);
        FAIL();
    } catch (const ConfigError& e) {
        EXPECT_EQ(std::string(e.what()).rfind("params.inner.flag", 0), 0u);
    }
}

TEST(experiments, hybrids_check_small_grid_passes) {
    auto report = run(hybrids({{"grid", {{4, 2}}}}));
    EXPECT_TRUE(report.all_pass());
    EXPECT_FALSE(report.flags.empty());
    ASSERT_TRUE(report.table.has_value());
    EXPECT_EQ(report.table->rows.size(), 1u);
}

TEST(experiments, identical_seeds_give_identical_reports) {
    auto a = run(hybrids({{"grid", {{2, 2}, {4, 2}}}}));
    auto b = run(hybrids({{"grid", {{2, 2}, {4, 2}}}}));
    EXPECT_EQ(a.to_json(false).dump(), b.to_json(false).dump());
    ExperimentConfig sr;
    sr.experiment = "smallrange-stats";
    sr.seed = 5;
    sr.trials = 200;
    EXPECT_EQ(run(sr).to_json(false).dump(), run(sr).to_json(false).dump());
}

TEST(experiments, bad_parameters_are_config_errors) {
    EXPECT_THROW(run(hybrids({{"grid", {{0, 2}}}})), ConfigError);
    ExperimentConfig c = hybrids(json::object());
    c.experiment = "no-such-experiment";
    EXPECT_THROW(run(c), ConfigError);
}

TEST(report, csv_quoting) {
    Table t{{"a", "b"}, {{"x,y", "say \"hi\""}, {"1", "2"}}};
    EXPECT_EQ(render_csv(t), "a,b\n\"x,y\",\"say \"\"hi\"\"\"\n1,2\n");
}

TEST(report, svg_and_written_files) {
    Chart c{"title", "x", "y", {{"s1", {1, 2, 3}, {1, 4, 9}}}, false};
    auto svg = render_svg(c);
    EXPECT_EQ(svg.rfind("<svg", 0), 0u);
    EXPECT_NE(svg.find("s1"), std::string::npos);
    EXPECT_NE(svg.find("</svg>"), std::string::npos);

    Report r;
    r.experiment = "unit";
    r.flags.push_back(flag_le("f", 1, 2, "anchor"));
    r.flags.push_back(flag_eq("g", 1.0, 1.0 + 1e-12, 1e-9, "anchor"));
    r.table = Table{{"h"}, {{"v"}}};
    r.chart = c;
    EXPECT_TRUE(r.all_pass());
    r.flags.push_back(flag_ge("h", 0, 1, "anchor"));
    EXPECT_FALSE(r.all_pass());
    auto dir = std::filesystem::temp_directory_path() / "prslab_report_test";
    std::filesystem::remove_all(dir);
    auto files = write_report(r, dir);
    EXPECT_EQ(files.size(), 3u);
    for (const auto& f : files) EXPECT_TRUE(std::filesystem::exists(f));
    std::ifstream in(dir / "unit.json");
    auto j = json::parse(in);
    EXPECT_EQ(j.at("flags").size(), 3u);
}
