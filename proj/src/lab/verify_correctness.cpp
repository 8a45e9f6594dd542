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

#include "common.hpp"
#include "prslab/parallel.hpp"
#include "prslab/tomography.hpp"

namespace prslab::lab {

using detail::num;

namespace {

struct KeyRow {
    std::string key;
    std::string input;
    int b = 0;
    bool same_valid = false;
    bool wrong_valid = false;
    double same_distance = 0.0;
    double wrong_distance = 0.0;
    bool good = true;
    bool failed = false;
};

tomo::VerifyParams make_params(const ExperimentConfig& config, tomo::Instantiation inst, const GeneratorParams& gen,
                               tomo::Mode mode, const Params& p) {
    auto v = config.preset == "paper" ? tomo::paper_preset(inst, gen, mode) : tomo::desk_preset(inst, gen, mode);
    if (p.has("s")) v.s = p.number("s", v.s);
    v.reps = detail::int_param(p, "reps", v.reps, 1, 4096);
    v.abort_check_conjugated = p.boolean("abort_check_conjugated", true);
    try {
        v.validate();
    } catch (const std::exception& e) {
        throw ConfigError(p.path("s") + ": " + e.what());
    }
    return v;
}

}  // namespace

Report run_verify_correctness(const ExperimentConfig& config) {
    Params p(config.params);
    auto gen = detail::generator_params(p, 8, 1, 3);
    tomo::Mode mode;
    try {
        mode = tomo::parse_mode(p.string("mode", "sampled"));
    } catch (const std::exception& e) {
        throw ConfigError(p.path("mode") + ": " + e.what());
    }
    auto which = p.string("instantiation", "both");
    if (which != "1" && which != "2" && which != "both") {
        throw ConfigError(p.path("instantiation") + ": expected \"1\", \"2\" or \"both\"");
    }
    double eta = p.number("eta", 1.0);
    if (!(eta > 0.0 && eta <= 1.0)) throw ConfigError(p.path("eta") + ": expected a value in (0, 1]");
    AbortModel abort = AbortModel::constant(eta);
    std::uint64_t keys = config.trials.value_or(100);
    Rng master(*config.seed);

    Report r;
    r.table = Table{{"instantiation", "key", "input", "b", "same_valid", "wrong_bit_valid", "same_distance",
                     "wrong_distance", "key_good"},
                    {}};
    auto emit = [&](const std::string& tag, const tomo::VerifyParams& vp, const std::vector<KeyRow>& rows,
                    bool assert_wrong) {
        std::uint64_t same = 0, wrong_invalid = 0, good = 0, failed = 0;
        for (const auto& row : rows) {
            same += row.same_valid;
            wrong_invalid += !row.wrong_valid;
            good += row.good;
            failed += row.failed;
            r.table->rows.push_back({tag, row.key, row.input, std::to_string(row.b), row.same_valid ? "1" : "0",
                                     row.wrong_valid ? "1" : "0", num(row.same_distance), num(row.wrong_distance),
                                     row.good ? "1" : "0"});
        }
        double same_rate = detail::rate(same, rows.size());
        double wrong_rate = detail::rate(wrong_invalid, rows.size());
        r.metrics["instantiation_" + tag] = {{"N", vp.N()},
                                             {"s", vp.s},
                                             {"reps", vp.reps},
                                             {"mode", tomo::mode_name(vp.mode)},
                                             {"accept_threshold", vp.accept_threshold()},
                                             {"cluster_radius", vp.budget().cluster_radius()},
                                             {"copies", vp.copies().str()},
                                             {"keys", rows.size()},
                                             {"same_input_valid_rate", same_rate},
                                             {"wrong_bit_invalid_rate", wrong_rate},
                                             {"good_key_rate", detail::rate(good, rows.size())},
                                             {"tomography_aborts", failed}};
        r.flags.push_back(flag_ge("same_input_valid_rate[inst=" + tag + "]", same_rate, 0.99,
                                  "honest tomograph of the same input is accepted"));
        if (assert_wrong) {
            r.flags.push_back(flag_ge("wrong_bit_invalid_rate[inst=" + tag + "]", wrong_rate, 0.95,
                                      "tomograph for the other bit is rejected"));
        }
    };

    if (which != "2") {
        auto vp = make_params(config, tomo::Instantiation::First, gen, mode, p);
        std::vector<KeyRow> rows(keys);
        Rng sub = master.derive(1);
        parallel_for(keys, config.workers, [&](std::size_t i) {
            Rng rng = sub.derive(i);
            tomo::ChannelFirstInput in{qc::pauli_sample(gen.n, rng), PrfKey::random(gen.lambda, rng),
                                       BitString::from_uint(rng.below(std::uint64_t{1} << gen.d), gen.d),
                                       static_cast<int>(rng.below(2))};
            auto M = tomo::tomograph_channel(tomo::channel_first(in, gen, abort), vp, rng);
            auto& row = rows[i];
            row.key = in.k.hex();
            row.input = in.P.str() + ":" + in.x.str();
            row.b = in.b;
            row.failed = M.aborted;
            auto same = tomo::verify_first(in, M, vp, abort, rng);
            auto wrong_in = in;
            wrong_in.b = 1 - in.b;
            auto wrong = tomo::verify_first(wrong_in, M, vp, abort, rng);
            row.same_valid = same.verdict == tomo::Verdict::Valid;
            row.wrong_valid = wrong.verdict == tomo::Verdict::Valid;
            row.same_distance = same.distance;
            row.wrong_distance = wrong.distance;
        });
        emit("1", vp, rows, false);
    }
    if (which != "1") {
        GeneratorParams gen2 = gen;
        gen2.d = gen.d + 1;
        auto vp = make_params(config, tomo::Instantiation::Second, gen2, mode, p);
        std::vector<KeyRow> rows(keys);
        Rng sub = master.derive(2);
        parallel_for(keys, config.workers, [&](std::size_t i) {
            Rng rng = sub.derive(i);
            tomo::ChannelSecondInput in{PrfKey::random(gen.lambda, rng),
                                        BitString::from_uint(rng.below(std::uint64_t{1} << gen.d), gen.d),
                                        static_cast<int>(rng.below(2))};
            auto M = tomo::tomograph_channel(tomo::channel_second(in, gen2), vp, rng);
            auto& row = rows[i];
            row.key = in.k.hex();
            row.input = in.i.str();
            row.b = in.b;
            row.failed = M.aborted;
            row.good = tomo::key_is_good(in.k, in.i, vp);
            auto same = tomo::verify_second(in, M, vp, rng);
            auto wrong_in = in;
            wrong_in.b = 1 - in.b;
            auto wrong = tomo::verify_second(wrong_in, M, vp, rng);
            row.same_valid = same.verdict == tomo::Verdict::Valid;
            row.wrong_valid = wrong.verdict == tomo::Verdict::Valid;
            row.same_distance = same.distance;
            row.wrong_distance = wrong.distance;
        });
        emit("2", vp, rows, true);
    }
    return r;
}

}  // namespace prslab::lab
