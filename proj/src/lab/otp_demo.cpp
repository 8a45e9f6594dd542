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
#include "prslab/protocols.hpp"

namespace prslab::lab {

namespace {

struct OtpRun {
    std::string msg;
    std::string decrypted;
    std::string wrong_key;
    std::size_t bit_errors = 0;
    std::size_t wrong_key_distance = 0;
};

std::size_t hamming(const BitString& a, const BitString& b) {
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
    return d;
}

}  // namespace

Report run_otp_demo(const ExperimentConfig& config) {
    Params p(config.params);
    auto gen = detail::generator_params(p, 16, 3, 5);
    int bits_log2 = gen.d;
    std::uint64_t messages = config.trials.value_or(20);
    Rng master(*config.seed);
    Report r;
    r.table = Table{{"mode", "message", "decrypted", "bit_errors", "wrong_key_output", "wrong_key_hamming"}, {}};

    auto run_mode = [&](tomo::Mode mode, std::uint64_t stream) {
        auto params = config.preset == "paper" ? proto::otp_paper_preset(gen.lambda, mode, gen.variant)
                                               : proto::otp_desk_preset(gen.lambda, bits_log2, gen.n, mode, gen.variant);
        params.verify.gen.prf_seed = gen.prf_seed;
        std::size_t bits = std::size_t{1} << (params.d() - 1);
        std::vector<OtpRun> runs(messages);
        Rng sub = master.derive(stream);
        parallel_for(messages, config.workers, [&](std::size_t i) {
            Rng rng = sub.derive(i);
            auto key = PrfKey::random(params.lambda(), rng);
            BitString msg(bits);
            for (std::size_t j = 0; j < bits; ++j) msg.set(j, rng.below(2) == 1);
            auto ct = proto::otp_encrypt(key, msg, params, rng);
            auto out = proto::otp_decrypt(key, ct, params, rng);
            auto other = PrfKey::random(params.lambda(), rng);
            auto garbled = proto::otp_decrypt(other, ct, params, rng);
            runs[i] = {msg.str(), out.str(), garbled.str(), hamming(msg, out), hamming(msg, garbled)};
        });
        std::uint64_t errors = 0, exact = 0, wrong_dist = 0;
        for (const auto& run : runs) {
            errors += run.bit_errors;
            exact += run.bit_errors == 0;
            wrong_dist += run.wrong_key_distance;
            r.table->rows.push_back({tomo::mode_name(mode), run.msg, run.decrypted, std::to_string(run.bit_errors),
                                     run.wrong_key, std::to_string(run.wrong_key_distance)});
        }
        std::uint64_t total = messages * bits;
        double bit_rate = 1.0 - detail::rate(errors, total);
        r.metrics[tomo::mode_name(mode)] = {{"lambda", params.lambda()},
                                            {"n", params.n()},
                                            {"message_bits", bits},
                                            {"s", params.verify.s},
                                            {"reps", params.verify.reps},
                                            {"copies_per_bit", params.verify.copies().str()},
                                            {"messages", messages},
                                            {"bit_accuracy", bit_rate},
                                            {"exact_messages", exact},
                                            {"wrong_key_mean_hamming", detail::rate(wrong_dist, messages)},
                                            {"half_message_bits", static_cast<double>(bits) / 2.0}};
        return bit_rate;
    };
    auto modes = p.string("modes", "both");
    if (modes != "both" && modes != "sampled" && modes != "analytic") {
        throw ConfigError(p.path("modes") + ": expected 'both', 'sampled' or 'analytic'");
    }
    if (modes != "sampled") {
        double acc = run_mode(tomo::Mode::Analytic, 1);
        r.flags.push_back(flag_eq("analytic_bit_accuracy", acc, 1.0, 0.0,
                                  "decryption recovers every bit from exact tomographs"));
    }
    if (modes != "analytic") {
        double acc = run_mode(tomo::Mode::Sampled, 2);
        r.flags.push_back(flag_ge("sampled_bit_accuracy", acc, 0.99,
                                  "decryption recovers each bit from sampled tomographs"));
    }
    return r;
}

}  // namespace prslab::lab
