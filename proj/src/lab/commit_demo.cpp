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

#include <array>
#include <cmath>
#include <fstream>
#include <memory>

#include "common.hpp"
#include "prslab/protocols.hpp"
#include "prslab/wire.hpp"

namespace prslab::lab {

namespace {

class Channel {
   public:
    explicit Channel(bool loopback) {
        if (loopback) socket_ = std::make_unique<wire::Loopback>();
    }
    wire::Message carry(int from, const wire::Message& m) {
        if (socket_) {
            socket_->send(from, m);
            return socket_->receive(1 - from);
        }
        return wire::decode(wire::encode(m));
    }

   private:
    std::unique_ptr<wire::Loopback> socket_;
};

std::string fixture_key(const ExperimentConfig& config, const proto::ProtocolParams& params, const std::string& mode) {
    return std::to_string(*config.seed) + ":" + std::to_string(params.lambda()) + ":" + std::to_string(params.d()) +
           ":" + std::to_string(params.n()) + ":" + mode + ":" + variant_name(params.verify.gen.variant) + ":" +
           config.preset;
}

}  // namespace

Report run_commit_demo(const ExperimentConfig& config) {
    Params p(config.params);
    auto gen = detail::generator_params(p, 8, 1, 3);
    auto mode_str = p.string("mode", "analytic");
    tomo::Mode mode;
    try {
        mode = tomo::parse_mode(mode_str);
    } catch (const std::exception& e) {
        throw ConfigError(p.path("mode") + ": " + e.what());
    }
    auto params = config.preset == "paper" ? proto::commitment_paper_preset(gen.lambda, mode, gen.variant)
                                           : proto::commitment_desk_preset(gen.lambda, gen.d, gen.n, mode, gen.variant);
    params.verify.gen.prf_seed = gen.prf_seed;
    params.workers = config.workers;
    params.verify_seed = static_cast<std::uint64_t>(p.integer("verify_seed", static_cast<std::int64_t>(params.verify_seed)));
    int cap = detail::int_param(p, "extractor_cap", 14, 1, 24);
    bool run_extractor = p.boolean("extractor", true);
    auto transport = p.string("transport", "in-process");
    if (transport != "in-process" && transport != "loopback") {
        throw ConfigError(p.path("transport") + ": expected 'in-process' or 'loopback'");
    }
    std::uint64_t runs = config.trials.value_or(50);
    Channel channel(transport == "loopback");
    Rng master(*config.seed);

    std::uint64_t honest_ok = 0, wrong_rejected = 0, accepted = 0, agree = 0, disagree = 0, extractor_bottom = 0,
                  lossless = 0, commit_failures = 0;
    std::array<std::array<double, 16>, 2> nibble{};
    std::array<double, 2> per_bit{};
    Report r;
    r.table = Table{{"run", "b", "key", "digest", "reveal", "wrong_bit_reveal", "extractor"}, {}};
    std::string first_digest;
    std::optional<qc::PauliString> first_pauli;
    auto show = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string("bot"); };
    for (std::uint64_t run = 0; run < runs; ++run) {
        Rng rng = master.derive(run);
        int b = static_cast<int>(rng.below(2));
        auto P = proto::receiver_sample_pauli(params, rng);
        auto pm = channel.carry(1, {wire::kVersion, "receiver", {{"pauli", P.str()}}});
        auto P_recv = qc::PauliString::from_string(pm.payload.at("pauli").get<std::string>());
        auto commit = proto::committer_commit(b, P_recv, params, rng);
        commit_failures += commit.failed;
        auto cm = channel.carry(0, {wire::kVersion, "committer", proto::transcript_to_json(commit.transcript)});
        auto transcript = proto::transcript_from_json(cm.payload);
        auto digest = proto::transcript_digest(transcript);
        lossless += digest == proto::transcript_digest(commit.transcript);
        auto om = channel.carry(0, {wire::kVersion, "committer", {{"key", commit.k.hex()}, {"bit", b}}});
        proto::Opening opening{PrfKey::from_hex(om.payload.at("key").get<std::string>(), params.lambda()),
                               om.payload.at("bit").get<int>()};
        auto reveal = proto::reveal_verify(transcript, opening, params);
        auto wrong = proto::reveal_verify(transcript, {opening.k, 1 - b}, params);
        honest_ok += reveal && *reveal == b;
        wrong_rejected += !wrong.has_value();
        std::optional<int> extracted;
        if (run_extractor) {
            extracted = proto::extractor(transcript, params, cap);
            if (!extracted) ++extractor_bottom;
            if (reveal) {
                ++accepted;
                if (extracted && *extracted == *reveal) ++agree;
                else ++disagree;
            }
        }
        int nib = std::stoi(digest.substr(0, 1), nullptr, 16);
        nibble[b][nib] += 1.0;
        per_bit[b] += 1.0;
        if (run == 0) {
            first_digest = digest;
            first_pauli = P;
        }
        r.table->rows.push_back({std::to_string(run), std::to_string(b), commit.k.hex(), digest, show(reveal),
                                 show(wrong), run_extractor ? show(extracted) : "skipped"});
    }

    proto::CommitmentTranscript garbage;
    garbage.P = *first_pauli;
    garbage.lambda = params.lambda();
    garbage.d = params.d();
    garbage.n = params.n();
    std::size_t dim = std::size_t{2} << params.n();
    for (int x = 0; x < (1 << params.d()); ++x) {
        garbage.M.push_back({qc::Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim)), 0, 1.0, false});
    }
    Rng grng = master.derive(~0ull);
    auto gkey = PrfKey::random(params.lambda(), grng);
    bool garbage_bottom = !proto::reveal_verify(garbage, {gkey, 0}, params) &&
                          !proto::reveal_verify(garbage, {gkey, 1}, params);
    std::optional<int> garbage_extract;
    if (run_extractor) garbage_extract = proto::extractor(garbage, params, cap);

    double tv = 0.0;
    if (per_bit[0] > 0 && per_bit[1] > 0) {
        for (int i = 0; i < 16; ++i) tv += std::abs(nibble[0][i] / per_bit[0] - nibble[1][i] / per_bit[1]);
        tv *= 0.5;
    }

    r.metrics = {{"lambda", params.lambda()},
                 {"d", params.d()},
                 {"n", params.n()},
                 {"m", params.m()},
                 {"binding_relaxed", params.binding_relaxed},
                 {"mode", tomo::mode_name(mode)},
                 {"transport", transport},
                 {"runs", runs},
                 {"honest_reveal_rate", detail::rate(honest_ok, runs)},
                 {"wrong_bit_rejection_rate", detail::rate(wrong_rejected, runs)},
                 {"commit_tomography_failures", commit_failures},
                 {"accepted_reveals", accepted},
                 {"extractor_agreements", agree},
                 {"extractor_disagreements", disagree},
                 {"extractor_bottom", extractor_bottom},
                 {"lossless_transcripts", lossless},
                 {"garbage_reveal_bottom", garbage_bottom},
                 {"first_transcript_digest", first_digest},
                 {"hiding_smoke_tv_digest_nibble", tv}};
    r.flags.push_back(flag_eq("honest_reveals_return_b", static_cast<double>(honest_ok), static_cast<double>(runs), 0.0,
                              "honest commit and reveal output the committed bit"));
    if (run_extractor) {
        r.flags.push_back(flag_eq("extractor_disagreements", static_cast<double>(disagree), 0.0, 0.0,
                                  "extracted bit agrees with every accepted reveal"));
        r.flags.push_back(flag_eq("garbage_extractor_bottom", garbage_extract ? 1.0 : 0.0, 0.0, 0.0,
                                  "no key opens a transcript of zero matrices"));
    }
    r.flags.push_back(flag_eq("garbage_reveal_bottom", garbage_bottom ? 1.0 : 0.0, 1.0, 0.0,
                              "zero matrices fail the distance check"));
    r.flags.push_back(flag_eq("transcripts_lossless", static_cast<double>(lossless), static_cast<double>(runs), 0.0,
                              "classical transcript survives the wire codec byte for byte"));

    if (!config.cache.empty()) {
        auto path = config.cache / "commit_digests.json";
        nlohmann::json fixtures = nlohmann::json::object();
        if (std::filesystem::exists(path)) {
            std::ifstream in(path);
            fixtures = nlohmann::json::parse(in);
        }
        auto key = fixture_key(config, params, tomo::mode_name(mode));
        if (fixtures.contains(key)) {
            bool same = fixtures.at(key).get<std::string>() == first_digest;
            r.flags.push_back(flag_eq("frozen_transcript_digest", same ? 1.0 : 0.0, 1.0, 0.0,
                                      "first transcript matches the frozen fixture digest"));
        } else if (p.boolean("record_fixture", false)) {
            fixtures[key] = first_digest;
            std::filesystem::create_directories(config.cache);
            std::ofstream out(path);
            out << fixtures.dump(2) << "\n";
        }
    }
    return r;
}

}  // namespace prslab::lab
