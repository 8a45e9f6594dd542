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

#include <fstream>
#include <iostream>

#include "prslab/generators.hpp"
#include "prslab/protocols.hpp"
#include "prslab/tomography.hpp"

using namespace prslab;

namespace {

constexpr std::uint64_t kFixtureSeed = 0x0123;

std::vector<PrfVector> vectors(const PrfSpec& spec, const PrfKey& key) {
    std::vector<PrfVector> out;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << spec.in_bits) && x < 16; ++x) {
        auto in = BitString::from_uint(x, spec.in_bits);
        out.push_back({key, in, prf_eval(spec, key, in)});
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: prs-lab-fixtures <dir>\n";
        return 2;
    }
    std::filesystem::path dir = argv[1];
    std::filesystem::create_directories(dir);
    auto key = PrfKey::from_uint(0x0123, 16);

    PrfSpec test{PrfVariant::Test, 4, 24, 7, kFixtureSeed};
    write_prf_fixture(dir / "prf_test_0123.txt", test, vectors(test, key));
    PrfSpec crypto{PrfVariant::Crypto, 4, 300, 7, kFixtureSeed};
    write_prf_fixture(dir / "prf_hmac_0123.txt", crypto, vectors(crypto, key));

    GeneratorParams gen{16, 2, 3, PrfVariant::Test, kFixtureSeed};
    write_state_fixture(dir / "prs_0123_n3.bin", prs_generate(gen, key));
    write_state_fixture(dir / "prfs_0123_n3_x10.bin", prfs_generate(gen, key, BitString::from_string("10")));

    tomo::VerifyParams vp = tomo::desk_preset(tomo::Instantiation::Second, gen, tomo::Mode::Analytic);
    Rng rng(kFixtureSeed);
    auto rho = tomo::channel_second({key, BitString::from_string("1"), 0}, gen);
    tomo::write_tomograph(dir / "tomograph_second_0123_i1_b0.bin", tomo::tomograph_channel(rho, vp, rng), 16);

    auto params = proto::commitment_desk_preset(8, 1, 3, tomo::Mode::Analytic, PrfVariant::Test);
    Rng crng(1);
    auto P = proto::receiver_sample_pauli(params, crng);
    auto commit = proto::committer_commit(1, P, params, crng);
    nlohmann::json digest = {{"seed", 1},
                             {"b", 1},
                             {"lambda", 8},
                             {"d", 1},
                             {"n", 3},
                             {"mode", "analytic"},
                             {"key", commit.k.hex()},
                             {"digest", proto::transcript_digest(commit.transcript)}};
    std::ofstream(dir / "commit_seed1_b1.json") << digest.dump(2) << "\n";
    std::cout << "fixtures written to " << dir << "\n";
    return 0;
}
