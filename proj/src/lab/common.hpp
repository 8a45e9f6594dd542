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

#include <cstdio>
#include <string>

#include "prslab/generators.hpp"
#include "prslab/lab.hpp"

namespace prslab::lab::detail {

inline std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

inline int int_param(const Params& p, const std::string& key, int fallback, int lo, int hi) {
    auto v = p.integer(key, fallback);
    if (v < lo || v > hi) {
        throw ConfigError(p.path(key) + ": expected a value in [" + std::to_string(lo) + ", " + std::to_string(hi) +
                          "], got " + std::to_string(v));
    }
    return static_cast<int>(v);
}

inline PrfVariant variant_param(const Params& p, const std::string& fallback = "test") {
    try {
        return parse_variant(p.string("variant", fallback));
    } catch (const std::exception& e) {
        throw ConfigError(p.path("variant") + ": " + e.what());
    }
}

/// lambda, d, n, variant, prf_seed with the given defaults.
inline GeneratorParams generator_params(const Params& p, int lambda, int d, int n) {
    GeneratorParams g;
    g.lambda = int_param(p, "lambda", lambda, 1, 64);
    g.d = int_param(p, "d", d, 1, 20);
    g.n = int_param(p, "n", n, 1, 20);
    g.variant = variant_param(p);
    g.prf_seed = static_cast<std::uint64_t>(p.integer("prf_seed", 0));
    return g;
}

inline double rate(std::uint64_t hits, std::uint64_t total) {
    return total == 0 ? 0.0 : static_cast<double>(hits) / static_cast<double>(total);
}

}  // namespace prslab::lab::detail
