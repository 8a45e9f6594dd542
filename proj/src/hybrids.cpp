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

#include "prslab/hybrids.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>

#include "prslab/errors.hpp"
#include "prslab/parallel.hpp"
#include "prslab/symmetric.hpp"

namespace prslab::hybrids {

namespace {

constexpr std::size_t kHybrid1Chunks = 64;

void check_args(std::size_t N, int t) {
    if (N < 1 || t < 1) {
        throw DomainError("hybrids need N >= 1 and t >= 1");
    }
}

std::vector<int> parity_of(const std::vector<int>& type) {
    std::vector<int> p(type.size());
    for (std::size_t i = 0; i < type.size(); ++i) p[i] = type[i] & 1;
    return p;
}

qc::Vector indicator_state(std::size_t N, int t, const std::function<bool(const std::vector<int>&)>& keep) {
    std::size_t dim = qc::dense_dimension(N, t, std::numeric_limits<std::size_t>::max());
    qc::Vector v = qc::Vector::Zero(static_cast<Eigen::Index>(dim));
    std::size_t hits = 0;
    for (std::size_t idx = 0; idx < dim; ++idx) {
        if (keep(type_of(qc::tuple_digits(idx, N, t), N))) {
            v[static_cast<Eigen::Index>(idx)] = 1.0;
            ++hits;
        }
    }
    if (hits == 0) {
        throw DomainError("type class is empty");
    }
    return v / std::sqrt(static_cast<double>(hits));
}

/// Neumaier-compensated sum of equally shaped matrices, in order.
Matrix compensated_sum(const std::vector<Matrix>& parts) {
    Matrix sum = Matrix::Zero(parts[0].rows(), parts[0].cols());
    Matrix comp = Matrix::Zero(parts[0].rows(), parts[0].cols());
    for (const auto& p : parts) {
        for (Eigen::Index i = 0; i < sum.size(); ++i) {
            for (int part = 0; part < 2; ++part) {
                double s = part == 0 ? sum.data()[i].real() : sum.data()[i].imag();
                double x = part == 0 ? p.data()[i].real() : p.data()[i].imag();
                double c = part == 0 ? comp.data()[i].real() : comp.data()[i].imag();
                double tsum = s + x;
                c += std::abs(s) >= std::abs(x) ? (s - tsum) + x : (x - tsum) + s;
                if (part == 0) {
                    sum.data()[i].real(tsum);
                    comp.data()[i].real(c);
                } else {
                    sum.data()[i].imag(tsum);
                    comp.data()[i].imag(c);
                }
            }
        }
    }
    return sum + comp;
}

Matrix hybrid1(std::size_t N, int t, const HybridSource& source, std::size_t dim) {
    const auto& params = source.params;
    params.validate();
    if (params.dimension() != N) {
        throw ShapeError("Hybrid 1 source has 2^n = " + std::to_string(params.dimension()) +
                         " but N = " + std::to_string(N));
    }
    if (params.lambda > 12) {
        throw ResourceError("Hybrid 1 enumerates every key; lambda must be <= 12");
    }
    std::uint64_t keys = std::uint64_t{1} << params.lambda;
    std::size_t chunks = std::min<std::size_t>(kHybrid1Chunks, keys);
    std::vector<Matrix> parts(chunks);
    double w = 1.0 / static_cast<double>(keys);
    parallel_for(chunks, source.workers, [&](std::size_t c) {
        Matrix acc = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
        for (std::uint64_t k = c; k < keys; k += chunks) {
            auto psi = prs_generate(params, PrfKey::from_uint(k, static_cast<std::size_t>(params.lambda)));
            qc::add_projector(acc, qc::tensor_power(psi.amplitudes(), t), w);
        }
        parts[c] = std::move(acc);
    });
    return compensated_sum(parts);
}

Matrix hybrid2(std::size_t N, int t, std::size_t dim) {
    std::map<std::vector<int>, int> ids;
    std::vector<int> cls(dim);
    for (std::size_t idx = 0; idx < dim; ++idx) {
        auto p = parity_of(type_of(qc::tuple_digits(idx, N, t), N));
        cls[idx] = ids.emplace(std::move(p), static_cast<int>(ids.size())).first->second;
    }
    double w = 1.0 / static_cast<double>(dim);
    Matrix m = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t y = 0; y < dim; ++y) {
        for (std::size_t x = 0; x < dim; ++x) {
            if (cls[x] == cls[y]) m(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(y)) = w;
        }
    }
    return m;
}

Matrix hybrid3(std::size_t N, int t, std::size_t dim) {
    std::map<std::vector<int>, std::size_t> counts;
    for (std::size_t w = 0; w < dim; ++w) {
        ++counts[parity_of(type_of(qc::tuple_digits(w, N, t), N))];
    }
    Matrix m = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (const auto& [T, c] : counts) {
        qc::add_projector(m, bintype_state(T, N, t), static_cast<double>(c) / static_cast<double>(dim));
    }
    return m;
}

Matrix hybrid4(std::size_t N, int t, std::size_t dim) {
    if (N < static_cast<std::size_t>(t)) {
        throw DomainError("Hybrid 4 needs a weight-t string in {0,1}^N, impossible for N < t");
    }
    std::vector<int> T(N, 0);
    std::fill(T.end() - t, T.end(), 1);
    std::vector<std::vector<int>> all;
    do {
        all.push_back(T);
    } while (std::next_permutation(T.begin(), T.end()));
    Matrix m = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    double w = 1.0 / static_cast<double>(all.size());
    for (const auto& type : all) {
        qc::add_projector(m, type_state(type, N, t), w);
    }
    return m;
}

Matrix hybrid5(std::size_t N, int t, std::size_t cap) {
    Matrix pi = qc::sym_projector(N, t, cap);
    return pi / qc::sym_dim(N, static_cast<std::uint64_t>(t)).convert_to<double>();
}

}  // namespace

std::vector<int> type_of(const std::vector<int>& v, std::size_t N) {
    std::vector<int> counts(N, 0);
    for (int x : v) {
        if (x < 0 || static_cast<std::size_t>(x) >= N) {
            throw DomainError("tuple entry " + std::to_string(x) + " outside [0, N)");
        }
        ++counts[static_cast<std::size_t>(x)];
    }
    return counts;
}

qc::Vector type_state(const std::vector<int>& T, std::size_t N, int t) {
    check_args(N, t);
    if (T.size() != N) {
        throw ShapeError("type vector length must equal N");
    }
    return indicator_state(N, t, [&](const std::vector<int>& type) { return type == T; });
}

qc::Vector bintype_state(const std::vector<int>& T, std::size_t N, int t) {
    check_args(N, t);
    if (T.size() != N) {
        throw ShapeError("binary type vector length must equal N");
    }
    for (int b : T) {
        if (b != 0 && b != 1) throw DomainError("binary type entries must be 0 or 1");
    }
    return indicator_state(N, t, [&](const std::vector<int>& type) { return parity_of(type) == T; });
}

double collision_probability(std::size_t N, int t) {
    check_args(N, t);
    // N!/((N-t)! N^t) = prod_{i<t} (1 - i/N); zero once t > N.
    long double no_collision = 1.0L;
    for (int i = 0; i < t; ++i) {
        no_collision *= static_cast<long double>(static_cast<long double>(N) - i) / static_cast<long double>(N);
    }
    return static_cast<double>(1.0L - std::max(no_collision, 0.0L));
}

Matrix hybrid_density(int id, std::size_t N, int t, const HybridSource* source, std::size_t cap) {
    check_args(N, t);
    std::size_t dim = qc::dense_dimension(N, t, cap);
    switch (id) {
        case 1:
            if (source == nullptr) {
                throw DomainError("Hybrid 1 needs a generator source");
            }
            return hybrid1(N, t, *source, dim);
        case 2:
            return hybrid2(N, t, dim);
        case 3:
            return hybrid3(N, t, dim);
        case 4:
            return hybrid4(N, t, dim);
        case 5:
            return hybrid5(N, t, cap);
        default:
            throw DomainError("hybrid id must be in 1..5");
    }
}

Matrix hybrid2_by_signs(std::size_t N, int t, std::size_t cap) {
    check_args(N, t);
    if (N > 16) {
        throw ResourceError("sign enumeration is limited to N <= 16");
    }
    std::size_t dim = qc::dense_dimension(N, t, cap);
    Matrix m = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    std::uint64_t patterns = std::uint64_t{1} << N;
    double amp = 1.0 / std::sqrt(static_cast<double>(N));
    for (std::uint64_t s = 0; s < patterns; ++s) {
        qc::Vector psi(static_cast<Eigen::Index>(N));
        for (std::size_t x = 0; x < N; ++x) {
            psi[static_cast<Eigen::Index>(x)] = ((s >> x) & 1u) ? -amp : amp;
        }
        qc::add_projector(m, qc::tensor_power(psi, t), 1.0 / static_cast<double>(patterns));
    }
    return m;
}

double hybrid_td(int i, int j, std::size_t N, int t, const HybridSource* source, std::size_t cap) {
    if (std::min(i, j) == 3 && std::max(i, j) == 4 && N < static_cast<std::size_t>(t)) {
        qc::dense_dimension(N, t, cap);
        return 1.0;
    }
    return qc::trace_distance(hybrid_density(i, N, t, source, cap), hybrid_density(j, N, t, source, cap));
}

bool HybridReport::pass_25() const {
    double allowance = 2.0 * envelope + (hybrid4_defined ? td_45 : 0.0);
    return td_25 <= allowance + 1e-12;
}

nlohmann::json HybridReport::to_json() const {
    nlohmann::json j;
    j["N"] = N;
    j["t"] = t;
    j["max_abs_h2_h3"] = max_abs_23;
    j["td"] = {{"h2_h3", td_23}, {"h3_h4", td_34}, {"h2_h5", td_25}};
    if (hybrid4_defined) {
        j["td"]["h4_h5"] = td_45;
    } else {
        j["td"]["h4_h5"] = nullptr;
    }
    if (td_12) {
        j["td"]["h1_h2"] = *td_12;
    }
    j["bounds"] = {{"collision_probability", collision}, {"t2_over_N", envelope}};
    j["hybrid4_defined"] = hybrid4_defined;
    j["pass"] = {{"h2_eq_h3", pass_23()}, {"h3_h4_collision", pass_34()}, {"h4_h5_envelope", pass_45()},
                 {"h2_h5_chain", pass_25()}};
    return j;
}

HybridReport hybrid_report(std::size_t N, int t, const HybridSource* source, std::size_t cap) {
    HybridReport r;
    r.N = N;
    r.t = t;
    r.collision = collision_probability(N, t);
    r.envelope = static_cast<double>(t) * t / static_cast<double>(N);
    Matrix h2 = hybrid_density(2, N, t, nullptr, cap);
    Matrix h3 = hybrid_density(3, N, t, nullptr, cap);
    Matrix h5 = hybrid_density(5, N, t, nullptr, cap);
    r.max_abs_23 = (h2 - h3).cwiseAbs().maxCoeff();
    r.td_23 = qc::trace_distance(h2, h3);
    r.td_25 = qc::trace_distance(h2, h5);
    r.hybrid4_defined = N >= static_cast<std::size_t>(t);
    if (r.hybrid4_defined) {
        Matrix h4 = hybrid_density(4, N, t, nullptr, cap);
        r.td_34 = qc::trace_distance(h3, h4);
        r.td_45 = qc::trace_distance(h4, h5);
    } else {
        r.td_34 = 1.0;
    }
    if (source != nullptr) {
        r.td_12 = qc::trace_distance(hybrid_density(1, N, t, source, cap), h2);
    }
    return r;
}

}  // namespace prslab::hybrids
