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

#include "prslab/tomography.hpp"

#include <bit>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <fstream>

#include "prslab/errors.hpp"
#include "prslab/parallel.hpp"

namespace prslab::tomo {

namespace {

using Rational = boost::multiprecision::cpp_rational;

std::uint64_t shots_for(double s) {
    if (!(s >= 1.0) || std::floor(s) != s) {
        throw DomainError("tomography needs an integral s >= 1, got " + std::to_string(s));
    }
    return static_cast<std::uint64_t>(s);
}

std::uint64_t saturating_copies(double s, std::size_t N, double factor) {
    long double c = static_cast<long double>(s) * N * N * factor;
    return c >= 1.8e19L ? UINT64_MAX : static_cast<std::uint64_t>(c);
}

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
    for (int b = 0; b < 8; ++b) out.push_back(static_cast<std::uint8_t>(v >> (8 * b)));
}

std::uint64_t get_u64(const std::vector<std::uint8_t>& in, std::size_t off) {
    std::uint64_t v = 0;
    for (int b = 0; b < 8; ++b) v |= std::uint64_t{in[off + b]} << (8 * b);
    return v;
}

}  // namespace

Mode parse_mode(std::string_view name) {
    if (name == "sampled") return Mode::Sampled;
    if (name == "analytic") return Mode::Analytic;
    throw DomainError("unknown tomography mode '" + std::string(name) + "'");
}

std::string mode_name(Mode m) { return m == Mode::Sampled ? "sampled" : "analytic"; }

DensitySource::DensitySource(Matrix rho) : rho_(std::move(rho)) {
    qc::qubits_for_dimension(static_cast<std::size_t>(rho_.rows()));
    if (rho_.rows() != rho_.cols()) {
        throw ShapeError("DensitySource needs a square matrix");
    }
}

double DensitySource::expectation(const qc::PauliString& q, std::size_t) const {
    return qc::pauli_expectation(q, rho_).real();
}

CyclingSource::CyclingSource(std::vector<Matrix> states) : states_(std::move(states)) {
    if (states_.empty()) {
        throw DomainError("CyclingSource needs at least one state");
    }
    for (const auto& s : states_) {
        if (s.rows() != states_[0].rows() || s.cols() != s.rows()) {
            throw ShapeError("CyclingSource states must share one square shape");
        }
    }
}

std::size_t CyclingSource::dimension() const { return static_cast<std::size_t>(states_[0].rows()); }

double CyclingSource::expectation(const qc::PauliString& q, std::size_t run) const {
    return qc::pauli_expectation(q, states_[run % states_.size()]).real();
}

Tomograph tomography_base(const StateSource& source, double s, Rng& rng, Mode mode, std::size_t run) {
    std::uint64_t shots = shots_for(s);
    std::size_t N = source.dimension();
    int q = qc::qubits_for_dimension(N);
    auto dim = static_cast<Eigen::Index>(N);
    Matrix M = Matrix::Identity(dim, dim) / static_cast<double>(N);
    std::uint64_t observables = std::uint64_t{1} << (2 * q);
    for (std::uint64_t idx = 1; idx < observables; ++idx) {
        auto Q = qc::PauliString::from_index(idx, q);
        double e = std::clamp(source.expectation(Q, run), -1.0, 1.0);
        double est = e;
        if (mode == Mode::Sampled) {
            std::uint64_t plus = rng.binomial(shots, 0.5 * (1.0 + e));
            est = (2.0 * static_cast<double>(plus) - static_cast<double>(shots)) / static_cast<double>(shots);
        }
        double w = est / static_cast<double>(N);
        std::uint64_t x = Q.x_mask();
        for (std::uint64_t i = 0; i < N; ++i) {
            M(static_cast<Eigen::Index>(i ^ x), static_cast<Eigen::Index>(i)) += w * Q.phase(i);
        }
    }
    return {std::move(M), saturating_copies(s, N, 1.0), s, false};
}

qc::BigInt TomographyBudget::total_copies() const {
    qc::BigInt sN = qc::BigInt(static_cast<std::uint64_t>(s));
    return 4 * sN * qc::BigInt(N) * qc::BigInt(N) * qc::BigInt(reps);
}

void TomographyBudget::validate() const {
    shots_for(s);
    qc::qubits_for_dimension(N);
    if (reps < 1) {
        throw DomainError("boosted tomography needs at least one repetition");
    }
}

BoostSelection boost_select(const std::vector<Tomograph>& runs, double radius) {
    BoostSelection sel;
    std::size_t R = runs.size();
    for (std::size_t i = 0; i < R; ++i) {
        std::vector<std::size_t> close;
        for (std::size_t j = 0; j < R; ++j) {
            if (qc::frobenius_sq(runs[i].M, runs[j].M) <= radius) close.push_back(j);
        }
        if (2 * close.size() > R) {
            sel.index = i;
            sel.support = std::move(close);
            return sel;
        }
    }
    return sel;
}

Tomograph tomography_boosted(const StateSource& source, const TomographyBudget& budget, Rng& rng, Mode mode,
                             unsigned workers) {
    budget.validate();
    if (budget.N != source.dimension()) {
        throw ShapeError("budget dimension does not match the state source");
    }
    auto R = static_cast<std::size_t>(budget.reps);
    Rng master(rng.next_u64());
    std::vector<Tomograph> runs(R);
    parallel_for(R, workers, [&](std::size_t r) {
        Rng local = master.derive(r);
        runs[r] = tomography_base(source, 4.0 * budget.s, local, mode, r);
    });
    auto sel = boost_select(runs, budget.cluster_radius());
    std::uint64_t copies = saturating_copies(budget.s, budget.N, 4.0 * budget.reps);
    if (!sel.index) {
        return {Matrix(), copies, budget.s, true};
    }
    return {runs[*sel.index].M, copies, budget.s, false};
}

// ---------------------------------------------------------------------------

std::size_t VerifyParams::N() const {
    return inst == Instantiation::First ? std::size_t{2} << gen.n : std::size_t{1} << gen.n;
}

TomographyBudget VerifyParams::budget() const { return {N(), s, reps}; }

double VerifyParams::guarantee() const { return 9.0 * static_cast<double>(N()) / s; }

double VerifyParams::accept_threshold() const { return 4.0 * guarantee(); }

qc::BigInt VerifyParams::copies() const { return budget().total_copies(); }

void VerifyParams::validate() const {
    gen.validate();
    budget().validate();
}

VerifyParams paper_preset(Instantiation inst, const GeneratorParams& gen, Mode mode) {
    VerifyParams p;
    p.inst = inst;
    p.gen = gen;
    p.mode = mode;
    p.reps = gen.lambda;
    p.preset = "paper";
    p.s = inst == Instantiation::First ? 6561.0 * std::ldexp(1.0, gen.n + 1) : std::ldexp(1.0, gen.n + 9);
    return p;
}

VerifyParams desk_preset(Instantiation inst, const GeneratorParams& gen, Mode mode) {
    VerifyParams p;
    p.inst = inst;
    p.gen = gen;
    p.mode = mode;
    p.reps = 8;
    p.preset = "desk";
    p.s = inst == Instantiation::First ? std::ldexp(1.0, gen.n + 8) : std::ldexp(1.0, gen.n + 7);
    return p;
}

std::vector<BudgetIdentity> check_budget_identities(int n, int lambda) {
    std::vector<BudgetIdentity> out;
    auto pow2 = [](int e) { return Rational(qc::BigInt(1) << e); };
    auto add = [&](std::string name, const Rational& lhs, const Rational& rhs) {
        out.push_back({std::move(name), lhs == rhs, lhs.str() + " vs " + rhs.str()});
    };
    Rational lam(lambda);

    Rational N1 = pow2(n + 1);
    Rational s1 = Rational(6561) * pow2(n + 1);
    add("first: 9N/s = 1/729", 9 * N1 / s1, Rational(1, 729));
    add("first: accept threshold 4 * 9N/s = 4/729", 4 * 9 * N1 / s1, Rational(4, 729));
    add("first: L = 4 s N^2 lambda = 3^8 2^{3(n+1)+2} lambda", 4 * s1 * N1 * N1 * lam,
        Rational(6561) * pow2(3 * (n + 1) + 2) * lam);
    add("first: commitment L = 3^8 2^{3n+5} lambda", Rational(6561) * pow2(3 * n + 5) * lam,
        Rational(6561) * pow2(3 * (n + 1) + 2) * lam);
    Rational radius1 = 4 * N1 / s1;
    out.push_back({"first: cluster radius 4N/s = 4/6561 < 4/729",
                   radius1 == Rational(4, 6561) && radius1 < Rational(4, 729), radius1.str()});

    Rational N2 = pow2(n);
    Rational s2 = pow2(n + 9);
    add("second: 9N/s = 9/512", 9 * N2 / s2, Rational(9, 512));
    add("second: accept threshold 4 * 9N/s = 9/128", 4 * 9 * N2 / s2, Rational(9, 128));
    add("second: L = 4 s N^2 lambda = 2^{3n+11} lambda", 4 * s2 * N2 * N2 * lam, pow2(3 * n + 11) * lam);
    add("second: good-key gap 9 * 9N/s = 81/512", 9 * 9 * N2 / s2, Rational(81, 512));
    return out;
}

qc::DensityMatrix channel_first(const ChannelFirstInput& in, const GeneratorParams& gen, const AbortModel& abort) {
    if (in.P.qubits() != gen.n) {
        throw ShapeError("channel_first: Pauli has " + std::to_string(in.P.qubits()) + " qubits, expected n = " +
                         std::to_string(gen.n));
    }
    if (in.b != 0 && in.b != 1) {
        throw DomainError("channel_first: b must be 0 or 1");
    }
    auto wrapped = abort_wrapped(gen, in.k, in.x, abort);
    if (in.b == 0) {
        return wrapped.full;
    }
    return qc::DensityMatrix::trusted(qc::pauli_conjugate_trailing(in.P, wrapped.full.matrix()));
}

qc::DensityMatrix channel_second(const ChannelSecondInput& in, const GeneratorParams& gen) {
    if (in.b != 0 && in.b != 1) {
        throw DomainError("channel_second: b must be 0 or 1");
    }
    if (in.i.size() + 1 != static_cast<std::size_t>(gen.d)) {
        throw ShapeError("channel_second: |i| + 1 must equal the generator input length d");
    }
    BitString x = in.i.concat(BitString::from_uint(static_cast<std::uint64_t>(in.b), 1));
    return qc::DensityMatrix::from_pure(prfs_generate(gen, in.k, x));
}

Tomograph tomograph_channel(const qc::DensityMatrix& rho, const VerifyParams& params, Rng& rng, unsigned workers) {
    params.validate();
    if (rho.dimension() != params.N()) {
        throw ShapeError("channel output dimension does not match the instantiation");
    }
    DensitySource source(rho.matrix());
    auto budget = params.budget();
    if (params.mode == Mode::Analytic) {
        // Every repetition is identical in the noise-free limit, so one base run decides.
        Tomograph t = tomography_base(source, budget.s, rng, Mode::Analytic);
        t.copies = saturating_copies(budget.s, budget.N, 4.0 * budget.reps);
        return t;
    }
    return tomography_boosted(source, budget, rng, Mode::Sampled, workers);
}

VerifyOutcome verify_first_against(const ChannelFirstInput& in, const Tomograph& M, const Tomograph& ref,
                                   const VerifyParams& params) {
    if (params.inst != Instantiation::First) {
        throw DomainError("verify_first needs first-instantiation parameters");
    }
    VerifyOutcome out;
    if (M.aborted) {
        return out;
    }
    if (M.dimension() != params.N() || M.M.cols() != M.M.rows()) {
        throw ShapeError("verify_first: tomograph dimension must be 2^(n+1)");
    }
    if (ref.aborted) {
        out.reference_aborted = true;
        return out;
    }
    Matrix masked = (params.abort_check_conjugated && in.b == 1) ? qc::pauli_conjugate_trailing(in.P, M.M) : M.M;
    auto bot = static_cast<Eigen::Index>(abort_index(params.gen.n));
    out.abort_overlap = masked(bot, bot).real();
    out.distance = qc::frobenius_sq(M.M, ref.M);
    if (out.abort_overlap > params.abort_threshold) {
        return out;
    }
    out.verdict = out.distance <= params.accept_threshold() ? Verdict::Valid : Verdict::Invalid;
    return out;
}

VerifyOutcome verify_first(const ChannelFirstInput& in, const Tomograph& M, const VerifyParams& params,
                           const AbortModel& abort, Rng& rng, unsigned workers) {
    if (params.inst != Instantiation::First) {
        throw DomainError("verify_first needs first-instantiation parameters");
    }
    if (M.aborted) {
        return {};
    }
    Tomograph ref = tomograph_channel(channel_first(in, params.gen, abort), params, rng, workers);
    return verify_first_against(in, M, ref, params);
}

VerifyOutcome verify_second(const ChannelSecondInput& in, const Tomograph& M, const VerifyParams& params, Rng& rng,
                            unsigned workers) {
    if (params.inst != Instantiation::Second) {
        throw DomainError("verify_second needs second-instantiation parameters");
    }
    VerifyOutcome out;
    if (M.aborted) {
        return out;
    }
    if (M.dimension() != params.N() || M.M.cols() != M.M.rows()) {
        throw ShapeError("verify_second: tomograph dimension must be 2^n");
    }
    Tomograph ref = tomograph_channel(channel_second(in, params.gen), params, rng, workers);
    if (ref.aborted) {
        out.reference_aborted = true;
        return out;
    }
    out.distance = qc::frobenius_sq(M.M, ref.M);
    out.verdict = out.distance <= params.accept_threshold() ? Verdict::Valid : Verdict::Invalid;
    return out;
}

bool key_is_good(const PrfKey& k, const BitString& i, const VerifyParams& params) {
    auto g0 = channel_second({k, i, 0}, params.gen);
    auto g1 = channel_second({k, i, 1}, params.gen);
    return qc::frobenius_sq(g0.matrix(), g1.matrix()) > 9.0 * params.guarantee();
}

std::vector<std::uint8_t> matrix_bytes(const Matrix& m) {
    std::vector<std::uint8_t> out;
    out.reserve(8 + static_cast<std::size_t>(m.size()) * 16);
    put_u64(out, static_cast<std::uint64_t>(m.rows()));
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            put_u64(out, std::bit_cast<std::uint64_t>(m(r, c).real()));
            put_u64(out, std::bit_cast<std::uint64_t>(m(r, c).imag()));
        }
    }
    return out;
}

Matrix matrix_from_bytes(const std::vector<std::uint8_t>& bytes, std::size_t dim) {
    if (bytes.size() < 8) {
        throw ShapeError("matrix blob is too short");
    }
    std::uint64_t header = get_u64(bytes, 0);
    if (header != dim || bytes.size() != 8 + dim * dim * 16) {
        throw ShapeError("matrix blob does not hold a " + std::to_string(dim) + "x" + std::to_string(dim) + " matrix");
    }
    auto d = static_cast<Eigen::Index>(dim);
    Matrix m(d, d);
    std::size_t off = 8;
    for (Eigen::Index r = 0; r < d; ++r) {
        for (Eigen::Index c = 0; c < d; ++c) {
            double re = std::bit_cast<double>(get_u64(bytes, off));
            double im = std::bit_cast<double>(get_u64(bytes, off + 8));
            m(r, c) = qc::cplx(re, im);
            off += 16;
        }
    }
    return m;
}

nlohmann::json tomograph_metadata(const Tomograph& t, int lambda) {
    return {{"N", t.dimension()}, {"s", t.s}, {"lambda", lambda}, {"copies", t.copies}, {"aborted", t.aborted}};
}

void write_tomograph(const std::filesystem::path& path, const Tomograph& t, int lambda) {
    auto bytes = matrix_bytes(t.M);
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ResourceError("cannot write " + path.string());
    }
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    std::ofstream meta(path.string() + ".json");
    meta << tomograph_metadata(t, lambda).dump(2) << "\n";
}

Tomograph read_tomograph(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ifstream meta_in(path.string() + ".json");
    if (!in || !meta_in) {
        throw ResourceError("cannot read tomograph " + path.string());
    }
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    auto meta = nlohmann::json::parse(meta_in);
    Tomograph t;
    t.aborted = meta.at("aborted").get<bool>();
    t.s = meta.at("s").get<double>();
    t.copies = meta.at("copies").get<std::uint64_t>();
    t.M = matrix_from_bytes(bytes, meta.at("N").get<std::size_t>());
    return t;
}

}  // namespace prslab::tomo
