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

#include "prslab/generators.hpp"
#include "prslab/pauli.hpp"
#include "prslab/symmetric.hpp"

namespace prslab::tomo {

using qc::Matrix;

/// Classical estimate of a density matrix. M is Hermitian but need not be PSD
/// or unit-trace; an aborted tomograph carries no matrix.
struct Tomograph {
    Matrix M;
    std::uint64_t copies = 0;
    double s = 0.0;
    bool aborted = false;

    std::size_t dimension() const { return static_cast<std::size_t>(M.rows()); }
};

enum class Mode {
    /// Binomial shot statistics per Pauli observable.
    Sampled,
    /// Infinite-shot limit: exact expectations.
    Analytic,
};

Mode parse_mode(std::string_view name);
std::string mode_name(Mode m);

/// Supplies Tr(Q rho_run) for Pauli observables. `run` indexes the repetitions
/// of boosted tomography, letting adversarial sources vary between runs.
class StateSource {
   public:
    virtual ~StateSource() = default;
    virtual std::size_t dimension() const = 0;
    virtual double expectation(const qc::PauliString& q, std::size_t run) const = 0;
    /// Exact state of a run, used by the analytic mode.
    virtual Matrix state(std::size_t run) const = 0;
};

class DensitySource final : public StateSource {
   public:
    explicit DensitySource(Matrix rho);
    std::size_t dimension() const override { return static_cast<std::size_t>(rho_.rows()); }
    double expectation(const qc::PauliString& q, std::size_t run) const override;
    Matrix state(std::size_t) const override { return rho_; }

   private:
    Matrix rho_;
};

/// Cycles through a list of states, one per run.
class CyclingSource final : public StateSource {
   public:
    explicit CyclingSource(std::vector<Matrix> states);
    std::size_t dimension() const override;
    double expectation(const qc::PauliString& q, std::size_t run) const override;
    Matrix state(std::size_t run) const override { return states_[run % states_.size()]; }

   private:
    std::vector<Matrix> states_;
};

/// Pauli-expectation tomography with s copies per observable (s N^2 copies in
/// total): M = (1/N) sum_Q est_Q Q. E||M - rho||_F^2 = (N - Tr rho^2) / s < N/s.
Tomograph tomography_base(const StateSource& source, double s, Rng& rng, Mode mode = Mode::Sampled,
                          std::size_t run = 0);

/// Boosting parameters: `reps` base runs of 4 s N^2 copies each. The paper preset
/// sets reps = lambda, so L = 4 s N^2 lambda.
struct TomographyBudget {
    std::size_t N = 2;
    double s = 1.0;
    int reps = 1;

    double epsilon() const { return static_cast<double>(N) / s; }
    double cluster_radius() const { return 4.0 * epsilon(); }
    double guarantee() const { return 9.0 * epsilon(); }
    qc::BigInt total_copies() const;
    void validate() const;
};

struct BoostSelection {
    std::optional<std::size_t> index;
    std::vector<std::size_t> support;
};

/// First i with |{j : ||M_j - M_i||_F^2 <= radius}| > runs/2.
BoostSelection boost_select(const std::vector<Tomograph>& runs, double radius);

Tomograph tomography_boosted(const StateSource& source, const TomographyBudget& budget, Rng& rng,
                             Mode mode = Mode::Sampled, unsigned workers = 1);

// ---------------------------------------------------------------------------
// Verifiable tomography.

enum class Instantiation { First, Second };

/// Constants of one verifiable-tomography instantiation. `paper` presets use
/// the published s; desk presets shrink s and rescale every threshold through
/// 9N/s so the same arithmetic applies.
struct VerifyParams {
    Instantiation inst = Instantiation::First;
    GeneratorParams gen;
    double s = 1.0;
    int reps = 8;
    Mode mode = Mode::Analytic;
    /// Conjugate M by (I (x) P^b) before the abort check.
    bool abort_check_conjugated = true;
    double abort_threshold = 1.0 / 9.0;
    std::string preset = "desk";

    std::size_t N() const;
    TomographyBudget budget() const;
    /// 4 * (9 N / s): 4/729 and 9/128 under the paper presets.
    double accept_threshold() const;
    /// 9 N / s
    double guarantee() const;
    /// Total copies L = 4 s N^2 reps.
    qc::BigInt copies() const;
    void validate() const;
};

/// Paper preset: first instantiation s = 3^8 2^{n+1}, second s = 2^{n+9}.
VerifyParams paper_preset(Instantiation inst, const GeneratorParams& gen, Mode mode);
/// Desk preset: first instantiation s = 2^{n+8}, second s = 2^{n+7}, 8 reps.
VerifyParams desk_preset(Instantiation inst, const GeneratorParams& gen, Mode mode);

/// Budget identities the presets must satisfy (thresholds, L formulas).
struct BudgetIdentity {
    std::string name;
    bool holds = false;
    std::string detail;
};
std::vector<BudgetIdentity> check_budget_identities(int n, int lambda);

struct ChannelFirstInput {
    qc::PauliString P;
    PrfKey k;
    BitString x;
    int b = 0;
};

struct ChannelSecondInput {
    PrfKey k;
    BitString i;
    int b = 0;
};

/// (I (x) P^b) G_hat(k, x) (I (x) P^b) on n + 1 qubits.
qc::DensityMatrix channel_first(const ChannelFirstInput& in, const GeneratorParams& gen,
                                const AbortModel& abort);
/// G(k, i || b) on n qubits; params.d counts the bits of i || b.
qc::DensityMatrix channel_second(const ChannelSecondInput& in, const GeneratorParams& gen);

enum class Verdict { Valid, Invalid };

struct VerifyOutcome {
    Verdict verdict = Verdict::Invalid;
    double abort_overlap = 0.0;
    double distance = 0.0;
    bool reference_aborted = false;
};

VerifyOutcome verify_first(const ChannelFirstInput& in, const Tomograph& M, const VerifyParams& params,
                           const AbortModel& abort, Rng& rng, unsigned workers = 1);
/// Verify steps 3-4 against an already computed reference tomograph.
VerifyOutcome verify_first_against(const ChannelFirstInput& in, const Tomograph& M, const Tomograph& ref,
                                   const VerifyParams& params);
VerifyOutcome verify_second(const ChannelSecondInput& in, const Tomograph& M, const VerifyParams& params,
                            Rng& rng, unsigned workers = 1);

/// Honest Tomography for either channel under params.
Tomograph tomograph_channel(const qc::DensityMatrix& rho, const VerifyParams& params, Rng& rng,
                            unsigned workers = 1);

/// Second-instantiation key goodness: ||G(k, i||0) - G(k, i||1)||_F^2 > 9 * (9N/s),
/// which is 81/512 under the paper preset.
bool key_is_good(const PrfKey& k, const BitString& i, const VerifyParams& params);

// ---------------------------------------------------------------------------
// Serialization: dimension header + row-major complex float64, JSON sidecar.

std::vector<std::uint8_t> matrix_bytes(const Matrix& m);
Matrix matrix_from_bytes(const std::vector<std::uint8_t>& bytes, std::size_t dim);
nlohmann::json tomograph_metadata(const Tomograph& t, int lambda);
void write_tomograph(const std::filesystem::path& path, const Tomograph& t, int lambda);
Tomograph read_tomograph(const std::filesystem::path& path);

}  // namespace prslab::tomo
