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

#include "prslab/attacks.hpp"

#include <algorithm>
#include <cmath>

#include "prslab/errors.hpp"
#include "prslab/measurement.hpp"
#include "prslab/parallel.hpp"
#include "prslab/symmetric.hpp"

namespace prslab::attacks {

namespace {

struct MeanVar {
    double mean = 0.0;
    double var = 0.0;
};

MeanVar mean_var(const std::vector<double>& xs) {
    MeanVar mv;
    if (xs.empty()) return mv;
    for (double x : xs) mv.mean += x;
    mv.mean /= static_cast<double>(xs.size());
    if (xs.size() > 1) {
        for (double x : xs) mv.var += (x - mv.mean) * (x - mv.mean);
        mv.var /= static_cast<double>(xs.size() - 1);
    }
    return mv;
}

void fill_stats(AttackReport& r, const std::vector<double>& gen, const std::vector<double>& haar) {
    auto g = mean_var(gen);
    auto h = mean_var(haar);
    double T = static_cast<double>(gen.size());
    r.accept_gen = g.mean;
    r.accept_haar = h.mean;
    r.advantage = std::abs(g.mean - h.mean);
    r.haar_stderr = std::sqrt(h.var / T);
    r.ci95 = 1.96 * std::sqrt(g.var / T + h.var / T);
}

BitString zeros(int bits) { return BitString(static_cast<std::size_t>(bits)); }

}  // namespace

int choose_t(int lambda, int n, int max_t) {
    if (n < 1 || lambda < 0) {
        throw DomainError("choose_t needs n >= 1 and lambda >= 0");
    }
    qc::BigInt need = qc::BigInt(6) << lambda;
    for (int t = 1; t <= max_t; ++t) {
        if (need <= qc::sym_dim(std::uint64_t{1} << n, static_cast<std::uint64_t>(t))) {
            return t;
        }
    }
    throw InfeasibleError("no t <= " + std::to_string(max_t) + " satisfies 2^lambda <= C(2^n+t-1,t)/6");
}

GramOracle::GramOracle(const std::vector<qc::Vector>& states, int copies) : copies_(copies) {
    if (states.empty()) {
        throw DomainError("GramOracle needs at least one enrolled state");
    }
    if (copies < 1) {
        throw DomainError("GramOracle needs t >= 1");
    }
    auto dim = states[0].size();
    states_.resize(dim, static_cast<Eigen::Index>(states.size()));
    for (std::size_t k = 0; k < states.size(); ++k) {
        if (states[k].size() != dim) {
            throw ShapeError("enrolled states have different dimensions");
        }
        states_.col(static_cast<Eigen::Index>(k)) = states[k];
    }
    gram_ = states_.adjoint() * states_;
    for (Eigen::Index k = 0; k < gram_.rows(); ++k) {
        if (std::abs(gram_(k, k) - 1.0) > 1e-9) {
            throw DomainError("enrolled state is not normalized");
        }
    }
    qc::Matrix gt = gram_.unaryExpr([copies](qc::cplx z) { return std::pow(z, copies); });
    gt = 0.5 * (gt + gt.adjoint()).eval();
    Eigen::SelfAdjointEigenSolver<qc::Matrix> solver(gt);
    if (solver.info() != Eigen::Success) {
        throw NumericError("Gram eigensolver did not converge");
    }
    const auto& vals = solver.eigenvalues();
    double cutoff = kRankCutoff * vals.cwiseAbs().maxCoeff();
    std::vector<Eigen::Index> kept;
    for (Eigen::Index i = 0; i < vals.size(); ++i) {
        if (vals[i] > cutoff) kept.push_back(i);
    }
    whiten_.resize(static_cast<Eigen::Index>(kept.size()), gt.cols());
    qc::Matrix pinv = qc::Matrix::Zero(gt.rows(), gt.cols());
    for (std::size_t r = 0; r < kept.size(); ++r) {
        auto i = kept[r];
        whiten_.row(static_cast<Eigen::Index>(r)) = solver.eigenvectors().col(i).adjoint() / std::sqrt(vals[i]);
        pinv += solver.eigenvectors().col(i) * solver.eigenvectors().col(i).adjoint() / vals[i];
    }
    residual_ = (gt * pinv * gt - gt).norm();
    if (residual_ > kResidualTolerance) {
        throw NumericError("Gram pseudo-inverse residual " + std::to_string(residual_) + " too large");
    }
}

GramOracle GramOracle::for_generator(const GeneratorParams& params, int copies) {
    params.validate();
    if (params.lambda > 16) {
        throw ResourceError("Gram oracle enrolls every key; lambda must be <= 16");
    }
    std::uint64_t keys = std::uint64_t{1} << params.lambda;
    std::vector<qc::Vector> states;
    states.reserve(keys);
    for (std::uint64_t k = 0; k < keys; ++k) {
        states.push_back(prs_generate(params, PrfKey::from_uint(k, static_cast<std::size_t>(params.lambda))).amplitudes());
    }
    return GramOracle(states, copies);
}

double GramOracle::accept(const qc::Vector& theta) const {
    if (theta.size() != states_.rows()) {
        throw ShapeError("GramOracle::accept: dimension mismatch");
    }
    qc::Vector v = (states_.adjoint() * theta).unaryExpr([this](qc::cplx z) { return std::pow(z, copies_); });
    return (whiten_ * v).squaredNorm();
}

qc::Matrix explicit_span_projector(const std::vector<qc::Vector>& states, int copies, std::size_t cap) {
    if (states.empty()) {
        throw DomainError("explicit_span_projector needs at least one state");
    }
    qc::dense_dimension(static_cast<std::size_t>(states[0].size()), copies, cap);
    qc::Matrix cols(static_cast<Eigen::Index>(std::pow(states[0].size(), copies)),
                    static_cast<Eigen::Index>(states.size()));
    for (std::size_t k = 0; k < states.size(); ++k) {
        cols.col(static_cast<Eigen::Index>(k)) = qc::tensor_power(states[k], copies);
    }
    Eigen::JacobiSVD<qc::Matrix> svd(cols, Eigen::ComputeThinU);
    const auto& sv = svd.singularValues();
    double cutoff = 1e-8 * sv.maxCoeff();
    qc::Matrix p = qc::Matrix::Zero(cols.rows(), cols.rows());
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv[i] > cutoff) p += svd.matrixU().col(i) * svd.matrixU().col(i).adjoint();
    }
    return p;
}

nlohmann::json AttackReport::to_json() const {
    return {{"kind", kind},
            {"lambda", lambda},
            {"n", n},
            {"t", t},
            {"accept_gen", accept_gen},
            {"accept_haar", accept_haar},
            {"advantage", advantage},
            {"ci95", ci95},
            {"haar_stderr", haar_stderr},
            {"trials", trials},
            {"seed", seed},
            {"extra", extra}};
}

AttackKind parse_attack_kind(std::string_view name) {
    if (name == "gram") return AttackKind::Gram;
    if (name == "purity") return AttackKind::Purity;
    throw DomainError("unknown attack kind '" + std::string(name) + "' (expected gram or purity)");
}

double abort_kappa(double eta, int n) {
    double overlap = 1.0 / static_cast<double>(std::uint64_t{1} << n);
    double purity = eta * eta + (1 - eta) * (1 - eta) + 2 * eta * (1 - eta) * overlap;
    return 1.0 - purity;
}

AttackReport gram_attack(const ExperimentSpec& spec) {
    const auto& params = spec.params;
    int t = spec.t > 0 ? spec.t : choose_t(params.lambda, params.n);
    GramOracle oracle = GramOracle::for_generator(params, t);
    Rng master(spec.seed);
    std::vector<double> gen(spec.trials), haar(spec.trials);
    parallel_for(spec.trials, spec.workers, [&](std::size_t i) {
        Rng g = master.derive(2 * i);
        Rng h = master.derive(2 * i + 1);
        if (spec.null_case) {
            gen[i] = oracle.accept(qc::haar_sample(params.n, g));
        } else {
            auto key = PrfKey::random(static_cast<std::size_t>(params.lambda), g);
            gen[i] = oracle.accept(prs_generate(params, key));
        }
        haar[i] = oracle.accept(qc::haar_sample(params.n, h));
    });
    AttackReport r;
    r.kind = spec.null_case ? "gram-null" : "gram";
    r.lambda = params.lambda;
    r.n = params.n;
    r.t = t;
    r.trials = spec.trials;
    r.seed = spec.seed;
    fill_stats(r, gen, haar);
    auto sd = qc::sym_dim(params.dimension(), static_cast<std::uint64_t>(t));
    double keys = std::ldexp(1.0, params.lambda);
    r.extra = {{"rank", oracle.rank()},
               {"enrolled", oracle.enrolled()},
               {"sym_dim", sd.str()},
               {"haar_bound", keys / sd.convert_to<double>()},
               {"rank_over_sym_dim", static_cast<double>(oracle.rank()) / sd.convert_to<double>()},
               {"pinv_residual", oracle.residual()},
               {"min_accept_gen", *std::min_element(gen.begin(), gen.end())}};
    return r;
}

AttackReport purity_attack(const ExperimentSpec& spec) {
    const auto& params = spec.params;
    params.validate();
    double kappa = abort_kappa(spec.eta, params.n);
    int t = spec.t;
    if (t <= 0) {
        if (kappa <= 0.0) {
            throw InfeasibleError("purity attack needs kappa > 0 to choose t");
        }
        t = static_cast<int>(std::ceil(4.0 / kappa));
    }
    std::uint64_t pairs = static_cast<std::uint64_t>(t / 2);
    AbortModel model = AbortModel::constant(spec.eta);
    Rng master(spec.seed);
    std::vector<double> gen(spec.trials), haar(spec.trials);
    parallel_for(spec.trials, spec.workers, [&](std::size_t i) {
        Rng g = master.derive(2 * i);
        Rng h = master.derive(2 * i + 1);
        qc::DensityMatrix rho = [&] {
            if (spec.null_case) {
                return qc::DensityMatrix::from_pure(qc::haar_sample(params.n, g));
            }
            auto key = PrfKey::random(static_cast<std::size_t>(params.lambda), g);
            auto psi = prs_generate(params, key);
            return abort_wrap(psi, model.eta(key, zeros(params.d))).traced;
        }();
        gen[i] = qc::swap_test_sample(rho, pairs, g) == pairs ? 1.0 : 0.0;
        auto haar_rho = qc::DensityMatrix::from_pure(qc::haar_sample(params.n, h));
        haar[i] = qc::swap_test_sample(haar_rho, pairs, h) == pairs ? 1.0 : 0.0;
    });
    AttackReport r;
    r.kind = spec.null_case ? "purity-null" : "purity";
    r.lambda = params.lambda;
    r.n = params.n;
    r.t = t;
    r.trials = spec.trials;
    r.seed = spec.seed;
    fill_stats(r, gen, haar);
    r.extra = {{"eta", spec.eta},
               {"kappa", kappa},
               {"swap_tests_per_trial", pairs},
               {"reject_gen", 1.0 - r.accept_gen},
               {"reject_haar", 1.0 - r.accept_haar},
               {"reject_gen_analytic", 1.0 - std::pow(1.0 - kappa / 2.0, static_cast<double>(pairs))},
               {"reject_haar_analytic", 0.0}};
    return r;
}

AttackReport run_distinguishing_experiment(const ExperimentSpec& spec) {
    return spec.kind == AttackKind::Gram ? gram_attack(spec) : purity_attack(spec);
}

}  // namespace prslab::attacks
