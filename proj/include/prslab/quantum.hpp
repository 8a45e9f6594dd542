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

// Dense finite-dimensional quantum states. Qubit 0 is the leftmost tensor
// factor, i.e. the most significant bit of a basis index.

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>

#include "prslab/rng.hpp"

namespace prslab::qc {

using cplx = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

/// Absolute tolerance for state invariants.
inline constexpr double kTolerance = 1e-9;
/// Largest dense dimension for t-copy objects unless a caller raises it.
inline constexpr std::size_t kDefaultDimensionCap = 4096;
/// States wider than this are refused outright.
inline constexpr int kMaxQubits = 20;

class DensityMatrix;

/// Unit vector in C^(2^n).
class PureState {
   public:
    /// Validates length (power of two) and norm (within kTolerance).
    static PureState from_amplitudes(Vector amplitudes);
    /// Rescales to unit norm; throws on a zero vector.
    static PureState normalized(Vector amplitudes);
    static PureState basis(int qubits, std::uint64_t index);

    int qubits() const noexcept { return qubits_; }
    std::size_t dimension() const noexcept { return static_cast<std::size_t>(amps_.size()); }
    const Vector& amplitudes() const noexcept { return amps_; }
    std::span<const cplx> span() const noexcept { return {amps_.data(), dimension()}; }

    /// <this|other>
    cplx inner(const PureState& other) const;
    PureState tensor(const PureState& other) const;
    DensityMatrix projector() const;

   private:
    PureState(Vector amps, int qubits) : amps_(std::move(amps)), qubits_(qubits) {}
    Vector amps_;
    int qubits_ = 0;
};

/// Hermitian, PSD, unit-trace matrix on n qubits.
class DensityMatrix {
   public:
    /// Full validation: Hermitian, unit trace, eigenvalues >= -kTolerance.
    static DensityMatrix from_matrix(Matrix m);
    /// No validation; for matrices that are density matrices by construction
    /// (projectors, convex mixtures, conjugations of valid states).
    static DensityMatrix trusted(Matrix m);
    static DensityMatrix from_pure(const PureState& psi);
    static DensityMatrix maximally_mixed(int qubits);

    int qubits() const noexcept { return qubits_; }
    std::size_t dimension() const noexcept { return static_cast<std::size_t>(m_.rows()); }
    const Matrix& matrix() const noexcept { return m_; }

    double trace() const { return m_.trace().real(); }
    /// Tr(rho^2)
    double purity() const;
    DensityMatrix tensor(const DensityMatrix& other) const;

   private:
    DensityMatrix(Matrix m, int qubits) : m_(std::move(m)), qubits_(qubits) {}
    Matrix m_;
    int qubits_ = 0;
};

/// log2 of a power-of-two dimension; throws ShapeError otherwise.
int qubits_for_dimension(std::size_t dim);

bool is_hermitian(const Matrix& m, double tol = kTolerance);
bool is_density_matrix(const Matrix& m, double tol = kTolerance);

/// Eigenvalues of a Hermitian matrix, ascending.
Eigen::VectorXd hermitian_eigenvalues(const Matrix& m);

/// 1/2 * sum |eig(a - b)|. Inputs must be Hermitian with equal shape.
double trace_distance(const Matrix& a, const Matrix& b);
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

/// ||a - b||_F^2
double frobenius_sq(const Matrix& a, const Matrix& b);

/// <psi| rho |psi>
double fidelity_overlap(const PureState& psi, const DensityMatrix& rho);
double fidelity_overlap(const PureState& psi, const Matrix& m);

Matrix kron(const Matrix& a, const Matrix& b);
Vector kron(const Vector& a, const Vector& b);
/// |psi>^{(x) t}
Vector tensor_power(const Vector& psi, int copies);

/// Trace out the first `traced` qubits.
DensityMatrix partial_trace_leading(const DensityMatrix& rho, int traced);
Matrix partial_trace_leading(const Matrix& m, std::size_t traced_dim);

/// Normalized i.i.d. complex Gaussian vector of length `dim`.
Vector haar_vector(std::size_t dim, Rng& rng);
PureState haar_sample(int qubits, Rng& rng);

/// Accumulates w * |x><x| into `m` with the active SIMD kernel.
void add_projector(Matrix& m, const Vector& x, double weight);

}  // namespace prslab::qc
