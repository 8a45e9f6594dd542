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

#include "prslab/quantum.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "prslab/errors.hpp"
#include "prslab/kernels.hpp"

namespace prslab::qc {

namespace {

void require_square(const Matrix& m, const char* what) {
    if (m.rows() != m.cols()) {
        throw ShapeError(std::string(what) + ": matrix is not square");
    }
}

void require_same_shape(const Matrix& a, const Matrix& b, const char* what) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ShapeError(std::string(what) + ": shape mismatch " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
    }
}

}  // namespace

int qubits_for_dimension(std::size_t dim) {
    if (dim == 0 || !std::has_single_bit(dim)) {
        throw ShapeError("dimension " + std::to_string(dim) + " is not a power of two");
    }
    int n = std::countr_zero(dim);
    if (n > kMaxQubits) {
        throw ResourceError("state on " + std::to_string(n) + " qubits exceeds the supported width");
    }
    return n;
}

PureState PureState::from_amplitudes(Vector amplitudes) {
    int n = qubits_for_dimension(static_cast<std::size_t>(amplitudes.size()));
    double norm = amplitudes.norm();
    if (std::abs(norm - 1.0) > kTolerance) {
        throw DomainError("state vector norm " + std::to_string(norm) + " is not 1");
    }
    return PureState(std::move(amplitudes), n);
}

PureState PureState::normalized(Vector amplitudes) {
    int n = qubits_for_dimension(static_cast<std::size_t>(amplitudes.size()));
    double norm = amplitudes.norm();
    if (!(norm > 0.0) || !std::isfinite(norm)) {
        throw DomainError("cannot normalize a zero or non-finite vector");
    }
    amplitudes /= norm;
    return PureState(std::move(amplitudes), n);
}

PureState PureState::basis(int qubits, std::uint64_t index) {
    if (qubits < 0 || qubits > kMaxQubits) {
        throw DomainError("qubit count out of range");
    }
    std::size_t dim = std::size_t{1} << qubits;
    if (index >= dim) {
        throw DomainError("basis index out of range");
    }
    Vector v = Vector::Zero(static_cast<Eigen::Index>(dim));
    v[static_cast<Eigen::Index>(index)] = 1.0;
    return PureState(std::move(v), qubits);
}

cplx PureState::inner(const PureState& other) const {
    if (dimension() != other.dimension()) {
        throw ShapeError("inner product of states with different dimensions");
    }
    return kernels::cdot(span(), other.span());
}

PureState PureState::tensor(const PureState& other) const {
    return PureState(kron(amps_, other.amps_), qubits_ + other.qubits_);
}

DensityMatrix PureState::projector() const { return DensityMatrix::from_pure(*this); }

DensityMatrix DensityMatrix::from_matrix(Matrix m) {
    require_square(m, "density matrix");
    int n = qubits_for_dimension(static_cast<std::size_t>(m.rows()));
    if (!is_hermitian(m)) {
        throw DomainError("density matrix is not Hermitian");
    }
    double tr = m.trace().real();
    if (std::abs(tr - 1.0) > kTolerance) {
        throw DomainError("density matrix trace " + std::to_string(tr) + " is not 1");
    }
    if (hermitian_eigenvalues(m)[0] < -kTolerance) {
        throw DomainError("density matrix has a negative eigenvalue");
    }
    return DensityMatrix(std::move(m), n);
}

DensityMatrix DensityMatrix::trusted(Matrix m) {
    require_square(m, "density matrix");
    int n = qubits_for_dimension(static_cast<std::size_t>(m.rows()));
    return DensityMatrix(std::move(m), n);
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
    auto d = static_cast<Eigen::Index>(psi.dimension());
    Matrix m = Matrix::Zero(d, d);
    add_projector(m, psi.amplitudes(), 1.0);
    return DensityMatrix(std::move(m), psi.qubits());
}

DensityMatrix DensityMatrix::maximally_mixed(int qubits) {
    if (qubits < 0 || qubits > kMaxQubits) {
        throw DomainError("qubit count out of range");
    }
    auto d = Eigen::Index{1} << qubits;
    Matrix m = Matrix::Identity(d, d) / static_cast<double>(d);
    return DensityMatrix(std::move(m), qubits);
}

double DensityMatrix::purity() const {
    // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
    return m_.squaredNorm();
}

DensityMatrix DensityMatrix::tensor(const DensityMatrix& other) const {
    return DensityMatrix(kron(m_, other.m_), qubits_ + other.qubits_);
}

bool is_hermitian(const Matrix& m, double tol) {
    if (m.rows() != m.cols()) {
        return false;
    }
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        for (Eigen::Index i = 0; i <= j; ++i) {
            if (std::abs(m(i, j) - std::conj(m(j, i))) > tol) {
                return false;
            }
        }
    }
    return true;
}

bool is_density_matrix(const Matrix& m, double tol) {
    if (m.rows() == 0 || !is_hermitian(m, tol)) {
        return false;
    }
    if (std::abs(m.trace().real() - 1.0) > tol) {
        return false;
    }
    return hermitian_eigenvalues(m)[0] >= -tol;
}

Eigen::VectorXd hermitian_eigenvalues(const Matrix& m) {
    require_square(m, "eigenvalues");
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw NumericError("Hermitian eigensolver did not converge");
    }
    return solver.eigenvalues();
}

double trace_distance(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b, "trace_distance");
    require_square(a, "trace_distance");
    Matrix diff = a - b;
    return 0.5 * hermitian_eigenvalues(diff).cwiseAbs().sum();
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
    return trace_distance(rho.matrix(), sigma.matrix());
}

double frobenius_sq(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b, "frobenius_sq");
    auto n = static_cast<std::size_t>(a.size());
    return kernels::sqdist({a.data(), n}, {b.data(), n});
}

double fidelity_overlap(const PureState& psi, const Matrix& m) {
    if (m.rows() != m.cols() || static_cast<std::size_t>(m.rows()) != psi.dimension()) {
        throw ShapeError("fidelity_overlap: dimension mismatch");
    }
    Vector mv = m * psi.amplitudes();
    return kernels::cdot(psi.span(), {mv.data(), psi.dimension()}).real();
}

double fidelity_overlap(const PureState& psi, const DensityMatrix& rho) {
    return fidelity_overlap(psi, rho.matrix());
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
        for (Eigen::Index i = 0; i < a.rows(); ++i) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

Vector kron(const Vector& a, const Vector& b) {
    Vector out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        out.segment(i * b.size(), b.size()) = a[i] * b;
    }
    return out;
}

Vector tensor_power(const Vector& psi, int copies) {
    if (copies < 1) {
        throw DomainError("tensor_power needs at least one copy");
    }
    Vector out = psi;
    for (int c = 1; c < copies; ++c) {
        out = kron(out, psi);
    }
    return out;
}

Matrix partial_trace_leading(const Matrix& m, std::size_t traced_dim) {
    require_square(m, "partial_trace");
    auto dim = static_cast<std::size_t>(m.rows());
    if (traced_dim == 0 || dim % traced_dim != 0) {
        throw ShapeError("partial_trace: traced dimension does not divide the matrix dimension");
    }
    auto keep = static_cast<Eigen::Index>(dim / traced_dim);
    Matrix out = Matrix::Zero(keep, keep);
    for (std::size_t a = 0; a < traced_dim; ++a) {
        auto off = static_cast<Eigen::Index>(a) * keep;
        out += m.block(off, off, keep, keep);
    }
    return out;
}

DensityMatrix partial_trace_leading(const DensityMatrix& rho, int traced) {
    if (traced < 0 || traced > rho.qubits()) {
        throw ShapeError("partial_trace: cannot trace more qubits than the state has");
    }
    return DensityMatrix::trusted(partial_trace_leading(rho.matrix(), std::size_t{1} << traced));
}

Vector haar_vector(std::size_t dim, Rng& rng) {
    if (dim == 0) {
        throw DomainError("haar_vector: dimension must be positive");
    }
    Vector v(static_cast<Eigen::Index>(dim));
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        double re = rng.normal();
        double im = rng.normal();
        v[i] = cplx(re, im);
    }
    return v / v.norm();
}

PureState haar_sample(int qubits, Rng& rng) {
    if (qubits < 1) {
        throw DomainError("haar_sample needs at least one qubit");
    }
    if (qubits > kMaxQubits) {
        throw ResourceError("haar_sample: too many qubits");
    }
    return PureState::normalized(haar_vector(std::size_t{1} << qubits, rng));
}

void add_projector(Matrix& m, const Vector& x, double weight) {
    if (m.rows() != x.size() || m.cols() != x.size()) {
        throw ShapeError("add_projector: dimension mismatch");
    }
    auto n = static_cast<std::size_t>(x.size());
    kernels::her_rank1({m.data(), n * n}, {x.data(), n}, weight);
}

}  // namespace prslab::qc
