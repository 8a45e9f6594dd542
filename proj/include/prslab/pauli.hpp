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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "prslab/quantum.hpp"

namespace prslab::qc {

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

/// Projective n-qubit Pauli operator (global phase dropped).
class PauliString {
   public:
    PauliString() = default;
    explicit PauliString(int qubits) : labels_(static_cast<std::size_t>(qubits), Pauli::I) {}
    explicit PauliString(std::vector<Pauli> labels) : labels_(std::move(labels)) {}

    static PauliString from_string(std::string_view s);  // "IXYZ"
    /// Label i is (index >> 2(n-1-i)) & 3 with I,X,Y,Z = 0..3.
    static PauliString from_index(std::uint64_t index, int qubits);

    int qubits() const noexcept { return static_cast<int>(labels_.size()); }
    Pauli operator[](std::size_t i) const { return labels_[i]; }
    const std::vector<Pauli>& labels() const noexcept { return labels_; }
    std::string str() const;
    bool is_identity() const noexcept;

    /// Bit-flip mask over basis indices (X and Y positions).
    std::uint64_t x_mask() const noexcept;
    /// Phase-flip mask (Z and Y positions).
    std::uint64_t z_mask() const noexcept;
    int y_count() const noexcept;

    PauliString concat(const PauliString& other) const;
    PauliString block(std::size_t index, std::size_t width) const;
    std::vector<PauliString> split(std::size_t width) const;

    /// P|j> = phase(j) |j ^ x_mask>
    cplx phase(std::uint64_t basis_index) const noexcept;

    Matrix matrix() const;

    bool operator==(const PauliString&) const = default;

   private:
    std::vector<Pauli> labels_;
};

PauliString pauli_sample(int qubits, Rng& rng);

Vector pauli_apply(const PauliString& p, const Vector& psi);
PureState pauli_apply(const PauliString& p, const PureState& psi);
/// P m P^dagger
Matrix pauli_conjugate(const PauliString& p, const Matrix& m);
DensityMatrix pauli_apply(const PauliString& p, const DensityMatrix& rho);
/// (I_{2^lead} (x) P) m (I (x) P)^dagger
Matrix pauli_conjugate_trailing(const PauliString& p, const Matrix& m);

/// Tr(P m); real for Hermitian m. O(dimension).
cplx pauli_expectation(const PauliString& p, const Matrix& m);

}  // namespace prslab::qc
