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

#include "prslab/pauli.hpp"

#include <bit>
#include <string>

#include "prslab/errors.hpp"

namespace prslab::qc {

namespace {

constexpr std::string_view kLetters = "IXYZ";

void require_dim(const PauliString& p, std::size_t dim, const char* what) {
    if (p.qubits() > 63 || (std::size_t{1} << p.qubits()) != dim) {
        throw ShapeError(std::string(what) + ": Pauli on " + std::to_string(p.qubits()) +
                         " qubits does not match dimension " + std::to_string(dim));
    }
}

}  // namespace

PauliString PauliString::from_string(std::string_view s) {
    std::vector<Pauli> labels;
    labels.reserve(s.size());
    for (char c : s) {
        auto pos = kLetters.find(c);
        if (pos == std::string_view::npos) {
            throw DomainError(std::string("invalid Pauli label '") + c + "'");
        }
        labels.push_back(static_cast<Pauli>(pos));
    }
    return PauliString(std::move(labels));
}

PauliString PauliString::from_index(std::uint64_t index, int qubits) {
    if (qubits < 0 || qubits > 31) {
        throw DomainError("from_index: qubit count out of range");
    }
    std::vector<Pauli> labels(static_cast<std::size_t>(qubits));
    for (int i = 0; i < qubits; ++i) {
        labels[static_cast<std::size_t>(i)] =
            static_cast<Pauli>((index >> (2 * (qubits - 1 - i))) & 3u);
    }
    return PauliString(std::move(labels));
}

std::string PauliString::str() const {
    std::string s;
    s.reserve(labels_.size());
    for (Pauli p : labels_) {
        s.push_back(kLetters[static_cast<std::size_t>(p)]);
    }
    return s;
}

bool PauliString::is_identity() const noexcept {
    for (Pauli p : labels_) {
        if (p != Pauli::I) {
            return false;
        }
    }
    return true;
}

std::uint64_t PauliString::x_mask() const noexcept {
    std::uint64_t m = 0;
    for (Pauli p : labels_) {
        m = (m << 1) | static_cast<std::uint64_t>(p == Pauli::X || p == Pauli::Y);
    }
    return m;
}

std::uint64_t PauliString::z_mask() const noexcept {
    std::uint64_t m = 0;
    for (Pauli p : labels_) {
        m = (m << 1) | static_cast<std::uint64_t>(p == Pauli::Z || p == Pauli::Y);
    }
    return m;
}

int PauliString::y_count() const noexcept {
    int c = 0;
    for (Pauli p : labels_) {
        c += p == Pauli::Y ? 1 : 0;
    }
    return c;
}

PauliString PauliString::concat(const PauliString& other) const {
    std::vector<Pauli> labels = labels_;
    labels.insert(labels.end(), other.labels_.begin(), other.labels_.end());
    return PauliString(std::move(labels));
}

PauliString PauliString::block(std::size_t index, std::size_t width) const {
    if ((index + 1) * width > labels_.size()) {
        throw ShapeError("Pauli block out of range");
    }
    auto first = labels_.begin() + static_cast<std::ptrdiff_t>(index * width);
    return PauliString(std::vector<Pauli>(first, first + static_cast<std::ptrdiff_t>(width)));
}

std::vector<PauliString> PauliString::split(std::size_t width) const {
    if (width == 0 || labels_.size() % width != 0) {
        throw ShapeError("Pauli length is not a multiple of the block width");
    }
    std::vector<PauliString> out;
    for (std::size_t i = 0; i < labels_.size() / width; ++i) {
        out.push_back(block(i, width));
    }
    return out;
}

cplx PauliString::phase(std::uint64_t basis_index) const noexcept {
    // Y|b> = i (-1)^b |1-b>, Z|b> = (-1)^b |b>.
    static constexpr cplx kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    int sign = std::popcount(basis_index & z_mask()) & 1;
    cplx ph = kIPow[y_count() & 3];
    return sign ? -ph : ph;
}

Matrix PauliString::matrix() const {
    auto dim = std::size_t{1} << qubits();
    Matrix m = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    std::uint64_t x = x_mask();
    for (std::uint64_t j = 0; j < dim; ++j) {
        m(static_cast<Eigen::Index>(j ^ x), static_cast<Eigen::Index>(j)) = phase(j);
    }
    return m;
}

PauliString pauli_sample(int qubits, Rng& rng) {
    if (qubits < 0) {
        throw DomainError("pauli_sample: negative qubit count");
    }
    std::vector<Pauli> labels(static_cast<std::size_t>(qubits));
    for (auto& l : labels) {
        l = static_cast<Pauli>(rng.below(4));
    }
    return PauliString(std::move(labels));
}

Vector pauli_apply(const PauliString& p, const Vector& psi) {
    auto dim = static_cast<std::size_t>(psi.size());
    require_dim(p, dim, "pauli_apply");
    std::uint64_t x = p.x_mask();
    Vector out(psi.size());
    for (std::uint64_t j = 0; j < dim; ++j) {
        out[static_cast<Eigen::Index>(j ^ x)] = p.phase(j) * psi[static_cast<Eigen::Index>(j)];
    }
    return out;
}

PureState pauli_apply(const PauliString& p, const PureState& psi) {
    return PureState::normalized(pauli_apply(p, psi.amplitudes()));
}

Matrix pauli_conjugate(const PauliString& p, const Matrix& m) {
    auto dim = static_cast<std::size_t>(m.rows());
    require_dim(p, dim, "pauli_conjugate");
    if (m.cols() != m.rows()) {
        throw ShapeError("pauli_conjugate: matrix is not square");
    }
    // (P m P^dag)[a,b] = s(a^x) m[a^x, b^x] s(b^x), real signs since the i^#Y factors cancel.
    std::uint64_t x = p.x_mask();
    std::uint64_t z = p.z_mask();
    auto sign = [z](std::uint64_t j) { return (std::popcount(j & z) & 1) ? -1.0 : 1.0; };
    Matrix out(m.rows(), m.cols());
    for (std::uint64_t b = 0; b < dim; ++b) {
        std::uint64_t bs = b ^ x;
        double sb = sign(bs);
        for (std::uint64_t a = 0; a < dim; ++a) {
            std::uint64_t as = a ^ x;
            out(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) =
                (sign(as) * sb) * m(static_cast<Eigen::Index>(as), static_cast<Eigen::Index>(bs));
        }
    }
    return out;
}

DensityMatrix pauli_apply(const PauliString& p, const DensityMatrix& rho) {
    return DensityMatrix::trusted(pauli_conjugate(p, rho.matrix()));
}

Matrix pauli_conjugate_trailing(const PauliString& p, const Matrix& m) {
    auto dim = static_cast<std::size_t>(m.rows());
    auto pdim = std::size_t{1} << p.qubits();
    if (dim % pdim != 0) {
        throw ShapeError("pauli_conjugate_trailing: dimension mismatch");
    }
    std::size_t lead = dim / pdim;
    if (lead == 1) {
        return pauli_conjugate(p, m);
    }
    std::vector<Pauli> labels(static_cast<std::size_t>(std::countr_zero(lead)), Pauli::I);
    labels.insert(labels.end(), p.labels().begin(), p.labels().end());
    return pauli_conjugate(PauliString(std::move(labels)), m);
}

cplx pauli_expectation(const PauliString& p, const Matrix& m) {
    auto dim = static_cast<std::size_t>(m.rows());
    require_dim(p, dim, "pauli_expectation");
    // Tr(P m) = sum_i phase(i) m[i, i ^ x]
    std::uint64_t x = p.x_mask();
    cplx acc = 0.0;
    for (std::uint64_t i = 0; i < dim; ++i) {
        acc += p.phase(i) * m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i ^ x));
    }
    return acc;
}

}  // namespace prslab::qc
