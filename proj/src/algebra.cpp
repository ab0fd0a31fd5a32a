// Copyright 2026 The mzsim Authors
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

#include "mzsim/algebra.hpp"

#include <algorithm>
#include <cmath>

namespace mzsim {

SpaceConfig::SpaceConfig(std::size_t fock_dim) : fock_dim_(fock_dim) {
    if (fock_dim < 2) {
        throw DimensionError("fock_dim must be >= 2, got " + std::to_string(fock_dim));
    }
}

std::size_t BasisLabel::index(const SpaceConfig &config) const {
    if (occupation >= config.fock_dim()) {
        throw DimensionError("occupation " + std::to_string(occupation) + " outside truncation F=" +
                             std::to_string(config.fock_dim()));
    }
    return channel_index(channel) * config.fock_dim() + occupation;
}

std::string BasisLabel::to_string() const {
    return std::string("|r_") + channel_name(channel) + "," + std::to_string(occupation) + ">";
}

BasisLabel label_at(const SpaceConfig &config, std::size_t index) {
    if (index >= config.dim()) {
        throw DimensionError("basis index out of range");
    }
    return {index < config.fock_dim() ? Channel::H : Channel::V, index % config.fock_dim()};
}

StateVector::StateVector(SpaceConfig config) : config_(config), amplitudes_(config.dim()) {}

StateVector::StateVector(SpaceConfig config, std::vector<complex_t> amplitudes)
    : config_(config), amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() != config_.dim()) {
        throw DimensionError("state has " + std::to_string(amplitudes_.size()) +
                             " amplitudes, space dimension is " + std::to_string(config_.dim()));
    }
}

StateVector StateVector::basis(const SpaceConfig &config, BasisLabel label) {
    std::vector<complex_t> amps(config.dim());
    amps[label.index(config)] = 1.0;
    return {config, std::move(amps)};
}

StateVector StateVector::operator+(const StateVector &other) const {
    if (!(config_ == other.config_)) {
        throw DimensionError("state addition across different spaces");
    }
    std::vector<complex_t> out(amplitudes_);
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] += other.amplitudes_[i];
    }
    return {config_, std::move(out)};
}

StateVector StateVector::operator*(complex_t scale) const {
    std::vector<complex_t> out(amplitudes_);
    for (auto &a : out) {
        a *= scale;
    }
    return {config_, std::move(out)};
}

LinearOperator::LinearOperator(std::size_t dim) : dim_(dim), data_(dim * dim) {
    if (dim == 0) {
        throw DimensionError("operator dimension must be positive");
    }
}

LinearOperator::LinearOperator(std::size_t dim, std::vector<complex_t> row_major)
    : dim_(dim), data_(std::move(row_major)) {
    if (dim == 0 || data_.size() != dim * dim) {
        throw DimensionError("operator data is not a square " + std::to_string(dim) + "x" +
                             std::to_string(dim) + " matrix");
    }
}

LinearOperator LinearOperator::identity(std::size_t dim) {
    LinearOperator out(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        out(i, i) = 1.0;
    }
    return out;
}

LinearOperator LinearOperator::operator+(const LinearOperator &other) const {
    if (dim_ != other.dim_) {
        throw DimensionError("operator addition dimension mismatch");
    }
    LinearOperator out(*this);
    for (std::size_t i = 0; i < data_.size(); ++i) {
        out.data_[i] += other.data_[i];
    }
    return out;
}

LinearOperator LinearOperator::operator-(const LinearOperator &other) const {
    return *this + other * complex_t(-1.0);
}

LinearOperator LinearOperator::operator*(complex_t scale) const {
    LinearOperator out(*this);
    for (auto &x : out.data_) {
        x *= scale;
    }
    return out;
}

LinearOperator LinearOperator::operator*(const LinearOperator &rhs) const {
    if (dim_ != rhs.dim_) {
        throw DimensionError("operator product dimension mismatch");
    }
    LinearOperator out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t k = 0; k < dim_; ++k) {
            const complex_t lhs_ik = (*this)(i, k);
            if (lhs_ik == complex_t{}) {
                continue;
            }
            for (std::size_t j = 0; j < dim_; ++j) {
                out(i, j) += lhs_ik * rhs(k, j);
            }
        }
    }
    return out;
}

LinearOperator LinearOperator::adjoint() const {
    LinearOperator out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            out(j, i) = std::conj((*this)(i, j));
        }
    }
    return out;
}

double LinearOperator::max_abs_diff(const LinearOperator &other) const {
    if (dim_ != other.dim_) {
        throw DimensionError("operator comparison dimension mismatch");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < data_.size(); ++i) {
        worst = std::max(worst, std::abs(data_[i] - other.data_[i]));
    }
    return worst;
}

LinearOperator dyad(Channel k, Channel j) {
    LinearOperator out(SpaceConfig::spatial_dim);
    out(channel_index(k), channel_index(j)) = 1.0;
    return out;
}

LinearOperator annihilation(std::size_t fock_dim) {
    if (fock_dim < 2) {
        throw DimensionError("annihilation operator needs F >= 2");
    }
    LinearOperator out(fock_dim);
    for (std::size_t n = 1; n < fock_dim; ++n) {
        out(n - 1, n) = std::sqrt(static_cast<double>(n));
    }
    return out;
}

LinearOperator tensor(const LinearOperator &spatial_op, const LinearOperator &fock_op) {
    if (spatial_op.dim() != SpaceConfig::spatial_dim) {
        throw DimensionError("tensor: spatial operand must be 2x2");
    }
    if (fock_op.dim() < 2) {
        throw DimensionError("tensor: Fock operand must be at least 2x2");
    }
    const std::size_t f = fock_op.dim();
    LinearOperator out(SpaceConfig::spatial_dim * f);
    for (std::size_t k = 0; k < SpaceConfig::spatial_dim; ++k) {
        for (std::size_t j = 0; j < SpaceConfig::spatial_dim; ++j) {
            const complex_t s = spatial_op(k, j);
            if (s == complex_t{}) {
                continue;
            }
            for (std::size_t m = 0; m < f; ++m) {
                for (std::size_t n = 0; n < f; ++n) {
                    out(k * f + m, j * f + n) = s * fock_op(m, n);
                }
            }
        }
    }
    return out;
}

LinearOperator promote(const LinearOperator &spatial_op, const SpaceConfig &config) {
    return tensor(spatial_op, LinearOperator::identity(config.fock_dim()));
}

StateVector apply(const LinearOperator &op, const StateVector &psi) {
    const std::size_t n = psi.size();
    if (op.dim() != n) {
        throw DimensionError("apply: operator is " + std::to_string(op.dim()) + "x" +
                             std::to_string(op.dim()) + ", state has " + std::to_string(n) +
                             " amplitudes");
    }
    std::vector<complex_t> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        complex_t acc{};
        for (std::size_t j = 0; j < n; ++j) {
            acc += op(i, j) * psi[j];
        }
        out[i] = acc;
    }
    return {psi.config(), std::move(out)};
}

LinearOperator compose(std::span<const LinearOperator> ops) {
    if (ops.empty()) {
        throw ArgumentError("compose: empty operator sequence");
    }
    LinearOperator acc = ops.front();
    for (std::size_t i = 1; i < ops.size(); ++i) {
        acc = ops[i] * acc;
    }
    return acc;
}

LinearOperator compose(std::initializer_list<LinearOperator> ops) {
    return compose(std::span<const LinearOperator>(ops.begin(), ops.size()));
}

complex_t inner_product(const StateVector &psi1, const StateVector &psi2) {
    if (!(psi1.config() == psi2.config())) {
        throw DimensionError("inner_product: states live in different spaces");
    }
    complex_t acc{};
    for (std::size_t i = 0; i < psi1.size(); ++i) {
        acc += std::conj(psi1[i]) * psi2[i];
    }
    return acc;
}

double squared_norm(const StateVector &psi) {
    double acc = 0.0;
    for (const complex_t &a : psi.amplitudes()) {
        acc += std::norm(a);
    }
    return acc;
}

}  // namespace mzsim
