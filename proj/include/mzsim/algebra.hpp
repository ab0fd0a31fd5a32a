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

#ifndef MZSIM_ALGEBRA_HPP
#define MZSIM_ALGEBRA_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mzsim {

using complex_t = std::complex<double>;

/// Raised when operand shapes do not agree (or a dimension is out of range).
class DimensionError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Raised for non-dimensional precondition violations (empty input, non-finite angles, ...).
class ArgumentError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

enum class Channel { H = 0, V = 1 };

inline constexpr std::size_t channel_index(Channel c) { return static_cast<std::size_t>(c); }
inline constexpr char channel_name(Channel c) { return c == Channel::H ? 'H' : 'V'; }

/// Spatial (H, V) times truncated Fock {|0>, ..., |F-1>}.
class SpaceConfig {
   public:
    static constexpr std::size_t spatial_dim = 2;

    explicit SpaceConfig(std::size_t fock_dim = 2);

    std::size_t fock_dim() const { return fock_dim_; }
    std::size_t dim() const { return spatial_dim * fock_dim_; }

    bool operator==(const SpaceConfig &) const = default;

   private:
    std::size_t fock_dim_;
};

/// |r_channel, occupation>. Composite index is channel_index * F + occupation.
struct BasisLabel {
    Channel channel = Channel::H;
    std::size_t occupation = 1;

    std::size_t index(const SpaceConfig &config) const;
    std::string to_string() const;

    bool operator==(const BasisLabel &) const = default;
};

/// Inverse of BasisLabel::index.
BasisLabel label_at(const SpaceConfig &config, std::size_t index);

class StateVector {
   public:
    explicit StateVector(SpaceConfig config);
    StateVector(SpaceConfig config, std::vector<complex_t> amplitudes);

    static StateVector basis(const SpaceConfig &config, BasisLabel label);

    const SpaceConfig &config() const { return config_; }
    std::size_t size() const { return amplitudes_.size(); }
    std::span<const complex_t> amplitudes() const { return amplitudes_; }
    complex_t operator[](std::size_t i) const { return amplitudes_[i]; }
    complex_t amplitude(BasisLabel label) const { return amplitudes_[label.index(config_)]; }

    StateVector operator+(const StateVector &other) const;
    StateVector operator*(complex_t scale) const;

   private:
    SpaceConfig config_;
    std::vector<complex_t> amplitudes_;
};

/// Dense row-major square complex matrix.
///
/// The operator either lives on the spatial factor (2x2), on the Fock factor
/// (F x F) or on the composite space (2F x 2F). Only the dimension is
/// tracked; tensor() and apply() check it against their operands.
class LinearOperator {
   public:
    explicit LinearOperator(std::size_t dim);
    LinearOperator(std::size_t dim, std::vector<complex_t> row_major);

    static LinearOperator identity(std::size_t dim);
    static LinearOperator zero(std::size_t dim) { return LinearOperator(dim); }

    std::size_t dim() const { return dim_; }
    complex_t operator()(std::size_t row, std::size_t col) const { return data_[row * dim_ + col]; }
    complex_t &operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
    std::span<const complex_t> data() const { return data_; }

    LinearOperator operator+(const LinearOperator &other) const;
    LinearOperator operator-(const LinearOperator &other) const;
    LinearOperator operator*(complex_t scale) const;
    /// Matrix product (this applied after `rhs`).
    LinearOperator operator*(const LinearOperator &rhs) const;

    LinearOperator adjoint() const;

    /// Largest entrywise modulus of (this - other).
    double max_abs_diff(const LinearOperator &other) const;

   private:
    std::size_t dim_;
    std::vector<complex_t> data_;
};

/// X^{k,j} = |r_k><r_j| on the spatial factor.
LinearOperator dyad(Channel k, Channel j);

/// Truncated boson annihilation operator, a|n> = sqrt(n)|n-1>.
LinearOperator annihilation(std::size_t fock_dim);

/// Kronecker product, spatial index major.
LinearOperator tensor(const LinearOperator &spatial_op, const LinearOperator &fock_op);

/// Lifts a 2x2 spatial operator to O (x) I_f.
LinearOperator promote(const LinearOperator &spatial_op, const SpaceConfig &config);

StateVector apply(const LinearOperator &op, const StateVector &psi);

/// Product of `ops` in application order: compose({O1, O2}) == O2 * O1.
LinearOperator compose(std::span<const LinearOperator> ops);
LinearOperator compose(std::initializer_list<LinearOperator> ops);

/// <psi1|psi2>, conjugate-linear in the first argument.
complex_t inner_product(const StateVector &psi1, const StateVector &psi2);

double squared_norm(const StateVector &psi);

}  // namespace mzsim

#endif  // MZSIM_ALGEBRA_HPP
