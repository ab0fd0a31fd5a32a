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

#include "mzsim/elements.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace mzsim;

namespace {

const SpaceConfig kF2{2};
const complex_t kI{0.0, 1.0};
constexpr double kPi = std::numbers::pi;

StateVector ket(Channel c, std::size_t n, const SpaceConfig &space = kF2) {
    return StateVector::basis(space, {c, n});
}

LinearOperator restrict_to(const LinearOperator &op, std::initializer_list<std::size_t> idx) {
    LinearOperator out(idx.size());
    std::size_t r = 0;
    for (std::size_t i : idx) {
        std::size_t c = 0;
        for (std::size_t j : idx) {
            out(r, c++) = op(i, j);
        }
        ++r;
    }
    return out;
}

}  // namespace

TEST(angles, wrapping) {
    EXPECT_EQ(wrap_angle(0.0), 0.0);
    EXPECT_EQ(wrap_angle(kTwoPi), 0.0);
    EXPECT_NEAR(wrap_angle(-kPi / 2), 3 * kPi / 2, 1e-15);
    EXPECT_EQ(wrap_angle(-1e-300), 0.0);
    EXPECT_NEAR(wrap_signed(3 * kPi / 2), -kPi / 2, 1e-15);
    EXPECT_EQ(wrap_signed(kPi), kPi);
    EXPECT_EQ(wrap_signed(-kPi), kPi);
    EXPECT_THROW(wrap_angle(std::nan("")), ArgumentError);
    EXPECT_THROW(wrap_angle(INFINITY), ArgumentError);
}

TEST(ObstacleParams, derived_coefficients) {
    for (double beta : {0.0, 0.1, 0.5, 0.6, 0.99, 1.0}) {
        const ObstacleParams p(beta, 0.3, 1.1);
        EXPECT_NEAR(p.alpha() * p.alpha() + p.beta() * p.beta(), 1.0, 1e-14);
        EXPECT_LT(std::abs(p.transmission() - std::polar(beta, 0.3)), 1e-15);
        EXPECT_LT(std::abs(p.absorption() - std::polar(std::sqrt(1 - beta * beta), 1.1)), 1e-15);
    }
    EXPECT_THROW(ObstacleParams(-0.01, 0.0), ArgumentError);
    EXPECT_THROW(ObstacleParams(1.01, 0.0), ArgumentError);
    EXPECT_THROW(ObstacleParams(std::nan(""), 0.0), ArgumentError);
    EXPECT_NEAR(ObstacleParams(0.5, -kPi / 2).theta(), 3 * kPi / 2, 1e-15);
}

TEST(mirror, action_and_unitarity) {
    const LinearOperator m = mirror_operator(kF2);
    test::expect_state_near(apply(m, ket(Channel::H, 1)), ket(Channel::V, 1) * kI, 1e-15);
    EXPECT_LT((m * m.adjoint()).max_abs_diff(LinearOperator::identity(4)), 1e-15);

    const complex_t e = std::polar(1.0, 0.7);
    const double s = 1.0 / std::sqrt(2.0);
    const StateVector before = (ket(Channel::H, 1) * e + ket(Channel::V, 0) * kI) * complex_t(s);
    const StateVector after = (ket(Channel::V, 1) * e + ket(Channel::H, 0) * kI) * (kI * s);
    test::expect_state_near(apply(m, before), after, 1e-15);
}

TEST(beam_splitter, matches_entrywise_oracle) {
    const LinearOperator bs = beam_splitter_operator(kF2);
    const oracle::Mat4 expected = oracle::kron(oracle::beam_splitter2(), {{{1.0, 0.0}, {0.0, 1.0}}});
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            EXPECT_LT(std::abs(bs(i, j) - expected[i][j]), 1e-15);
        }
    }
    // Brute force (I+M)(I+M)^dagger / 2 and (I+M)^2 / 2 on the spatial factor.
    const oracle::Mat2 b = oracle::beam_splitter2();
    const oracle::Mat2 bbd = oracle::mul(b, oracle::dagger(b));
    const oracle::Mat2 bb = oracle::mul(b, b);
    const oracle::Mat2 m = oracle::mirror2();
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            EXPECT_LT(std::abs(bbd[i][j] - (i == j ? 1.0 : 0.0)), 1e-15);
            EXPECT_LT(std::abs(bb[i][j] - m[i][j]), 1e-15);
        }
    }
    EXPECT_LT((bs * bs.adjoint()).max_abs_diff(LinearOperator::identity(4)), 1e-15);
    EXPECT_LT((bs * bs).max_abs_diff(mirror_operator(kF2)), 1e-15);
}

TEST(phase_shifter, special_angles) {
    EXPECT_EQ(phase_shifter_operator(kF2, 0.0).max_abs_diff(LinearOperator::identity(4)), 0.0);
    const LinearOperator p = phase_shifter_operator(kF2, kPi);
    test::expect_state_near(apply(p, ket(Channel::H, 1)), ket(Channel::H, 1) * complex_t(-1.0), 1e-15);
    test::expect_state_near(apply(p, ket(Channel::V, 1)), ket(Channel::V, 1), 0.0);
    EXPECT_THROW(phase_shifter_operator(kF2, std::nan("")), ArgumentError);

    const double phi = 1.3;
    const double s = 1.0 / std::sqrt(2.0);
    const StateVector in = (ket(Channel::H, 1) + ket(Channel::V, 1) * kI) * complex_t(s);
    const StateVector out = (ket(Channel::H, 1) * std::polar(1.0, phi) + ket(Channel::V, 1) * kI) * complex_t(s);
    test::expect_state_near(apply(phase_shifter_operator(kF2, phi), in), out, 1e-15);
}

TEST(unitary_elements, grid) {
    for (std::size_t f : {2u, 3u}) {
        const SpaceConfig space(f);
        const LinearOperator id = LinearOperator::identity(space.dim());
        EXPECT_LT((mirror_operator(space) * mirror_operator(space).adjoint()).max_abs_diff(id), 1e-13);
        EXPECT_LT((beam_splitter_operator(space) * beam_splitter_operator(space).adjoint()).max_abs_diff(id), 1e-13);
        for (int k = 0; k < 100; ++k) {
            const LinearOperator p = phase_shifter_operator(space, kTwoPi * k / 100.0);
            EXPECT_LT((p * p.adjoint()).max_abs_diff(id), 1e-13);
        }
    }
}

TEST(phase_shifter, group_law) {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    for (int trial = 0; trial < 200; ++trial) {
        const double a = u(rng);
        const double b = u(rng);
        const LinearOperator lhs = phase_shifter_operator(kF2, a) * phase_shifter_operator(kF2, b);
        const LinearOperator rhs = phase_shifter_operator(kF2, std::fmod(a + b, kTwoPi));
        EXPECT_LT(lhs.max_abs_diff(rhs), 1e-13);
    }
}

TEST(obstacle, elitzur_vaidman_absorber) {
    const LinearOperator b = obstacle_operator(kF2, ObstacleParams(0.0, 0.0, 0.0));
    test::expect_state_near(apply(b, ket(Channel::V, 1)), ket(Channel::V, 0), 0.0);
    test::expect_state_near(apply(b, ket(Channel::H, 1)), ket(Channel::H, 1), 0.0);
    const LinearOperator promoted_a =
        tensor(dyad(Channel::V, Channel::V), annihilation(2)) + tensor(dyad(Channel::H, Channel::H), LinearOperator::identity(2));
    EXPECT_LT(b.max_abs_diff(promoted_a), 1e-14);

    const complex_t e = std::polar(1.0, 0.4);
    const double s = 1.0 / std::sqrt(2.0);
    const StateVector in = (ket(Channel::H, 1) * e + ket(Channel::V, 1) * kI) * complex_t(s);
    const StateVector out = (ket(Channel::H, 1) * e + ket(Channel::V, 0) * kI) * complex_t(s);
    test::expect_state_near(apply(b, in), out, 1e-15);
}

TEST(obstacle, transparent_is_identity_on_reachable_sector) {
    const LinearOperator b = obstacle_operator(kF2, ObstacleParams(1.0, 0.0, 0.0));
    // Indices H0, H1, V1; V0 is attenuated by Lambda_t, which is 1 here anyway.
    EXPECT_LT(restrict_to(b, {0, 1, 3}).max_abs_diff(LinearOperator::identity(3)), 1e-14);
    for (std::size_t i : {0u, 1u, 3u}) {
        test::expect_state_near(apply(b, StateVector::basis(kF2, label_at(kF2, i))),
                                StateVector::basis(kF2, label_at(kF2, i)), 1e-14);
    }
}

TEST(obstacle, partial_transparency_brute_force) {
    // Hand-built matrix: V block [[Lt, La], [0, Lt]] in (V0, V1), H block identity.
    const double beta = 0.6;
    const double alpha = std::sqrt(1.0 - beta * beta);
    EXPECT_NEAR(alpha, 0.8, 1e-15);
    oracle::Mat4 expected{};
    expected[0][0] = 1.0;
    expected[1][1] = 1.0;
    expected[2][2] = beta;
    expected[2][3] = alpha;
    expected[3][3] = beta;
    const LinearOperator b = obstacle_operator(kF2, ObstacleParams(beta, 0.0, 0.0));
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            EXPECT_LT(std::abs(b(i, j) - expected[i][j]), 1e-15);
        }
    }
    test::expect_state_near(apply(b, ket(Channel::V, 1)),
                            ket(Channel::V, 0) * complex_t(0.8) + ket(Channel::V, 1) * complex_t(0.6), 1e-15);
}

TEST(obstacle, contractive_off_the_v_vacuum) {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 500; ++trial) {
        const ObstacleParams p(u(rng), kTwoPi * u(rng), kTwoPi * u(rng));
        StateVector psi = test::random_state(kF2, rng);
        std::vector<complex_t> amps(psi.amplitudes().begin(), psi.amplitudes().end());
        amps[BasisLabel{Channel::V, 0}.index(kF2)] = 0.0;
        psi = StateVector(kF2, amps);
        const StateVector out = apply(obstacle_operator(kF2, p), psi);
        EXPECT_LE(squared_norm(out), squared_norm(psi) + 1e-12);
    }
}

TEST(obstacle, truncation_artifact_above_single_photon) {
    // Literal operator at F=3: |r_V,2> -> La*sqrt(2)|r_V,1> + Lt|r_V,2>.
    const SpaceConfig f3(3);
    const ObstacleParams p(0.5, 0.2, 0.9);
    const StateVector out = apply(obstacle_operator(f3, p), ket(Channel::V, 2, f3));
    const StateVector expected =
        ket(Channel::V, 1, f3) * (p.absorption() * std::sqrt(2.0)) + ket(Channel::V, 2, f3) * p.transmission();
    test::expect_state_near(out, expected, 1e-15);
    EXPECT_GT(squared_norm(out), 1.0);
}

TEST(element_to_operator, dispatch) {
    EXPECT_EQ(element_to_operator(Mirror{}, kF2).max_abs_diff(mirror_operator(kF2)), 0.0);
    EXPECT_EQ(element_to_operator(BeamSplitter{}, kF2).max_abs_diff(beam_splitter_operator(kF2)), 0.0);
    EXPECT_EQ(element_to_operator(PhaseShifter(0.0), kF2).max_abs_diff(LinearOperator::identity(4)), 0.0);
    const ObstacleParams p(0.0, 0.0, 0.0);
    EXPECT_EQ(element_to_operator(Obstacle{p}, kF2).max_abs_diff(obstacle_operator(kF2, p)), 0.0);
    EXPECT_EQ(element_name(Obstacle{p}), "obstacle");
    EXPECT_EQ(element_name(PhaseShifter(1.0)), "phase");
    EXPECT_NEAR(PhaseShifter(-kPi).phi, kPi, 1e-15);
}
