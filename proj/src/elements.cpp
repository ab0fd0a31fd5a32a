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

#include <algorithm>
#include <cmath>

namespace mzsim {

namespace {

constexpr complex_t kI{0.0, 1.0};

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

LinearOperator spatial_mirror() { return (dyad(Channel::H, Channel::V) + dyad(Channel::V, Channel::H)) * kI; }

}  // namespace

double wrap_angle(double radians) {
    if (!std::isfinite(radians)) {
        throw ArgumentError("angle must be finite");
    }
    if (radians >= 0.0 && radians < kTwoPi) {
        return radians;
    }
    double r = std::fmod(radians, kTwoPi);
    if (r < 0.0) {
        r += kTwoPi;
    }
    // fmod of a tiny negative number lands exactly on 2pi after the shift.
    if (r >= kTwoPi) {
        r = 0.0;
    }
    return r;
}

double wrap_signed(double radians) {
    double r = wrap_angle(radians);
    if (r > std::numbers::pi) {
        r -= kTwoPi;
    }
    return r;
}

ObstacleParams::ObstacleParams(double beta, double theta, double gamma)
    : beta_(beta), theta_(wrap_angle(theta)), gamma_(wrap_angle(gamma)) {
    if (!(beta >= 0.0 && beta <= 1.0)) {
        throw ArgumentError("obstacle beta must lie in [0, 1]");
    }
}

double ObstacleParams::alpha() const { return std::sqrt(std::max(0.0, 1.0 - beta_ * beta_)); }

std::string element_name(const ElementSpec &spec) {
    return std::visit(overloaded{[](const Mirror &) { return std::string("mirror"); },
                                 [](const BeamSplitter &) { return std::string("bs"); },
                                 [](const PhaseShifter &) { return std::string("phase"); },
                                 [](const Obstacle &) { return std::string("obstacle"); }},
                      spec);
}

LinearOperator mirror_operator(const SpaceConfig &config) { return promote(spatial_mirror(), config); }

LinearOperator beam_splitter_operator(const SpaceConfig &config) {
    const LinearOperator bs =
        (LinearOperator::identity(SpaceConfig::spatial_dim) + spatial_mirror()) * complex_t(1.0 / std::sqrt(2.0));
    return promote(bs, config);
}

LinearOperator phase_shifter_operator(const SpaceConfig &config, double phi) {
    const double wrapped = wrap_angle(phi);
    const LinearOperator shifter =
        dyad(Channel::H, Channel::H) * std::polar(1.0, wrapped) + dyad(Channel::V, Channel::V);
    return promote(shifter, config);
}

LinearOperator obstacle_operator(const SpaceConfig &config, const ObstacleParams &params) {
    const std::size_t f = config.fock_dim();
    const LinearOperator arm_v =
        annihilation(f) * params.absorption() + LinearOperator::identity(f) * params.transmission();
    return tensor(dyad(Channel::V, Channel::V), arm_v) +
           tensor(dyad(Channel::H, Channel::H), LinearOperator::identity(f));
}

LinearOperator element_to_operator(const ElementSpec &spec, const SpaceConfig &config) {
    return std::visit(overloaded{[&](const Mirror &) { return mirror_operator(config); },
                                 [&](const BeamSplitter &) { return beam_splitter_operator(config); },
                                 [&](const PhaseShifter &p) { return phase_shifter_operator(config, p.phi); },
                                 [&](const Obstacle &o) { return obstacle_operator(config, o.params); }},
                      spec);
}

}  // namespace mzsim
