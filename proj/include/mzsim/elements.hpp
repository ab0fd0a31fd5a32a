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

#ifndef MZSIM_ELEMENTS_HPP
#define MZSIM_ELEMENTS_HPP

#include <numbers>
#include <string>
#include <variant>

#include "mzsim/algebra.hpp"

namespace mzsim {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Maps a finite angle onto [0, 2pi). Throws ArgumentError on NaN/inf.
double wrap_angle(double radians);

/// Maps a finite angle onto (-pi, pi].
double wrap_signed(double radians);

/// Semitransparent obstacle: transmission beta*e^{i theta}, absorption alpha*e^{i gamma}.
///
/// beta = 0 is the fully absorbing Elitzur-Vaidman object, beta = 1 is fully
/// transparent. Angles are wrapped to [0, 2pi) on construction.
class ObstacleParams {
   public:
    ObstacleParams() = default;
    ObstacleParams(double beta, double theta, double gamma = 0.0);

    double beta() const { return beta_; }
    double theta() const { return theta_; }
    double gamma() const { return gamma_; }
    double alpha() const;

    complex_t transmission() const { return std::polar(beta_, theta_); }
    complex_t absorption() const { return std::polar(alpha(), gamma_); }

    bool operator==(const ObstacleParams &) const = default;

   private:
    double beta_ = 0.0;
    double theta_ = 0.0;
    double gamma_ = 0.0;
};

struct Mirror {
    bool operator==(const Mirror &) const = default;
};

struct BeamSplitter {
    bool operator==(const BeamSplitter &) const = default;
};

/// Phase e^{i phi} on the H channel.
struct PhaseShifter {
    double phi = 0.0;

    PhaseShifter() = default;
    explicit PhaseShifter(double radians) : phi(wrap_angle(radians)) {}

    bool operator==(const PhaseShifter &) const = default;
};

/// Obstacle sitting in the V arm.
struct Obstacle {
    ObstacleParams params;

    bool operator==(const Obstacle &) const = default;
};

using ElementSpec = std::variant<Mirror, BeamSplitter, PhaseShifter, Obstacle>;

std::string element_name(const ElementSpec &spec);

LinearOperator mirror_operator(const SpaceConfig &config);
LinearOperator beam_splitter_operator(const SpaceConfig &config);
LinearOperator phase_shifter_operator(const SpaceConfig &config, double phi);

/// X^{V,V} (x) (Lambda_a a + Lambda_t I_f) + X^{H,H} (x) I_f.
///
/// Built literally, so it is not unitary: the vacuum |r_V,0> is attenuated by
/// Lambda_t, and at F > 2 states |r_V,n>, n >= 2 can gain norm.
LinearOperator obstacle_operator(const SpaceConfig &config, const ObstacleParams &params);

LinearOperator element_to_operator(const ElementSpec &spec, const SpaceConfig &config);

}  // namespace mzsim

#endif  // MZSIM_ELEMENTS_HPP
