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

#ifndef MZSIM_ANALYSIS_HPP
#define MZSIM_ANALYSIS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mzsim/algebra.hpp"
#include "mzsim/circuit_dsl.hpp"
#include "mzsim/elements.hpp"

namespace mzsim {

/// Detector statistics. D1 is the H output port, D2 the V output port, and
/// absorption is whatever weight sits in the vacuum sector.
struct OutcomeDistribution {
    double p_d1 = 0.0;
    double p_d2 = 0.0;
    double p_abs = 0.0;
    /// |squared_norm(psi) - 1| of the state the distribution was read from.
    double norm_deficit = 0.0;
};

enum class SweepSource { Pipeline, ClosedForm };

const char *source_name(SweepSource source);

struct SweepRow {
    double beta = 0.0;
    double delta = 0.0;  // theta - phi, wrapped to (-pi, pi]
    double phi = 0.0;
    OutcomeDistribution distribution;
    SweepSource source = SweepSource::Pipeline;
};

struct TraceRecord {
    std::string stage_name;
    StateVector state;
};

struct McCounts {
    std::uint64_t d1 = 0;
    std::uint64_t d2 = 0;
    std::uint64_t abs = 0;

    bool operator==(const McCounts &) const = default;
};

struct McResult {
    std::uint64_t shots = 0;
    McCounts counts;
    std::uint64_t seed = 0;
    double chi_square = 0.0;
};

StateVector input_state(const CircuitSpec &spec);

/// Final state after every element; the norm is left as the circuit made it.
StateVector run_circuit(const CircuitSpec &spec);

/// Record 0 is the input; record k is the state after element k.
std::vector<TraceRecord> trace_states(const CircuitSpec &spec);

OutcomeDistribution outcome_distribution(const StateVector &psi);

/// (1 + cos phi)/2, (1 - cos phi)/2, 0.
OutcomeDistribution closed_form_mz(double phi);

/// Detection probabilities behind a semitransparent obstacle, delta = theta - phi.
OutcomeDistribution closed_form_obstacle(double beta, double delta);

/// Smallest beta where the dark-port probability P_D2 reaches the absorption
/// probability alpha^2 / 2, by bisection. Empty when P_D2 never exceeds it on (0, 1).
std::optional<double> success_threshold(double delta, double tolerance = 1e-10);

/// arg<r_H,1|spec> - arg<r_H,1|reference> in (-pi, pi]; empty when either
/// amplitude is below 1e-12 in magnitude.
std::optional<double> relative_output_phase(const CircuitSpec &spec, const CircuitSpec &reference);

/// Distribution for one (beta, delta, phi) point, theta = delta + phi, gamma = 0.
OutcomeDistribution evaluate_point(double beta, double delta, double phi, SweepSource source);

/// Row-major (beta outer, delta inner) grid evaluation.
///
/// sweep() spreads grid points over OpenMP threads; sweep_serial() is the
/// single-threaded reference. Both produce identical rows.
std::vector<SweepRow> sweep(std::span<const double> beta_grid, std::span<const double> delta_grid, double phi,
                            SweepSource source);
std::vector<SweepRow> sweep_serial(std::span<const double> beta_grid, std::span<const double> delta_grid,
                                   double phi, SweepSource source);

/// Uniform double in [0, 1) for the given shot. Counter based: depends only
/// on (seed, shot), so any partition of shots over threads sees the same stream.
double shot_uniform(std::uint64_t seed, std::uint64_t shot);

double chi_square(const OutcomeDistribution &distribution, const McCounts &counts);

/// Samples detector outcomes by inverse CDF. monte_carlo() is the OpenMP
/// version, monte_carlo_serial() the reference; counts are identical.
McResult monte_carlo(const OutcomeDistribution &distribution, std::uint64_t shots, std::uint64_t seed);
McResult monte_carlo_serial(const OutcomeDistribution &distribution, std::uint64_t shots, std::uint64_t seed);

}  // namespace mzsim

#endif  // MZSIM_ANALYSIS_HPP
