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

#include "mzsim/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "kernels.hpp"

namespace mzsim {

const char *source_name(SweepSource source) { return source == SweepSource::Pipeline ? "pipeline" : "closed_form"; }

StateVector input_state(const CircuitSpec &spec) { return StateVector::basis(spec.space(), spec.input); }

StateVector run_circuit(const CircuitSpec &spec) {
    const SpaceConfig space = spec.space();
    StateVector psi = input_state(spec);
    for (const ElementSpec &el : spec.elements) {
        psi = apply(element_to_operator(el, space), psi);
    }
    return psi;
}

std::vector<TraceRecord> trace_states(const CircuitSpec &spec) {
    const SpaceConfig space = spec.space();
    std::vector<TraceRecord> records;
    records.reserve(spec.elements.size() + 1);
    records.push_back({"input", input_state(spec)});
    for (const ElementSpec &el : spec.elements) {
        records.push_back({element_name(el), apply(element_to_operator(el, space), records.back().state)});
    }
    return records;
}

OutcomeDistribution outcome_distribution(const StateVector &psi) {
    const SpaceConfig &space = psi.config();
    OutcomeDistribution out;
    for (std::size_t i = 0; i < psi.size(); ++i) {
        const BasisLabel label = label_at(space, i);
        const double w = std::norm(psi[i]);
        if (label.occupation == 0) {
            out.p_abs += w;
        } else if (label.channel == Channel::H) {
            out.p_d1 += w;
        } else {
            out.p_d2 += w;
        }
    }
    out.norm_deficit = std::abs(out.p_d1 + out.p_d2 + out.p_abs - 1.0);
    return out;
}

OutcomeDistribution closed_form_mz(double phi) {
    if (!std::isfinite(phi)) {
        throw ArgumentError("phi must be finite");
    }
    const double c = std::cos(phi);
    return {0.5 * (1.0 + c), 0.5 * (1.0 - c), 0.0, 0.0};
}

OutcomeDistribution closed_form_obstacle(double beta, double delta) {
    if (!(beta >= 0.0 && beta <= 1.0)) {
        throw ArgumentError("beta must lie in [0, 1]");
    }
    if (!std::isfinite(delta)) {
        throw ArgumentError("delta must be finite");
    }
    const double b2 = beta * beta;
    const double cross = 2.0 * beta * std::cos(delta);
    return {0.25 * (1.0 + b2 + cross), 0.25 * (1.0 + b2 - cross), 0.5 * (1.0 - b2), 0.0};
}

std::optional<double> success_threshold(double delta, double tolerance) {
    const auto margin = [delta](double beta) {
        const OutcomeDistribution d = closed_form_obstacle(beta, delta);
        return d.p_d2 - d.p_abs;
    };
    // margin(0) = -1/4 always and margin is convex in beta, so a sign change
    // on [0, 1] brackets the single crossing.
    double lo = 0.0;
    double hi = 1.0;
    if (margin(hi) <= 0.0) {
        return std::nullopt;
    }
    while (hi - lo > tolerance) {
        const double mid = 0.5 * (lo + hi);
        if (margin(mid) < 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

std::optional<double> relative_output_phase(const CircuitSpec &spec, const CircuitSpec &reference) {
    const BasisLabel d1{Channel::H, 1};
    const complex_t a = run_circuit(spec).amplitude(d1);
    const complex_t b = run_circuit(reference).amplitude(d1);
    if (std::abs(a) < 1e-12 || std::abs(b) < 1e-12) {
        return std::nullopt;
    }
    return wrap_signed(std::arg(a) - std::arg(b));
}

OutcomeDistribution evaluate_point(double beta, double delta, double phi, SweepSource source) {
    if (source == SweepSource::ClosedForm) {
        return closed_form_obstacle(beta, delta);
    }
    return outcome_distribution(run_circuit(obstacle_circuit(phi, ObstacleParams(beta, delta + phi))));
}

double chi_square(const OutcomeDistribution &distribution, const McCounts &counts) {
    const double shots = static_cast<double>(counts.d1 + counts.d2 + counts.abs);
    const double probs[3] = {distribution.p_d1, distribution.p_d2, distribution.p_abs};
    const std::uint64_t observed[3] = {counts.d1, counts.d2, counts.abs};
    double chi = 0.0;
    for (int k = 0; k < 3; ++k) {
        const double expected = shots * probs[k];
        if (expected <= 0.0) {
            continue;  // zero-probability category; sampler never hits it
        }
        const double diff = static_cast<double>(observed[k]) - expected;
        chi += diff * diff / expected;
    }
    return chi;
}

namespace detail {

void validate_grid(std::span<const double> beta_grid, std::span<const double> delta_grid, double phi) {
    if (beta_grid.empty() || delta_grid.empty()) {
        throw ArgumentError("sweep grids must be non-empty");
    }
    for (double b : beta_grid) {
        if (!(b >= 0.0 && b <= 1.0)) {
            throw ArgumentError("sweep beta values must lie in [0, 1]");
        }
    }
    for (double d : delta_grid) {
        if (!std::isfinite(d)) {
            throw ArgumentError("sweep delta values must be finite");
        }
    }
    if (!std::isfinite(phi)) {
        throw ArgumentError("sweep phi must be finite");
    }
}

SweepRow make_row(double beta, double delta, double phi, SweepSource source) {
    return {beta, wrap_signed(delta), phi, evaluate_point(beta, delta, phi, source), source};
}

SamplingTable::SamplingTable(const OutcomeDistribution &d) {
    const double p[3] = {d.p_d1, d.p_d2, d.p_abs};
    double total = 0.0;
    for (int k = 0; k < 3; ++k) {
        if (!std::isfinite(p[k]) || p[k] < -1e-12) {
            throw ArgumentError("distribution components must be non-negative");
        }
        total += std::max(0.0, p[k]);
    }
    if (std::abs(total - 1.0) > 1e-10) {
        throw ArgumentError("distribution must sum to 1");
    }
    double acc = 0.0;
    for (int k = 0; k < 3; ++k) {
        const double pk = std::max(0.0, p[k]);
        acc += pk / total;
        cumulative[k] = acc;
        allowed[k] = pk > 0.0;
        if (allowed[k]) {
            last_allowed = k;
        }
    }
}

}  // namespace detail

}  // namespace mzsim
