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

// Single-threaded reference kernels. Tests compare the OpenMP versions against these.

#include "kernels.hpp"

namespace mzsim {

double shot_uniform(std::uint64_t seed, std::uint64_t shot) {
    // SplitMix64 finalizer over a Weyl sequence indexed by shot.
    std::uint64_t z = seed + (shot + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    z = z ^ (z >> 31);
    return static_cast<double>(z >> 11) * 0x1.0p-53;
}

std::vector<SweepRow> sweep_serial(std::span<const double> beta_grid, std::span<const double> delta_grid,
                                   double phi, SweepSource source) {
    detail::validate_grid(beta_grid, delta_grid, phi);
    std::vector<SweepRow> rows;
    rows.reserve(beta_grid.size() * delta_grid.size());
    for (double beta : beta_grid) {
        for (double delta : delta_grid) {
            rows.push_back(detail::make_row(beta, delta, phi, source));
        }
    }
    return rows;
}

McResult monte_carlo_serial(const OutcomeDistribution &distribution, std::uint64_t shots, std::uint64_t seed) {
    detail::check_shots(shots);
    const detail::SamplingTable table(distribution);
    McResult result;
    result.shots = shots;
    result.seed = seed;
    for (std::uint64_t i = 0; i < shots; ++i) {
        detail::tally(result.counts, table.sample(shot_uniform(seed, i)));
    }
    result.chi_square = chi_square(distribution, result.counts);
    return result;
}

}  // namespace mzsim
