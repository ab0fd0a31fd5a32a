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

// Shared pieces of the serial and OpenMP kernels. Both translation units must
// evaluate every grid point and every shot through these same functions so the
// two paths stay bit-identical.

#ifndef MZSIM_SRC_KERNELS_HPP
#define MZSIM_SRC_KERNELS_HPP

#include <cassert>
#include <cstdint>
#include <span>

#include "mzsim/analysis.hpp"

namespace mzsim::detail {

void validate_grid(std::span<const double> beta_grid, std::span<const double> delta_grid, double phi);

SweepRow make_row(double beta, double delta, double phi, SweepSource source);

enum class Outcome { D1 = 0, D2 = 1, Absorbed = 2 };

/// Inverse-CDF table over (D1, D2, absorbed).
struct SamplingTable {
    explicit SamplingTable(const OutcomeDistribution &d);

    double cumulative[3] = {0.0, 0.0, 0.0};
    bool allowed[3] = {false, false, false};
    int last_allowed = 0;

    Outcome sample(double u) const {
        for (int k = 0; k < 3; ++k) {
            if (allowed[k] && u < cumulative[k]) {
                return static_cast<Outcome>(k);
            }
        }
        // Rounding left the final cumulative a hair below u.
        assert(allowed[last_allowed]);
        return static_cast<Outcome>(last_allowed);
    }
};

inline void tally(McCounts &counts, Outcome o) {
    switch (o) {
        case Outcome::D1:
            ++counts.d1;
            break;
        case Outcome::D2:
            ++counts.d2;
            break;
        case Outcome::Absorbed:
            ++counts.abs;
            break;
    }
}

inline void check_shots(std::uint64_t shots) {
    if (shots < 1) {
        throw ArgumentError("monte carlo needs at least one shot");
    }
}

}  // namespace mzsim::detail

#endif  // MZSIM_SRC_KERNELS_HPP
