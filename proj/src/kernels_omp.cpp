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

#include <cstdint>
#include <exception>

#include "kernels.hpp"

namespace mzsim {

std::vector<SweepRow> sweep(std::span<const double> beta_grid, std::span<const double> delta_grid, double phi,
                            SweepSource source) {
    detail::validate_grid(beta_grid, delta_grid, phi);
    const std::int64_t n_delta = static_cast<std::int64_t>(delta_grid.size());
    const std::int64_t n = static_cast<std::int64_t>(beta_grid.size()) * n_delta;
    std::vector<SweepRow> rows(static_cast<std::size_t>(n));

    // Exceptions must not cross the parallel region boundary.
    std::exception_ptr failure;
#pragma omp parallel for schedule(static)
    for (std::int64_t idx = 0; idx < n; ++idx) {
        try {
            rows[static_cast<std::size_t>(idx)] =
                detail::make_row(beta_grid[static_cast<std::size_t>(idx / n_delta)],
                                 delta_grid[static_cast<std::size_t>(idx % n_delta)], phi, source);
        } catch (...) {
#pragma omp critical(mzsim_sweep_failure)
            if (!failure) {
                failure = std::current_exception();
            }
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return rows;
}

McResult monte_carlo(const OutcomeDistribution &distribution, std::uint64_t shots, std::uint64_t seed) {
    detail::check_shots(shots);
    const detail::SamplingTable table(distribution);
    std::uint64_t d1 = 0;
    std::uint64_t d2 = 0;
    std::uint64_t absorbed = 0;
    const std::int64_t n = static_cast<std::int64_t>(shots);
#pragma omp parallel for schedule(static) reduction(+ : d1, d2, absorbed)
    for (std::int64_t i = 0; i < n; ++i) {
        switch (table.sample(shot_uniform(seed, static_cast<std::uint64_t>(i)))) {
            case detail::Outcome::D1:
                ++d1;
                break;
            case detail::Outcome::D2:
                ++d2;
                break;
            case detail::Outcome::Absorbed:
                ++absorbed;
                break;
        }
    }
    McResult result;
    result.shots = shots;
    result.seed = seed;
    result.counts = {d1, d2, absorbed};
    result.chi_square = chi_square(distribution, result.counts);
    return result;
}

}  // namespace mzsim
