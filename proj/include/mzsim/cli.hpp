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

#ifndef MZSIM_CLI_HPP
#define MZSIM_CLI_HPP

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mzsim/analysis.hpp"

namespace mzsim::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 2,
    kStrictNorm = 3,
    kOracleMismatch = 4,
};

inline constexpr double kStrictNormTolerance = 1e-9;
inline constexpr double kOracleTolerance = 1e-9;
inline constexpr const char *kCsvHeader = "beta,delta,phi,p_d1,p_d2,p_abs,source";

/// `start:stop:count` with inclusive endpoints, or a single number.
std::vector<double> parse_grid(std::string_view text);

/// 12 significant digits, negative zero printed as 0.
std::string format_number(double x);

std::string csv_row(const SweepRow &row);
void write_sweep_csv(std::ostream &out, std::span<const SweepRow> rows);

/// Writes fig2a.csv, fig2b.csv, fig3_d1.csv and fig3_d2.csv into `dir`.
void write_figures(const std::filesystem::path &dir);

/// Entry point behind the `mzsim` binary. `args` excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace mzsim::cli

#endif  // MZSIM_CLI_HPP
