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

// Line-oriented `.mz` circuit files.
//
//   # comment to end of line
//   input H 1                         optional, defaults to H 1
//   fock 3                            optional Fock truncation, defaults to 2
//   bs
//   phase 0.5pi                       radians, `pi` suffix multiplies by pi
//   obstacle beta=0.6 theta=0 gamma=0 theta/gamma default to 0
//   mirror
//   bs
//
// Lines are applied in file order: the first element hits the photon first.

#ifndef MZSIM_CIRCUIT_DSL_HPP
#define MZSIM_CIRCUIT_DSL_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mzsim/algebra.hpp"
#include "mzsim/elements.hpp"

namespace mzsim {

struct CircuitSpec {
    BasisLabel input{Channel::H, 1};
    std::vector<ElementSpec> elements;
    std::size_t fock_dim = 2;

    SpaceConfig space() const { return SpaceConfig(fock_dim); }

    bool operator==(const CircuitSpec &) const = default;
};

enum class Severity { Error, Warning };

struct ParseDiagnostic {
    int line = 1;    // 1-based
    int column = 1;  // 1-based, byte offset within the line
    std::string message;
    Severity severity = Severity::Error;

    /// "<line>:<column>: error: <message>"
    std::string format() const;
};

struct ParseResult {
    std::optional<CircuitSpec> spec;
    std::vector<ParseDiagnostic> diagnostics;

    bool ok() const { return spec.has_value(); }
    bool has_errors() const;
};

/// Never throws; failures come back as Error diagnostics and an empty spec.
ParseResult parse_circuit(std::string_view source);

/// Throws ArgumentError for specs that could not be parsed back (no elements,
/// input occupation outside the truncation).
std::string serialize_circuit(const CircuitSpec &spec);

/// The interferometer BS, phase(phi), mirror, BS.
CircuitSpec mach_zehnder_circuit(double phi);

/// BS, phase(phi), obstacle, mirror, BS.
CircuitSpec obstacle_circuit(double phi, const ObstacleParams &obstacle);

}  // namespace mzsim

#endif  // MZSIM_CIRCUIT_DSL_HPP
