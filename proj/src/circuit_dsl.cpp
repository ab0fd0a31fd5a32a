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

#include "mzsim/circuit_dsl.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace mzsim {

namespace {

struct Token {
    std::string_view text;
    int column;
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) {
            ++i;
        }
        if (i >= line.size()) {
            break;
        }
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') {
            ++i;
        }
        out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return out;
}

std::optional<double> parse_real(std::string_view text) {
    if (!text.empty() && text.front() == '+') {
        text.remove_prefix(1);
    }
    if (text.empty()) {
        return std::nullopt;
    }
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(value)) {
        return std::nullopt;
    }
    return value;
}

/// Real number with an optional `pi` multiplier suffix: `pi`, `-pi`, `0.5pi`.
std::optional<double> parse_angle(std::string_view text) {
    if (text.size() >= 2 && text.substr(text.size() - 2) == "pi") {
        std::string_view coeff = text.substr(0, text.size() - 2);
        if (coeff.empty() || coeff == "+") {
            return std::numbers::pi;
        }
        if (coeff == "-") {
            return -std::numbers::pi;
        }
        const auto c = parse_real(coeff);
        if (!c) {
            return std::nullopt;
        }
        return *c * std::numbers::pi;
    }
    return parse_real(text);
}

std::optional<std::size_t> parse_count(std::string_view text) {
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
        return std::nullopt;
    }
    return value;
}

std::string format_real(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

class LineParser {
   public:
    explicit LineParser(std::vector<ParseDiagnostic> &diags) : diags_(diags) {}

    void error(int line, int column, std::string message) {
        diags_.push_back({line, column, std::move(message), Severity::Error});
    }
    void warning(int line, int column, std::string message) {
        diags_.push_back({line, column, std::move(message), Severity::Warning});
    }

    /// Parses an angle token, warning when it had to be wrapped into [0, 2pi).
    std::optional<double> angle(int line, const Token &tok, std::string_view value, int value_column) {
        const auto raw = parse_angle(value);
        if (!raw) {
            error(line, value_column, "malformed number '" + std::string(value) + "'");
            return std::nullopt;
        }
        const double wrapped = wrap_angle(*raw);
        if (wrapped != *raw) {
            warning(line, tok.column, "angle " + std::string(value) + " wrapped to " + format_real(wrapped));
        }
        return wrapped;
    }

    bool expect_arity(int line, const std::vector<Token> &toks, std::size_t arity) {
        if (toks.size() < arity + 1) {
            const Token &last = toks.back();
            error(line, last.column + static_cast<int>(last.text.size()),
                  "'" + std::string(toks[0].text) + "' expects " + std::to_string(arity) + " argument(s)");
            return false;
        }
        if (toks.size() > arity + 1) {
            error(line, toks[arity + 1].column, "unexpected token '" + std::string(toks[arity + 1].text) + "'");
            return false;
        }
        return true;
    }

    std::optional<ElementSpec> obstacle(int line, const std::vector<Token> &toks) {
        std::optional<double> beta, theta, gamma;
        bool bad = false;
        for (std::size_t i = 1; i < toks.size(); ++i) {
            const Token &tok = toks[i];
            const auto eq = tok.text.find('=');
            if (eq == std::string_view::npos) {
                error(line, tok.column, "expected key=value, got '" + std::string(tok.text) + "'");
                bad = true;
                continue;
            }
            const std::string_view key = tok.text.substr(0, eq);
            const std::string_view value = tok.text.substr(eq + 1);
            const int value_column = tok.column + static_cast<int>(eq) + 1;
            std::optional<double> *slot = nullptr;
            if (key == "beta") {
                slot = &beta;
            } else if (key == "theta") {
                slot = &theta;
            } else if (key == "gamma") {
                slot = &gamma;
            } else {
                error(line, tok.column, "unknown obstacle parameter '" + std::string(key) + "'");
                bad = true;
                continue;
            }
            if (slot->has_value()) {
                error(line, tok.column, "duplicate obstacle parameter '" + std::string(key) + "'");
                bad = true;
                continue;
            }
            if (key == "beta") {
                const auto b = parse_real(value);
                if (!b) {
                    error(line, value_column, "malformed number '" + std::string(value) + "'");
                    bad = true;
                } else if (*b < 0.0 || *b > 1.0) {
                    error(line, value_column, "beta must lie in [0, 1], got " + std::string(value));
                    bad = true;
                } else {
                    *slot = *b;
                }
            } else {
                *slot = angle(line, tok, value, value_column);
                bad = bad || !slot->has_value();
            }
        }
        if (bad) {
            return std::nullopt;
        }
        if (!beta) {
            error(line, toks[0].column, "obstacle requires beta=<value>");
            return std::nullopt;
        }
        return Obstacle{ObstacleParams(*beta, theta.value_or(0.0), gamma.value_or(0.0))};
    }

   private:
    std::vector<ParseDiagnostic> &diags_;
};

}  // namespace

std::string ParseDiagnostic::format() const {
    return std::to_string(line) + ":" + std::to_string(column) + ": " +
           (severity == Severity::Error ? "error: " : "warning: ") + message;
}

bool ParseResult::has_errors() const {
    return std::any_of(diagnostics.begin(), diagnostics.end(),
                       [](const ParseDiagnostic &d) { return d.severity == Severity::Error; });
}

ParseResult parse_circuit(std::string_view source) {
    ParseResult result;
    LineParser p(result.diagnostics);
    CircuitSpec spec;
    int input_line = 0;
    int fock_line = 0;
    int line_no = 0;

    std::size_t pos = 0;
    while (pos < source.size()) {
        std::size_t end = source.find('\n', pos);
        if (end == std::string_view::npos) {
            end = source.size();
        }
        std::string_view line = source.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        const std::vector<Token> toks = tokenize(line);
        if (toks.empty()) {
            continue;
        }
        const std::string_view kw = toks[0].text;

        if (kw == "bs" || kw == "mirror") {
            if (p.expect_arity(line_no, toks, 0)) {
                spec.elements.push_back(kw == "bs" ? ElementSpec{BeamSplitter{}} : ElementSpec{Mirror{}});
            }
        } else if (kw == "phase") {
            if (p.expect_arity(line_no, toks, 1)) {
                if (const auto phi = p.angle(line_no, toks[1], toks[1].text, toks[1].column)) {
                    spec.elements.push_back(PhaseShifter(*phi));
                }
            }
        } else if (kw == "obstacle") {
            if (auto el = p.obstacle(line_no, toks)) {
                spec.elements.push_back(*el);
            }
        } else if (kw == "input") {
            if (input_line != 0) {
                p.error(line_no, toks[0].column,
                        "duplicate 'input' line (first declared on line " + std::to_string(input_line) + ")");
                continue;
            }
            input_line = line_no;
            if (!p.expect_arity(line_no, toks, 2)) {
                continue;
            }
            if (toks[1].text == "H" || toks[1].text == "V") {
                spec.input.channel = toks[1].text == "H" ? Channel::H : Channel::V;
            } else {
                p.error(line_no, toks[1].column, "input channel must be H or V, got '" + std::string(toks[1].text) + "'");
            }
            if (const auto n = parse_count(toks[2].text)) {
                spec.input.occupation = *n;
            } else {
                p.error(line_no, toks[2].column, "malformed occupation number '" + std::string(toks[2].text) + "'");
            }
        } else if (kw == "fock") {
            if (fock_line != 0) {
                p.error(line_no, toks[0].column, "duplicate 'fock' line");
                continue;
            }
            fock_line = line_no;
            if (!p.expect_arity(line_no, toks, 1)) {
                continue;
            }
            const auto f = parse_count(toks[1].text);
            if (!f) {
                p.error(line_no, toks[1].column, "malformed Fock dimension '" + std::string(toks[1].text) + "'");
            } else if (*f < 2) {
                p.error(line_no, toks[1].column, "Fock dimension must be >= 2");
            } else {
                spec.fock_dim = *f;
            }
        } else {
            p.error(line_no, toks[0].column, "unknown element keyword '" + std::string(kw) + "'");
        }
    }

    if (input_line != 0 && spec.input.occupation >= spec.fock_dim) {
        p.error(input_line, 1, "input occupation " + std::to_string(spec.input.occupation) +
                                   " is outside the Fock truncation " + std::to_string(spec.fock_dim));
    }
    if (spec.elements.empty() && !result.has_errors()) {
        p.error(std::max(line_no, 1), 1, "circuit has no elements");
    }
    if (!result.has_errors()) {
        result.spec = std::move(spec);
    }
    return result;
}

std::string serialize_circuit(const CircuitSpec &spec) {
    if (spec.elements.empty()) {
        throw ArgumentError("cannot serialize a circuit with no elements");
    }
    if (spec.fock_dim < 2 || spec.input.occupation >= spec.fock_dim) {
        throw ArgumentError("input occupation outside the Fock truncation");
    }
    std::string out;
    out += "input ";
    out += channel_name(spec.input.channel);
    out += " " + std::to_string(spec.input.occupation) + "\n";
    if (spec.fock_dim != 2) {
        out += "fock " + std::to_string(spec.fock_dim) + "\n";
    }
    for (const ElementSpec &el : spec.elements) {
        if (std::holds_alternative<BeamSplitter>(el)) {
            out += "bs\n";
        } else if (std::holds_alternative<Mirror>(el)) {
            out += "mirror\n";
        } else if (const auto *ps = std::get_if<PhaseShifter>(&el)) {
            out += "phase " + format_real(ps->phi) + "\n";
        } else {
            const ObstacleParams &o = std::get<Obstacle>(el).params;
            out += "obstacle beta=" + format_real(o.beta()) + " theta=" + format_real(o.theta()) +
                   " gamma=" + format_real(o.gamma()) + "\n";
        }
    }
    return out;
}

CircuitSpec mach_zehnder_circuit(double phi) {
    CircuitSpec spec;
    spec.elements = {BeamSplitter{}, PhaseShifter(phi), Mirror{}, BeamSplitter{}};
    return spec;
}

CircuitSpec obstacle_circuit(double phi, const ObstacleParams &obstacle) {
    CircuitSpec spec;
    spec.elements = {BeamSplitter{}, PhaseShifter(phi), Obstacle{obstacle}, Mirror{}, BeamSplitter{}};
    return spec;
}

}  // namespace mzsim
