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

#include "mzsim/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

namespace mzsim::cli {

namespace {

struct Options {
    std::string input;
    std::string output;
    bool strict = false;
    std::string beta = "0";
    std::string delta = "0";
    double phi = 0.0;
    bool check = false;
    std::int64_t shots = 100000;
    std::uint64_t seed = 0;
};

/// Thrown for bad flags or unreadable inputs; maps to exit code 2.
class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

double parse_number(std::string_view text) {
    double value = 0.0;
    std::string_view t = text;
    if (!t.empty() && t.front() == '+') {
        t.remove_prefix(1);
    }
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (t.empty() || ec != std::errc() || ptr != t.data() + t.size() || !std::isfinite(value)) {
        throw ArgumentError("malformed number '" + std::string(text) + "'");
    }
    return value;
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError("cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

/// Parses the --input circuit, echoing diagnostics as path:line:col.
CircuitSpec load_circuit(const Options &opt, std::ostream &err) {
    if (opt.input.empty()) {
        throw UsageError("--input <path> is required");
    }
    const ParseResult parsed = parse_circuit(read_file(opt.input));
    for (const ParseDiagnostic &d : parsed.diagnostics) {
        err << opt.input << ":" << d.format() << "\n";
    }
    if (!parsed.ok()) {
        throw UsageError("'" + opt.input + "' failed to parse");
    }
    return *parsed.spec;
}

/// Routes data either to --output or to the caller's stream.
class Sink {
   public:
    Sink(const std::string &path, std::ostream &fallback) : stream_(&fallback) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary | std::ios::trunc);
            if (!file_) {
                throw UsageError("cannot write '" + path + "'");
            }
            stream_ = &file_;
        }
    }
    std::ostream &stream() { return *stream_; }

   private:
    std::ofstream file_;
    std::ostream *stream_;
};

// Outcome weights are unit-scale, so anything below this is roundoff.
constexpr double kRoundoff = 1e-14;

OutcomeDistribution snap_roundoff(OutcomeDistribution d) {
    for (double *x : {&d.p_d1, &d.p_d2, &d.p_abs, &d.norm_deficit}) {
        if (std::abs(*x) < kRoundoff) {
            *x = 0.0;
        }
    }
    return d;
}

std::string format_amplitude(complex_t a) {
    return "(" + format_number(a.real()) + "," + format_number(a.imag()) + ")";
}

int cmd_run(const Options &opt, std::ostream &out, std::ostream &err) {
    const CircuitSpec spec = load_circuit(opt, err);
    const OutcomeDistribution d = snap_roundoff(outcome_distribution(run_circuit(spec)));
    Sink sink(opt.output, out);
    std::ostream &os = sink.stream();
    os << "p_d1 " << format_number(std::max(0.0, d.p_d1)) << "\n";
    os << "p_d2 " << format_number(std::max(0.0, d.p_d2)) << "\n";
    os << "p_abs " << format_number(std::max(0.0, d.p_abs)) << "\n";
    os << "norm_deficit " << format_number(d.norm_deficit) << "\n";
    if (opt.strict && d.norm_deficit > kStrictNormTolerance) {
        err << "error: norm deficit " << format_number(d.norm_deficit) << " exceeds " << kStrictNormTolerance << "\n";
        return kStrictNorm;
    }
    return kOk;
}

int cmd_trace(const Options &opt, std::ostream &out, std::ostream &err) {
    const CircuitSpec spec = load_circuit(opt, err);
    const std::vector<TraceRecord> records = trace_states(spec);
    Sink sink(opt.output, out);
    std::ostream &os = sink.stream();
    for (std::size_t k = 0; k < records.size(); ++k) {
        const StateVector &psi = records[k].state;
        os << k << " " << records[k].stage_name;
        for (const complex_t &a : psi.amplitudes()) {
            os << " " << format_amplitude(a);
        }
        os << " norm2=" << format_number(squared_norm(psi)) << "\n";
    }
    const double deficit = std::abs(squared_norm(records.back().state) - 1.0);
    if (opt.strict && deficit > kStrictNormTolerance) {
        err << "error: norm deficit " << format_number(deficit) << " exceeds " << kStrictNormTolerance << "\n";
        return kStrictNorm;
    }
    return kOk;
}

int cmd_sweep(const Options &opt, std::ostream &out, std::ostream &err) {
    const std::vector<double> betas = parse_grid(opt.beta);
    const std::vector<double> deltas = parse_grid(opt.delta);
    const std::vector<SweepRow> pipeline = sweep(betas, deltas, opt.phi, SweepSource::Pipeline);
    if (!opt.check) {
        Sink sink(opt.output, out);
        write_sweep_csv(sink.stream(), pipeline);
        return kOk;
    }
    const std::vector<SweepRow> closed = sweep(betas, deltas, opt.phi, SweepSource::ClosedForm);
    std::vector<SweepRow> rows;
    rows.reserve(2 * pipeline.size());
    double worst = 0.0;
    for (std::size_t i = 0; i < pipeline.size(); ++i) {
        const OutcomeDistribution &a = pipeline[i].distribution;
        const OutcomeDistribution &b = closed[i].distribution;
        worst = std::max({worst, std::abs(a.p_d1 - b.p_d1), std::abs(a.p_d2 - b.p_d2), std::abs(a.p_abs - b.p_abs)});
        rows.push_back(pipeline[i]);
        rows.push_back(closed[i]);
    }
    Sink sink(opt.output, out);
    write_sweep_csv(sink.stream(), rows);
    if (worst > kOracleTolerance) {
        err << "error: pipeline and closed form disagree by " << format_number(worst) << "\n";
        return kOracleMismatch;
    }
    return kOk;
}

int cmd_mc(const Options &opt, std::ostream &out, std::ostream &err) {
    if (opt.shots < 1) {
        throw UsageError("--shots must be >= 1");
    }
    OutcomeDistribution d;
    if (!opt.input.empty()) {
        d = outcome_distribution(run_circuit(load_circuit(opt, err)));
    } else {
        const double beta = parse_number(opt.beta);
        const double delta = parse_number(opt.delta);
        if (!(beta >= 0.0 && beta <= 1.0)) {
            throw UsageError("--beta must lie in [0, 1]");
        }
        d = evaluate_point(beta, delta, opt.phi, SweepSource::Pipeline);
    }
    const McResult r = monte_carlo(snap_roundoff(d), static_cast<std::uint64_t>(opt.shots), opt.seed);
    const double n = static_cast<double>(r.shots);
    Sink sink(opt.output, out);
    std::ostream &os = sink.stream();
    os << "shots " << r.shots << "\n";
    os << "seed " << r.seed << "\n";
    os << "count_d1 " << r.counts.d1 << "\n";
    os << "count_d2 " << r.counts.d2 << "\n";
    os << "count_abs " << r.counts.abs << "\n";
    os << "frac_d1 " << format_number(static_cast<double>(r.counts.d1) / n) << "\n";
    os << "frac_d2 " << format_number(static_cast<double>(r.counts.d2) / n) << "\n";
    os << "frac_abs " << format_number(static_cast<double>(r.counts.abs) / n) << "\n";
    os << "chi_square " << format_number(r.chi_square) << "\n";
    return kOk;
}

int cmd_threshold(const Options &opt, std::ostream &out) {
    const double delta = parse_number(opt.delta);
    const std::optional<double> beta = success_threshold(delta);
    Sink sink(opt.output, out);
    if (beta) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.10f", *beta);
        sink.stream() << buf << "\n";
    } else {
        sink.stream() << "none\n";
    }
    return kOk;
}

int cmd_figures(const Options &opt) {
    write_figures(opt.output.empty() ? std::filesystem::path(".") : std::filesystem::path(opt.output));
    return kOk;
}

void write_surface(const std::filesystem::path &path, std::span<const SweepRow> rows, bool d1) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) {
        throw UsageError("cannot write '" + path.string() + "'");
    }
    f << (d1 ? "beta,delta,p_d1\n" : "beta,delta,p_d2\n");
    for (const SweepRow &r : rows) {
        f << format_number(r.beta) << "," << format_number(r.delta) << ","
          << format_number(d1 ? r.distribution.p_d1 : r.distribution.p_d2) << "\n";
    }
}

void write_csv_file(const std::filesystem::path &path, std::span<const SweepRow> rows) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) {
        throw UsageError("cannot write '" + path.string() + "'");
    }
    write_sweep_csv(f, rows);
}

}  // namespace

std::vector<double> parse_grid(std::string_view text) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t colon = text.find(':', start);
        parts.push_back(text.substr(start, colon == std::string_view::npos ? std::string_view::npos : colon - start));
        if (colon == std::string_view::npos) {
            break;
        }
        start = colon + 1;
    }
    if (parts.size() == 1) {
        return {parse_number(parts[0])};
    }
    if (parts.size() != 3) {
        throw ArgumentError("grid must be 'start:stop:count', got '" + std::string(text) + "'");
    }
    const double lo = parse_number(parts[0]);
    const double hi = parse_number(parts[1]);
    std::size_t count = 0;
    const auto [ptr, ec] = std::from_chars(parts[2].data(), parts[2].data() + parts[2].size(), count);
    if (parts[2].empty() || ec != std::errc() || ptr != parts[2].data() + parts[2].size() || count < 1) {
        throw ArgumentError("grid count must be an integer >= 1, got '" + std::string(parts[2]) + "'");
    }
    std::vector<double> grid(count);
    for (std::size_t i = 0; i < count; ++i) {
        grid[i] = count == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
    }
    if (count > 1) {
        grid.back() = hi;
    }
    return grid;
}

std::string format_number(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x == 0.0 ? 0.0 : x);
    return buf;
}

std::string csv_row(const SweepRow &row) {
    const OutcomeDistribution d = snap_roundoff(row.distribution);
    return format_number(row.beta) + "," + format_number(row.delta) + "," + format_number(row.phi) + "," +
           format_number(std::max(0.0, d.p_d1)) + "," + format_number(std::max(0.0, d.p_d2)) + "," +
           format_number(std::max(0.0, d.p_abs)) + "," + source_name(row.source);
}

void write_sweep_csv(std::ostream &out, std::span<const SweepRow> rows) {
    out << kCsvHeader << "\n";
    for (const SweepRow &r : rows) {
        out << csv_row(r) << "\n";
    }
}

void write_figures(const std::filesystem::path &dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw UsageError("cannot create '" + dir.string() + "': " + ec.message());
    }
    const std::vector<double> fig2_beta = parse_grid("0:1:201");
    const double zero[] = {0.0};
    const double quarter_turn[] = {std::numbers::pi / 2.0};
    write_csv_file(dir / "fig2a.csv", sweep(fig2_beta, zero, 0.0, SweepSource::Pipeline));
    write_csv_file(dir / "fig2b.csv", sweep(fig2_beta, quarter_turn, 0.0, SweepSource::Pipeline));

    const std::vector<double> fig3_beta = parse_grid("0:1:101");
    std::vector<double> fig3_delta(101);
    for (std::size_t i = 0; i < fig3_delta.size(); ++i) {
        fig3_delta[i] = -std::numbers::pi + 2.0 * std::numbers::pi * static_cast<double>(i) / 100.0;
    }
    fig3_delta.back() = std::numbers::pi;
    const std::vector<SweepRow> surface = sweep(fig3_beta, fig3_delta, 0.0, SweepSource::Pipeline);
    write_surface(dir / "fig3_d1.csv", surface, true);
    write_surface(dir / "fig3_d2.csv", surface, false);
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Mach-Zehnder interferometer simulator with a semitransparent obstacle", "mzsim"};
    app.require_subcommand(1, 1);
    Options opt;

    const auto add_common = [&opt](CLI::App *sub) {
        sub->add_option("--input", opt.input, "circuit file (.mz)");
        sub->add_option("--output", opt.output, "output path (default: standard output)");
        sub->add_flag("--strict", opt.strict, "fail when the final norm deficit exceeds 1e-9");
    };

    CLI::App *run_cmd = app.add_subcommand("run", "run a circuit and report detector probabilities");
    CLI::App *trace_cmd = app.add_subcommand("trace", "print the state after every element");
    CLI::App *sweep_cmd = app.add_subcommand("sweep", "grid sweep over transparency and detuning, CSV output");
    CLI::App *mc_cmd = app.add_subcommand("mc", "Monte Carlo sampling of detector clicks");
    CLI::App *threshold_cmd = app.add_subcommand("threshold", "smallest beta where D2 beats absorption");
    CLI::App *figures_cmd = app.add_subcommand("figures", "write the figure CSV set into --output (a directory)");
    for (CLI::App *sub : {run_cmd, trace_cmd, sweep_cmd, mc_cmd, threshold_cmd, figures_cmd}) {
        add_common(sub);
    }

    sweep_cmd->add_option("--beta", opt.beta, "beta grid start:stop:count")->required();
    sweep_cmd->add_option("--delta", opt.delta, "delta grid start:stop:count")->required();
    sweep_cmd->add_option("--phi", opt.phi, "interferometer phase (radians)");
    sweep_cmd->add_flag("--check", opt.check, "emit closed-form rows and compare against the pipeline");

    mc_cmd->add_option("--beta", opt.beta, "obstacle transparency");
    mc_cmd->add_option("--delta", opt.delta, "detuning theta - phi (radians)");
    mc_cmd->add_option("--phi", opt.phi, "interferometer phase (radians)");
    mc_cmd->add_option("--shots", opt.shots, "number of photons");
    CLI::Option *seed_opt = mc_cmd->add_option("--seed", opt.seed, "generator seed (default: $MZSIM_SEED or 0)");

    threshold_cmd->add_option("--delta", opt.delta, "detuning theta - phi (radians)")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (*mc_cmd && seed_opt->count() == 0) {
            if (const char *env = std::getenv("MZSIM_SEED"); env != nullptr && *env != '\0') {
                std::string_view s(env);
                const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), opt.seed);
                if (ec != std::errc() || ptr != s.data() + s.size()) {
                    throw UsageError("MZSIM_SEED must be a non-negative integer");
                }
            }
        }
        if (*run_cmd) {
            return cmd_run(opt, out, err);
        }
        if (*trace_cmd) {
            return cmd_trace(opt, out, err);
        }
        if (*sweep_cmd) {
            return cmd_sweep(opt, out, err);
        }
        if (*mc_cmd) {
            return cmd_mc(opt, out, err);
        }
        if (*threshold_cmd) {
            return cmd_threshold(opt, out);
        }
        return cmd_figures(opt);
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
}

}  // namespace mzsim::cli
