// Copyright 2026 The seqmeas Authors
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

#include "seqmeas/cli.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "seqmeas/harness.hpp"

namespace seqmeas::cli {

namespace {

std::vector<double> grid_of(const RunConfig& c) { return linear_grid(c.theta_min, c.theta_max, c.steps); }

SweepConfig sweep_config(const RunConfig& c) {
    SweepConfig s;
    s.theta_grid = grid_of(c);
    s.setup = c.setup;
    s.input_angle_deg = c.input_angle_deg;
    return s;
}

std::string emit(const std::vector<SweepRow>& rows, io::Format f) { return io::render(rows, f); }

}  // namespace

RunConfig parse_config(const std::vector<std::string>& args) {
    RunConfig cfg;
    CLI::App app{"Sequential variable-strength qubit measurement: errors, weak values, crossings", "seqmeas"};
    app.set_config("--config", "", "Read `key = value` options from a file");
    app.allow_config_extras(CLI::config_extras_mode::error);
    app.require_subcommand(1, 1);

    const std::map<std::string, io::Format> formats{{"csv", io::Format::Csv}, {"json", io::Format::Json}};

    app.add_option("--v-pm", cfg.setup.v_pm, "PM interferometer visibility")->check(CLI::Range(0.0, 1.0));
    app.add_option("--v-hv", cfg.setup.v_hv, "HV readout visibility")->check(CLI::Range(0.0, 1.0));
    app.add_option("--theta", cfg.setup.theta_deg, "Measurement strength in degrees (reconstruct)")
        ->check(CLI::Range(0.0, kMaxThetaDeg));
    app.add_option("--input-angle", cfg.input_angle_deg, "Input linear polarization in degrees")
        ->check(CLI::Range(-360.0, 360.0));
    app.add_option("--theta-min", cfg.theta_min, "First grid angle")->check(CLI::Range(0.0, kMaxThetaDeg));
    app.add_option("--theta-max", cfg.theta_max, "Last grid angle")->check(CLI::Range(0.0, kMaxThetaDeg));
    app.add_option("--steps", cfg.steps, "Number of grid points")->check(CLI::Range(1, 100000));
    app.add_option("--lambda", cfg.lambda, "Input-state variation parameter (reconstruct)");
    app.add_option("--n-photons", cfg.n_photons, "Photons per run (montecarlo)")
        ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1'000'000'000'000ULL}));
    app.add_option("--seed", cfg.seed, "RNG seed (montecarlo)");
    app.add_flag("--simulate-prior", cfg.simulate_prior, "Estimate P(+-|psi) from a simulated PM run (montecarlo)");
    app.add_option("-o,--output", cfg.output, "Output path, - for stdout");
    app.add_option("--format", cfg.format, "csv or json")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

    const std::vector<std::pair<std::string, Command>> commands{
        {"sweep", Command::Sweep},
        {"crossings", Command::Crossings},
        {"montecarlo", Command::MonteCarlo},
        {"reconstruct", Command::Reconstruct},
        {"lgi", Command::Lgi}};
    const std::map<std::string, std::string> blurbs{
        {"sweep", "Analytic strength sweep (probabilities, estimates, errors)"},
        {"crossings", "Bisect the crossing points of the estimate curves"},
        {"montecarlo", "Simulated photon counts fed through the empirical pipeline"},
        {"reconstruct", "Input-state-variation reconstruction at one strength"},
        {"lgi", "Quasi-probability table and negativity flag per strength"}};
    std::vector<CLI::App*> subs;
    for (const auto& [name, _] : commands) subs.push_back(app.add_subcommand(name, blurbs.at(name))->fallthrough());

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested(app.help());
    } catch (const CLI::CallForAllHelp&) {
        throw HelpRequested(app.help("", CLI::AppFormatMode::All));
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }
    for (std::size_t i = 0; i < subs.size(); ++i) {
        if (subs[i]->parsed()) cfg.command = commands[i].second;
    }
    if (cfg.theta_min > cfg.theta_max) throw UsageError("--theta-min exceeds --theta-max");
    if (!std::isfinite(cfg.lambda) || cfg.lambda == 0.0) throw UsageError("--lambda must be non-zero");
    return cfg;
}

std::string execute(const RunConfig& c) {
    switch (c.command) {
        case Command::Sweep:
            return emit(run_sweep(sweep_config(c)), c.format);
        case Command::Crossings: {
            CrossingConfig cc;
            cc.setup = c.setup;
            cc.input_angle_deg = c.input_angle_deg;
            cc.scan_grid = grid_of(c);
            if (cc.scan_grid.size() < 2) cc.scan_grid = default_theta_grid();
            const auto found = find_crossings(cc);
            return c.format == io::Format::Csv ? io::crossings_csv(found) : io::crossings_json(found);
        }
        case Command::MonteCarlo: {
            const auto grid = grid_of(c);
            std::vector<SweepRow> rows;
            rows.reserve(grid.size());
            MonteCarloOptions opts;
            opts.simulate_prior_run = c.simulate_prior;
            for (std::size_t i = 0; i < grid.size(); ++i) {
                SetupParams s = c.setup;
                s.theta_deg = grid[i];
                rows.push_back(estimate_from_counts(
                    monte_carlo_counts(s, c.input_angle_deg, c.n_photons, c.seed, i, opts)));
            }
            return emit(rows, c.format);
        }
        case Command::Reconstruct: {
            const auto rows = reconstruction_table(c.setup, c.input_angle_deg, ReconstructionConfig{c.lambda});
            return c.format == io::Format::Csv ? io::reconstruction_csv(rows) : io::reconstruction_json(rows);
        }
        case Command::Lgi: {
            const auto rows = run_lgi_scan(sweep_config(c));
            return c.format == io::Format::Csv ? io::lgi_csv(rows) : io::lgi_json(rows);
        }
    }
    throw std::logic_error("unhandled command");
}

int main(const std::vector<std::string>& args) {
    RunConfig cfg;
    try {
        cfg = parse_config(args);
    } catch (const HelpRequested& h) {
        std::cout << h.what();
        return kExitOk;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }
    try {
        io::write_output(cfg.output, execute(cfg));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitOk;
}

}  // namespace seqmeas::cli
