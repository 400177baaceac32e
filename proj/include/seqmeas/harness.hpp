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

#pragma once

// Strength sweeps, crossing-point search and finite-count simulation.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "seqmeas/error_analysis.hpp"
#include "seqmeas/measurement_model.hpp"

namespace seqmeas {

enum class Strategy { EigenvalueAssignment, OptimalM1, OptimalM1M2 };

inline constexpr std::array<Strategy, 3> kAllStrategies{Strategy::EigenvalueAssignment, Strategy::OptimalM1,
                                                        Strategy::OptimalM1M2};

/// theta_min + i (theta_max - theta_min) / (steps - 1), i < steps.
std::vector<double> linear_grid(double theta_min, double theta_max, int steps);
std::vector<double> default_theta_grid();  // 0 .. 22.5 in 0.5 steps

struct SweepConfig {
    std::vector<double> theta_grid = default_theta_grid();
    SetupParams setup{};  // theta_deg is overwritten per grid point
    double input_angle_deg = kDefaultInputAngleDeg;
    std::vector<Strategy> strategies{kAllStrategies.begin(), kAllStrategies.end()};

    void validate() const;
    bool wants(Strategy s) const;
};

/// One grid point. Unresolvable estimates and strategies not requested are nullopt.
struct SweepRow {
    double theta_deg = 0.0;
    double p_error = 0.0;
    OutcomeDistribution probs;
    std::array<std::optional<double>, 2> a_opt_m1;    // m1 = +1, -1
    std::array<std::optional<double>, 4> a_opt_m1m2;  // canonical outcome order
    std::optional<double> eps_sq_eigen;
    std::optional<double> eps_sq_opt_m1;
    std::optional<double> eps_sq_opt_m1m2;

    friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

/// Operator-route evaluation of a single setting.
SweepRow analytic_row(const SetupParams& setup, double input_angle_deg,
                      const std::vector<Strategy>& strategies = {kAllStrategies.begin(), kAllStrategies.end()});

std::vector<SweepRow> run_sweep(const SweepConfig& config);

enum class CrossingKind {
    EstimateZero,       // A_opt(-1, m2) = 0
    EstimateInversion,  // A_opt(-1, +1) = A_opt(+1, +1)
    EigenErrorPrior,    // eigenvalue-assignment error = prior variance
};

std::string crossing_name(CrossingKind kind);         // machine key
std::string crossing_description(CrossingKind kind);  // human-readable

struct Crossing {
    CrossingKind kind;
    std::string description;
    std::optional<double> theta_deg;  // nullopt: no sign change found
};

struct CrossingConfig {
    SetupParams setup{};
    double input_angle_deg = kDefaultInputAngleDeg;
    std::vector<double> scan_grid = default_theta_grid();
    double tolerance_deg = 0.01;
};

/// Scalar function of theta whose roots define each crossing kind. NaN where
/// the function is undefined (unresolvable outcome).
double crossing_function(CrossingKind kind, const SetupParams& setup, double input_angle_deg);

/// Sign scan on the grid, then bisection of every bracket. Brackets around a
/// pole rather than a root are dropped. Kinds without any root report a single
/// entry with theta_deg = nullopt.
std::vector<Crossing> find_crossings(const CrossingConfig& config);

/// Root of a continuous f on [lo, hi] with f(lo) f(hi) <= 0, bracket shrunk below tol.
double bisect(const std::function<double(double)>& f, double lo, double hi, double tol);

struct CountRecord {
    SetupParams setup{};
    double input_angle_deg = kDefaultInputAngleDeg;
    std::uint64_t n_photons = 0;
    std::uint64_t rng_seed = 0;
    std::uint64_t stream = 0;
    std::array<std::uint64_t, 4> psi_counts{};    // canonical outcome order
    std::array<std::uint64_t, 4> plus_counts{};   // |P> calibration input
    std::array<std::uint64_t, 4> minus_counts{};  // |M> calibration input
    std::optional<std::array<std::uint64_t, 2>> prior_counts;  // projective PM run on psi
};

struct MonteCarloOptions {
    /// Estimate P(+-|psi) from a simulated projective PM run instead of the
    /// preparation angle.
    bool simulate_prior_run = false;
};

/// Multinomial draws, one generator per run seeded from (seed, stream, run).
CountRecord monte_carlo_counts(const SetupParams& setup, double input_angle_deg, std::uint64_t n_photons,
                               std::uint64_t rng_seed, std::uint64_t stream = 0,
                               const MonteCarloOptions& options = {});

/// Quasi-probability table of the sequential POVM against S_PM, per grid point.
struct LgiRow {
    double theta_deg = 0.0;
    QuasiProbabilityTable table;
    std::array<std::optional<double>, 4> a_opt;
};

std::vector<LgiRow> run_lgi_scan(const SweepConfig& config);

/// Input-state-variation reconstruction of Re<psi|E_m S_PM|psi> next to the
/// direct operator product, one entry per sequential outcome.
struct ReconstructionRow {
    std::string outcome;
    double p_psi = 0.0;
    double p_plus = 0.0;   // P(m|+) on the (1 + lambda A) state
    double p_minus = 0.0;  // P(m|-) on the (1 - lambda A) state
    double correlation_reconstructed = 0.0;
    double correlation_direct = 0.0;
    std::optional<double> a_opt;
};

std::vector<ReconstructionRow> reconstruction_table(const SetupParams& setup, double input_angle_deg,
                                                    const ReconstructionConfig& cfg);

/// Relative frequencies feeding the probability-form pipeline.
struct EmpiricalFrequencies {
    double theta_deg = 0.0;
    std::array<double, 4> psi{};
    std::array<double, 4> plus{};
    std::array<double, 4> minus{};
    double p_plus_psi = 0.5;
};

SweepRow estimate_from_frequencies(const EmpiricalFrequencies& freq);
SweepRow estimate_from_counts(const CountRecord& record);

}  // namespace seqmeas
