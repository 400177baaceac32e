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

// Measurement-error evaluation: operator correlations, conditional averages
// (weak values), the error functional and its decomposition, and
// quasi-probabilities of outcome/eigenvalue pairs.

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "seqmeas/qubit_algebra.hpp"

namespace seqmeas {

/// Below this outcome probability a conditional average is unresolvable.
inline constexpr double kProbabilityFloor = 1e-9;

struct ReconstructionConfig {
    double lambda = 1.0;  // 1 selects eigenstate inputs for a dichotomic observable
};

/// One value per POVM element, in PovmSet order. nullopt marks an outcome
/// without an assignment (unresolvable).
using EstimateTable = std::vector<std::optional<double>>;

struct ErrorReport {
    double epsilon_sq = 0.0;         // error functional, cross term from operator products
    double mean_sq = 0.0;            // <A^2>
    double variance_initial = 0.0;   // <A^2> - <A>^2
    double estimate_variance = 0.0;  // sum_m A_opt(m)^2 P(m)
    double residual = 0.0;           // sum_m (A_m - A_opt(m))^2 P(m)
    double excluded_mass = 0.0;      // probability of outcomes below the floor

    /// |eps^2 - (<A^2> - sum A_opt^2 P + sum (A_m - A_opt)^2 P)|
    double decomposition_gap() const;
};

/// Re <psi| E_m Pi_a |psi> for a = +1 (column 0) and a = -1 (column 1).
struct QuasiProbabilityTable {
    std::vector<std::string> labels;
    std::vector<std::array<double, 2>> entries;
    std::vector<double> p_outcome;    // P(m|psi)
    std::array<double, 2> p_eigen{};  // P(+|psi), P(-|psi)
    double min_entry = 0.0;
    bool negativity_present = false;

    double at(int a, std::size_t m) const { return entries.at(m)[a == 1 ? 0 : 1]; }
};

/// Normalized (1 +- lambda A)|psi>. Throws DegenerateBranch when a branch
/// normalization vanishes.
std::pair<QubitState, QubitState> variation_states(const QubitState& psi, const DichotomicObservable& a,
                                                   const ReconstructionConfig& cfg);

/// Re <psi|E_m A|psi> from the outcome probabilities on the two variation states.
double reconstruct_correlation(double p_plus, double p_minus, double mean_a, double mean_a2,
                               const ReconstructionConfig& cfg);

/// correlation / P(m). Throws UnresolvableOutcome when P(m) <= kProbabilityFloor.
double conditional_average(double correlation, double p_m, const std::string& outcome = "m");

/// (P(m|+)P(+|psi) - P(m|-)P(-|psi)) / P(m|psi). The denominator is measured
/// on psi independently of the eigenstate runs.
double two_level_conditional_average(double p_m_given_plus, double p_m_given_minus, double p_plus_psi,
                                     double p_minus_psi, double p_m_psi, const std::string& outcome = "m");

/// Bayesian estimate of S_PM after a PM-only outcome m1 with symmetric error
/// probability p_error. Always in [-1, 1].
double classical_conditional_average(int m1, double p_error, double mean_a);

/// (m1 (1 - 2 Pe) + <S_PM>) / (4 P(m1, m2|psi))
double sequential_conditional_average(int m1, int m2, double p_error, double mean_a, double p_joint);

/// Error functional for an arbitrary value assignment (every entry required).
ErrorReport ozawa_error(const QubitState& state, const PovmSet& povm, const DichotomicObservable& a,
                        const EstimateTable& assignments);

/// A_opt(m) for every outcome and the minimal error. Outcomes below the
/// probability floor get nullopt and count towards excluded_mass.
std::pair<EstimateTable, ErrorReport> optimal_error(const QubitState& state, const PovmSet& povm,
                                                    const DichotomicObservable& a);

QuasiProbabilityTable quasi_probability(const QubitState& state, const PovmSet& povm,
                                        const DichotomicObservable& a);

// Probability-form evaluation for a dichotomic target, from eigenstate-input
// runs P(m|+-) and the psi-input run P(m|psi).

/// 1 + sum A_m^2 P(m|psi) - 2 sum A_m (P(m|+)P(+|psi) - P(m|-)P(-|psi))
double two_level_error(const std::vector<double>& assignments, const std::vector<double>& p_m_psi,
                       const std::vector<double>& p_m_given_plus, const std::vector<double>& p_m_given_minus,
                       double p_plus_psi, double p_minus_psi);

/// Eigenstate confusion of a two-outcome measurement read out as +-1.
struct BinaryConfusion {
    double p_plus_given_plus = 1.0;
    double p_minus_given_plus = 0.0;
    double p_plus_given_minus = 0.0;
    double p_minus_given_minus = 1.0;

    bool symmetric() const;
};

/// Error of the eigenvalue assignment A_m = m. Symmetric confusion gives
/// 4 P_error independent of psi; otherwise the general probability form.
double eigenvalue_assignment_error(const BinaryConfusion& confusion, double p_plus_psi, double p_minus_psi);

}  // namespace seqmeas
