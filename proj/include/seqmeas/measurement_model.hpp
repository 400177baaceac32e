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

// Variable-strength PM measurement (outcome m1) followed by a projective HV
// measurement (outcome m2), with the two-visibility imperfection model.

#include <array>
#include <cstddef>
#include <string>

#include "seqmeas/qubit_algebra.hpp"

namespace seqmeas {

inline constexpr double kMaxThetaDeg = 22.5;
inline constexpr double kDefaultVpm = 0.93;
inline constexpr double kDefaultVhv = 0.9976;
inline constexpr double kDefaultInputAngleDeg = 67.5;

struct SetupParams {
    double theta_deg = 0.0;  // 0 = no PM measurement, 22.5 = projective
    double v_pm = kDefaultVpm;
    double v_hv = kDefaultVhv;

    /// Throws InvalidInput naming the offending field.
    void validate() const;
};

/// (m1, m2) with m1 = +1 for P (path b1), m2 = +1 for H.
struct SequentialOutcome {
    int m1 = 1;
    int m2 = 1;

    friend bool operator==(const SequentialOutcome&, const SequentialOutcome&) = default;
};

/// Canonical order used everywhere: (+,+), (+,-), (-,+), (-,-).
inline constexpr std::array<SequentialOutcome, 4> kOutcomes{
    SequentialOutcome{1, 1}, SequentialOutcome{1, -1}, SequentialOutcome{-1, 1},
    SequentialOutcome{-1, -1}};

std::size_t outcome_index(SequentialOutcome outcome);  // throws on non +-1 fields
std::string outcome_label(SequentialOutcome outcome);  // "++", "+-", ...

struct OutcomeDistribution {
    std::array<double, 4> probs{};  // canonical order

    double operator[](SequentialOutcome o) const { return probs[outcome_index(o)]; }
    double marginal_m1(int m1) const;
    double marginal_m2(int m2) const;

    friend bool operator==(const OutcomeDistribution&, const OutcomeDistribution&) = default;
};

/// Sub-normalized ideal outcome vector, |v|^2 = 1/2.
Vec2 ideal_outcome_vector(double theta_deg, SequentialOutcome outcome);

/// Four-element POVM in canonical order with V_PM dephasing of HV coherences
/// and symmetric V_HV confusion of m2. Labels are outcome_label().
PovmSet sequential_povm(const SetupParams& params);

/// Two elements {m1 = +1, m1 = -1} with labels "+" and "-".
PovmSet pm_marginal_povm(const SetupParams& params);

/// (1 - V_PM sin 4theta) / 2
double pm_error_probability(const SetupParams& params);

OutcomeDistribution outcome_probabilities(const SetupParams& params, const QubitState& state);

}  // namespace seqmeas
