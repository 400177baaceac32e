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

#include "seqmeas/measurement_model.hpp"

#include <cmath>
#include <numbers>

#include "seqmeas/errors.hpp"

namespace seqmeas {

namespace {

double radians(double deg) { return deg * std::numbers::pi / 180.0; }

void check_theta(double theta_deg) {
    if (!std::isfinite(theta_deg) || theta_deg < 0.0 || theta_deg > kMaxThetaDeg) {
        throw InvalidInput("theta_deg out of range [0, 22.5]: " + std::to_string(theta_deg));
    }
}

Operator2 dephase(const Operator2& e, double v_pm) {
    return {e(0, 0), e(0, 1) * v_pm, e(1, 0) * v_pm, e(1, 1)};
}

}  // namespace

void SetupParams::validate() const {
    check_theta(theta_deg);
    if (!std::isfinite(v_pm) || v_pm < 0.0 || v_pm > 1.0) {
        throw InvalidInput("v_pm out of range [0, 1]: " + std::to_string(v_pm));
    }
    if (!std::isfinite(v_hv) || v_hv < 0.0 || v_hv > 1.0) {
        throw InvalidInput("v_hv out of range [0, 1]: " + std::to_string(v_hv));
    }
}

std::size_t outcome_index(SequentialOutcome o) {
    if ((o.m1 != 1 && o.m1 != -1) || (o.m2 != 1 && o.m2 != -1)) {
        throw InvalidInput("SequentialOutcome fields must be +1 or -1");
    }
    return (o.m1 == 1 ? 0 : 2) + (o.m2 == 1 ? 0 : 1);
}

std::string outcome_label(SequentialOutcome o) {
    outcome_index(o);
    return std::string(o.m1 == 1 ? "+" : "-") + (o.m2 == 1 ? "+" : "-");
}

double OutcomeDistribution::marginal_m1(int m1) const {
    return (*this)[{m1, 1}] + (*this)[{m1, -1}];
}

double OutcomeDistribution::marginal_m2(int m2) const {
    return (*this)[{1, m2}] + (*this)[{-1, m2}];
}

Vec2 ideal_outcome_vector(double theta_deg, SequentialOutcome outcome) {
    check_theta(theta_deg);
    outcome_index(outcome);
    const double c = std::cos(2.0 * radians(theta_deg)) / std::numbers::sqrt2;
    const double s = std::sin(2.0 * radians(theta_deg)) / std::numbers::sqrt2;
    const double sign = outcome.m1;
    if (outcome.m2 == 1) return {c, sign * s};
    return {s, sign * c};
}

PovmSet sequential_povm(const SetupParams& params) {
    params.validate();
    std::array<Operator2, 4> ideal;
    for (std::size_t i = 0; i < kOutcomes.size(); ++i) {
        ideal[i] = dephase(Operator2::projector(ideal_outcome_vector(params.theta_deg, kOutcomes[i])),
                           params.v_pm);
    }
    const double keep = 0.5 * (1.0 + params.v_hv);
    const double flip = 0.5 * (1.0 - params.v_hv);
    PovmSet set;
    set.reserve(kOutcomes.size());
    for (const auto& o : kOutcomes) {
        const Operator2 mixed = ideal[outcome_index(o)] * keep + ideal[outcome_index({o.m1, -o.m2})] * flip;
        set.emplace_back(outcome_label(o), mixed);
    }
    return set;
}

PovmSet pm_marginal_povm(const SetupParams& params) {
    const PovmSet full = sequential_povm(params);
    return {PovmElement("+", full[0].op() + full[1].op()), PovmElement("-", full[2].op() + full[3].op())};
}

double pm_error_probability(const SetupParams& params) {
    params.validate();
    return 0.5 * (1.0 - params.v_pm * std::sin(4.0 * radians(params.theta_deg)));
}

OutcomeDistribution outcome_probabilities(const SetupParams& params, const QubitState& state) {
    const PovmSet povm = sequential_povm(params);
    OutcomeDistribution dist;
    for (std::size_t i = 0; i < povm.size(); ++i) dist.probs[i] = born_probability(state, povm[i]);
    return dist;
}

}  // namespace seqmeas
