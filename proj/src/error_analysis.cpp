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

#include "seqmeas/error_analysis.hpp"

#include <algorithm>
#include <cmath>

#include "seqmeas/errors.hpp"

namespace seqmeas {

namespace {

constexpr double kDenominatorFloor = 1e-12;

void check_lambda(const ReconstructionConfig& cfg) {
    if (!std::isfinite(cfg.lambda) || cfg.lambda == 0.0) {
        throw InvalidInput("ReconstructionConfig: lambda must be finite and non-zero");
    }
}

void check_probability(double p, const char* name) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw InvalidInput(std::string(name) + " must lie in [0, 1], got " + std::to_string(p));
    }
}

std::string sign_label(int s) { return s == 1 ? "+" : "-"; }

}  // namespace

double ErrorReport::decomposition_gap() const {
    return std::abs(epsilon_sq - (mean_sq - estimate_variance + residual));
}

std::pair<QubitState, QubitState> variation_states(const QubitState& psi, const DichotomicObservable& a,
                                                   const ReconstructionConfig& cfg) {
    check_lambda(cfg);
    const double mean = expectation(psi, a.op());
    const double mean2 = expectation(psi, a.op() * a.op());
    const double lambda = cfg.lambda;
    const Operator2 id = Operator2::identity();

    auto branch = [&](double sign) {
        const double norm2 = 1.0 + sign * 2.0 * lambda * mean + lambda * lambda * mean2;
        if (!(norm2 > kDenominatorFloor)) {
            throw DegenerateBranch("variation_states: state has no overlap with the " +
                                   sign_label(sign > 0 ? 1 : -1) + " branch");
        }
        const Operator2 shift = id + a.op() * (sign * lambda);
        if (psi.kind() == QubitState::Kind::Pure) {
            Vec2 v = shift.apply(psi.ket());
            const double inv = 1.0 / std::sqrt(norm2);
            v[0] *= inv;
            v[1] *= inv;
            return QubitState::pure(v);
        }
        return QubitState::mixed(shift * psi.density() * shift.adjoint() * (1.0 / norm2));
    };
    return {branch(1.0), branch(-1.0)};
}

double reconstruct_correlation(double p_plus, double p_minus, double mean_a, double mean_a2,
                               const ReconstructionConfig& cfg) {
    check_lambda(cfg);
    check_probability(p_plus, "p_plus");
    check_probability(p_minus, "p_minus");
    const double l = cfg.lambda;
    const double w_plus = 1.0 + 2.0 * l * mean_a + l * l * mean_a2;
    const double w_minus = 1.0 - 2.0 * l * mean_a + l * l * mean_a2;
    if (!(w_plus > 0.0) || !(w_minus > 0.0)) {
        throw InvalidInput("reconstruct_correlation: non-positive normalization weight");
    }
    return (w_plus * p_plus - w_minus * p_minus) / (4.0 * l);
}

double conditional_average(double correlation, double p_m, const std::string& outcome) {
    if (!(p_m > kProbabilityFloor)) throw UnresolvableOutcome(outcome, p_m);
    return correlation / p_m;
}

double two_level_conditional_average(double p_m_given_plus, double p_m_given_minus, double p_plus_psi,
                                     double p_minus_psi, double p_m_psi, const std::string& outcome) {
    check_probability(p_m_given_plus, "P(m|+)");
    check_probability(p_m_given_minus, "P(m|-)");
    check_probability(p_plus_psi, "P(+|psi)");
    check_probability(p_minus_psi, "P(-|psi)");
    check_probability(p_m_psi, "P(m|psi)");
    return conditional_average(p_m_given_plus * p_plus_psi - p_m_given_minus * p_minus_psi, p_m_psi, outcome);
}

double classical_conditional_average(int m1, double p_error, double mean_a) {
    if (m1 != 1 && m1 != -1) throw InvalidInput("classical_conditional_average: m1 must be +-1");
    if (!(p_error >= 0.0 && p_error <= 0.5)) {
        throw InvalidInput("classical_conditional_average: p_error must lie in [0, 1/2]");
    }
    if (!(std::abs(mean_a) <= 1.0 + kAlgebraTol)) {
        throw InvalidInput("classical_conditional_average: |<A>| must be <= 1");
    }
    const double contrast = 1.0 - 2.0 * p_error;
    const double denom = m1 + contrast * mean_a;
    if (std::abs(denom) <= kDenominatorFloor) {
        throw DegenerateBranch("classical_conditional_average: outcome " + sign_label(m1) +
                               " has vanishing probability");
    }
    return m1 * (contrast * m1 + mean_a) / denom;
}

double sequential_conditional_average(int m1, int m2, double p_error, double mean_a, double p_joint) {
    if ((m1 != 1 && m1 != -1) || (m2 != 1 && m2 != -1)) {
        throw InvalidInput("sequential_conditional_average: m1, m2 must be +-1");
    }
    if (!(p_joint > kProbabilityFloor)) throw UnresolvableOutcome(sign_label(m1) + sign_label(m2), p_joint);
    return (m1 * (1.0 - 2.0 * p_error) + mean_a) / (4.0 * p_joint);
}

ErrorReport ozawa_error(const QubitState& state, const PovmSet& povm, const DichotomicObservable& a,
                        const EstimateTable& assignments) {
    if (assignments.size() != povm.size()) {
        throw InvalidInput("ozawa_error: " + std::to_string(assignments.size()) + " assignments for " +
                           std::to_string(povm.size()) + " outcomes");
    }
    ErrorReport r;
    const double mean = expectation(state, a.op());
    r.mean_sq = expectation(state, a.op() * a.op());
    r.variance_initial = r.mean_sq - mean * mean;

    double eps = r.mean_sq;
    for (std::size_t m = 0; m < povm.size(); ++m) {
        if (!assignments[m] || !std::isfinite(*assignments[m])) {
            throw InvalidInput("ozawa_error: missing assignment for outcome '" + povm[m].label() + "'");
        }
        const double am = *assignments[m];
        const double p = born_probability(state, povm[m]);
        const double corr = real_cross_correlation(state, povm[m], a.op());
        const double term = am * am * p - 2.0 * am * corr;
        eps += term;
        if (p > kProbabilityFloor) {
            const double opt = corr / p;
            r.estimate_variance += opt * opt * p;
            r.residual += (am - opt) * (am - opt) * p;
        } else {
            // No A_opt here: the outcome's whole contribution is carried as residual.
            r.excluded_mass += p;
            r.residual += term;
        }
    }
    r.epsilon_sq = eps;
    return r;
}

std::pair<EstimateTable, ErrorReport> optimal_error(const QubitState& state, const PovmSet& povm,
                                                    const DichotomicObservable& a) {
    EstimateTable table(povm.size());
    EstimateTable assignments(povm.size(), 0.0);
    for (std::size_t m = 0; m < povm.size(); ++m) {
        const double p = born_probability(state, povm[m]);
        if (p > kProbabilityFloor) {
            table[m] = conditional_average(real_cross_correlation(state, povm[m], a.op()), p, povm[m].label());
            assignments[m] = table[m];
        }
    }
    return {table, ozawa_error(state, povm, a, assignments)};
}

QuasiProbabilityTable quasi_probability(const QubitState& state, const PovmSet& povm,
                                        const DichotomicObservable& a) {
    QuasiProbabilityTable t;
    t.p_eigen = {born_probability(state, PovmElement("+", a.projector_plus())),
                 born_probability(state, PovmElement("-", a.projector_minus()))};
    t.min_entry = 0.0;
    for (const auto& e : povm) {
        t.labels.push_back(e.label());
        t.p_outcome.push_back(born_probability(state, e));
        const std::array<double, 2> row{real_cross_correlation(state, e, a.projector_plus()),
                                        real_cross_correlation(state, e, a.projector_minus())};
        t.min_entry = std::min({t.min_entry, row[0], row[1]});
        t.entries.push_back(row);
    }
    t.negativity_present = t.min_entry < -kAlgebraTol;
    return t;
}

double two_level_error(const std::vector<double>& assignments, const std::vector<double>& p_m_psi,
                       const std::vector<double>& p_m_given_plus, const std::vector<double>& p_m_given_minus,
                       double p_plus_psi, double p_minus_psi) {
    const std::size_t n = assignments.size();
    if (p_m_psi.size() != n || p_m_given_plus.size() != n || p_m_given_minus.size() != n) {
        throw InvalidInput("two_level_error: mismatched outcome tables");
    }
    double eps = 1.0;
    for (std::size_t m = 0; m < n; ++m) {
        const double am = assignments[m];
        eps += am * am * p_m_psi[m] -
               2.0 * am * (p_m_given_plus[m] * p_plus_psi - p_m_given_minus[m] * p_minus_psi);
    }
    return eps;
}

bool BinaryConfusion::symmetric() const {
    return std::abs(p_plus_given_minus - p_minus_given_plus) < kPovmTol;
}

double eigenvalue_assignment_error(const BinaryConfusion& c, double p_plus_psi, double p_minus_psi) {
    check_probability(p_plus_psi, "P(+|psi)");
    check_probability(p_minus_psi, "P(-|psi)");
    if (c.symmetric()) return 4.0 * 0.5 * (c.p_plus_given_minus + c.p_minus_given_plus);
    return 2.0 - 2.0 * (c.p_plus_given_plus * p_plus_psi + c.p_minus_given_minus * p_minus_psi -
                        c.p_plus_given_minus * p_minus_psi - c.p_minus_given_plus * p_plus_psi);
}

}  // namespace seqmeas
