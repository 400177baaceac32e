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

#include "seqmeas/harness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "seqmeas/error_analysis.hpp"
#include "seqmeas/errors.hpp"

namespace seqmeas {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
// Scan values this small are treated as exact zeros.
constexpr double kZeroBand = 1e-12;
// Converged brackets with |f| above this straddle a pole, not a root.
constexpr double kRootResidual = 1e-6;
constexpr double kBisectionTolDeg = 1e-9;

std::optional<double> resolved(double correlation, double p) {
    if (!(p > kProbabilityFloor)) return std::nullopt;
    return correlation / p;
}

std::array<double, 4> frequencies(const std::array<std::uint64_t, 4>& counts, std::uint64_t n, const char* run) {
    std::uint64_t total = 0;
    for (auto c : counts) total += c;
    if (total == 0) throw InvalidInput(std::string("estimate_from_counts: ") + run + " run has no counts");
    if (total != n) {
        throw InvalidInput(std::string("estimate_from_counts: ") + run + " run counts sum to " +
                           std::to_string(total) + ", expected " + std::to_string(n));
    }
    std::array<double, 4> f{};
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = static_cast<double>(counts[i]) / static_cast<double>(n);
    return f;
}

template <std::size_t K>
std::array<std::uint64_t, K> sample_multinomial(const std::array<double, K>& probs, std::uint64_t n,
                                                std::mt19937_64& rng) {
    std::array<std::uint64_t, K> counts{};
    double rest = 1.0;
    std::uint64_t left = n;
    for (std::size_t i = 0; i + 1 < K && left > 0; ++i) {
        const double p = rest > 0.0 ? std::clamp(probs[i] / rest, 0.0, 1.0) : 0.0;
        std::binomial_distribution<std::uint64_t> draw(left, p);
        counts[i] = draw(rng);
        left -= counts[i];
        rest -= probs[i];
    }
    counts[K - 1] += left;
    return counts;
}

std::mt19937_64 run_generator(std::uint64_t seed, std::uint64_t stream, std::uint32_t run) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32), run};
    return std::mt19937_64(seq);
}

}  // namespace

std::vector<double> linear_grid(double theta_min, double theta_max, int steps) {
    if (steps < 1) throw InvalidInput("linear_grid: steps must be >= 1");
    if (!(theta_min <= theta_max)) throw InvalidInput("linear_grid: theta_min must not exceed theta_max");
    if (steps == 1) return {theta_min};
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(steps));
    const double step = (theta_max - theta_min) / (steps - 1);
    for (int i = 0; i < steps; ++i) grid.push_back(i + 1 == steps ? theta_max : theta_min + i * step);
    return grid;
}

std::vector<double> default_theta_grid() { return linear_grid(0.0, kMaxThetaDeg, 46); }

void SweepConfig::validate() const {
    for (double t : theta_grid) {
        if (!(t >= 0.0 && t <= kMaxThetaDeg)) {
            throw InvalidInput("SweepConfig: grid value out of [0, 22.5]: " + std::to_string(t));
        }
    }
    if (strategies.empty()) throw InvalidInput("SweepConfig: no strategies selected");
    SetupParams probe = setup;
    probe.theta_deg = 0.0;
    probe.validate();
    if (!std::isfinite(input_angle_deg)) throw InvalidInput("SweepConfig: non-finite input angle");
}

bool SweepConfig::wants(Strategy s) const {
    return std::find(strategies.begin(), strategies.end(), s) != strategies.end();
}

SweepRow analytic_row(const SetupParams& setup, double input_angle_deg, const std::vector<Strategy>& strategies) {
    setup.validate();
    auto wants = [&](Strategy s) { return std::find(strategies.begin(), strategies.end(), s) != strategies.end(); };
    const QubitState psi = make_linear_polarization(input_angle_deg);
    const DichotomicObservable target = make_stokes(StokesAxis::PM);

    SweepRow row;
    row.theta_deg = setup.theta_deg;
    row.p_error = pm_error_probability(setup);
    row.probs = outcome_probabilities(setup, psi);

    if (wants(Strategy::OptimalM1) || wants(Strategy::EigenvalueAssignment)) {
        const PovmSet marginal = pm_marginal_povm(setup);
        if (wants(Strategy::OptimalM1)) {
            const auto [table, report] = optimal_error(psi, marginal, target);
            row.a_opt_m1 = {table[0], table[1]};
            row.eps_sq_opt_m1 = report.epsilon_sq;
        }
        if (wants(Strategy::EigenvalueAssignment)) {
            row.eps_sq_eigen = ozawa_error(psi, marginal, target, {1.0, -1.0}).epsilon_sq;
        }
    }
    if (wants(Strategy::OptimalM1M2)) {
        const auto [table, report] = optimal_error(psi, sequential_povm(setup), target);
        std::copy(table.begin(), table.end(), row.a_opt_m1m2.begin());
        row.eps_sq_opt_m1m2 = report.epsilon_sq;
    }
    return row;
}

std::vector<SweepRow> run_sweep(const SweepConfig& config) {
    config.validate();
    std::vector<SweepRow> rows;
    rows.reserve(config.theta_grid.size());
    for (double theta : config.theta_grid) {
        SetupParams setup = config.setup;
        setup.theta_deg = theta;
        rows.push_back(analytic_row(setup, config.input_angle_deg, config.strategies));
    }
    return rows;
}

std::string crossing_name(CrossingKind kind) {
    switch (kind) {
        case CrossingKind::EstimateZero:
            return "aopt_m1_minus_zero";
        case CrossingKind::EstimateInversion:
            return "aopt_inversion";
        case CrossingKind::EigenErrorPrior:
            return "eps_eigen_prior_variance";
    }
    return "unknown";
}

std::string crossing_description(CrossingKind kind) {
    switch (kind) {
        case CrossingKind::EstimateZero:
            return "A_opt(-1,m2) = 0";
        case CrossingKind::EstimateInversion:
            return "A_opt(-1,+1) = A_opt(+1,+1)";
        case CrossingKind::EigenErrorPrior:
            return "eigenvalue-assignment error = prior variance";
    }
    return "unknown";
}

double crossing_function(CrossingKind kind, const SetupParams& setup, double input_angle_deg) {
    const QubitState psi = make_linear_polarization(input_angle_deg);
    const DichotomicObservable target = make_stokes(StokesAxis::PM);
    switch (kind) {
        case CrossingKind::EstimateZero:
        case CrossingKind::EstimateInversion: {
            const PovmSet povm = sequential_povm(setup);
            auto estimate = [&](SequentialOutcome o) {
                const auto& e = povm[outcome_index(o)];
                return resolved(real_cross_correlation(psi, e, target.op()), born_probability(psi, e));
            };
            if (kind == CrossingKind::EstimateZero) {
                // Both m2 branches share the numerator; (-,-) keeps a finite denominator.
                return estimate({-1, -1}).value_or(kNaN);
            }
            const auto low = estimate({-1, 1});
            const auto high = estimate({1, 1});
            return (low && high) ? *low - *high : kNaN;
        }
        case CrossingKind::EigenErrorPrior: {
            const auto report = ozawa_error(psi, pm_marginal_povm(setup), target, {1.0, -1.0});
            return report.epsilon_sq - report.variance_initial;
        }
    }
    return kNaN;
}

double bisect(const std::function<double(double)>& f, double lo, double hi, double tol) {
    double f_lo = f(lo);
    if (f_lo == 0.0) return lo;
    if (f(hi) == 0.0) return hi;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        const double f_mid = f(mid);
        if (f_mid == 0.0) return mid;
        if ((f_mid < 0.0) == (f_lo < 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

std::vector<Crossing> find_crossings(const CrossingConfig& config) {
    SetupParams probe = config.setup;
    probe.theta_deg = 0.0;
    probe.validate();
    if (config.scan_grid.size() < 2) throw InvalidInput("find_crossings: scan grid needs >= 2 points");
    if (!(config.tolerance_deg > 0.0)) throw InvalidInput("find_crossings: tolerance must be positive");
    const double tol = std::min(config.tolerance_deg, kBisectionTolDeg);

    std::vector<Crossing> out;
    for (CrossingKind kind :
         {CrossingKind::EstimateZero, CrossingKind::EstimateInversion, CrossingKind::EigenErrorPrior}) {
        auto f = [&](double theta) {
            SetupParams s = config.setup;
            s.theta_deg = theta;
            return crossing_function(kind, s, config.input_angle_deg);
        };
        auto f_or_zero = [&](double theta) {
            const double v = f(theta);
            return std::abs(v) < kZeroBand ? 0.0 : v;
        };
        const auto& grid = config.scan_grid;
        std::vector<double> values;
        values.reserve(grid.size());
        for (double t : grid) values.push_back(f_or_zero(t));

        const std::size_t before = out.size();
        for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
            const double a = values[i];
            const double b = values[i + 1];
            if (std::isnan(a) || std::isnan(b)) continue;
            if (a == 0.0) {
                // Interior grid zeros are roots; zeros at the domain edge are tangencies.
                if (i > 0 && !std::isnan(values[i - 1]) && values[i - 1] * b < 0.0) {
                    out.push_back({kind, crossing_description(kind), grid[i]});
                }
                continue;
            }
            if (b == 0.0 || a * b > 0.0) continue;
            const double root = bisect(f, grid[i], grid[i + 1], tol);
            const double residual = f(root);
            if (std::isnan(residual) || std::abs(residual) > kRootResidual) continue;
            out.push_back({kind, crossing_description(kind), root});
        }
        if (out.size() == before) out.push_back({kind, crossing_description(kind), std::nullopt});
    }
    return out;
}

CountRecord monte_carlo_counts(const SetupParams& setup, double input_angle_deg, std::uint64_t n_photons,
                               std::uint64_t rng_seed, std::uint64_t stream, const MonteCarloOptions& options) {
    setup.validate();
    if (n_photons < 1) throw InvalidInput("monte_carlo_counts: n_photons must be >= 1");
    const QubitState psi = make_linear_polarization(input_angle_deg);

    CountRecord rec;
    rec.setup = setup;
    rec.input_angle_deg = input_angle_deg;
    rec.n_photons = n_photons;
    rec.rng_seed = rng_seed;
    rec.stream = stream;

    auto run = [&](const QubitState& input, std::uint32_t index) {
        auto rng = run_generator(rng_seed, stream, index);
        return sample_multinomial(outcome_probabilities(setup, input).probs, n_photons, rng);
    };
    rec.psi_counts = run(psi, 0);
    rec.plus_counts = run(make_linear_polarization(45.0), 1);
    rec.minus_counts = run(make_linear_polarization(-45.0), 2);
    if (options.simulate_prior_run) {
        const DichotomicObservable target = make_stokes(StokesAxis::PM);
        const std::array<double, 2> prior{born_probability(psi, PovmElement("+", target.projector_plus())),
                                          born_probability(psi, PovmElement("-", target.projector_minus()))};
        auto rng = run_generator(rng_seed, stream, 3);
        rec.prior_counts = sample_multinomial(prior, n_photons, rng);
    }
    return rec;
}

SweepRow estimate_from_frequencies(const EmpiricalFrequencies& freq) {
    const double pp = freq.p_plus_psi;
    const double pm = 1.0 - pp;
    auto m1_marginal = [](const std::array<double, 4>& f) { return std::array<double, 2>{f[0] + f[1], f[2] + f[3]}; };
    const auto psi1 = m1_marginal(freq.psi);
    const auto plus1 = m1_marginal(freq.plus);
    const auto minus1 = m1_marginal(freq.minus);

    SweepRow row;
    row.theta_deg = freq.theta_deg;
    row.probs.probs = freq.psi;
    row.p_error = 0.5 * (plus1[1] + minus1[0]);

    double spread = 0.0;
    for (std::size_t m = 0; m < 4; ++m) {
        if (!(freq.psi[m] > kProbabilityFloor)) continue;
        const double a = two_level_conditional_average(freq.plus[m], freq.minus[m], pp, pm, freq.psi[m],
                                                       outcome_label(kOutcomes[m]));
        row.a_opt_m1m2[m] = a;
        spread += a * a * freq.psi[m];
    }
    row.eps_sq_opt_m1m2 = 1.0 - spread;

    spread = 0.0;
    for (std::size_t m = 0; m < 2; ++m) {
        if (!(psi1[m] > kProbabilityFloor)) continue;
        const double a = two_level_conditional_average(plus1[m], minus1[m], pp, pm, psi1[m], m == 0 ? "+" : "-");
        row.a_opt_m1[m] = a;
        spread += a * a * psi1[m];
    }
    row.eps_sq_opt_m1 = 1.0 - spread;

    const BinaryConfusion confusion{plus1[0], plus1[1], minus1[0], minus1[1]};
    row.eps_sq_eigen = eigenvalue_assignment_error(confusion, pp, pm);
    return row;
}

SweepRow estimate_from_counts(const CountRecord& record) {
    record.setup.validate();
    if (record.n_photons < 1) throw InvalidInput("estimate_from_counts: n_photons must be >= 1");
    EmpiricalFrequencies freq;
    freq.theta_deg = record.setup.theta_deg;
    freq.psi = frequencies(record.psi_counts, record.n_photons, "psi");
    freq.plus = frequencies(record.plus_counts, record.n_photons, "P-calibration");
    freq.minus = frequencies(record.minus_counts, record.n_photons, "M-calibration");
    if (record.prior_counts) {
        const auto& prior = *record.prior_counts;
        if (prior[0] + prior[1] != record.n_photons) {
            throw InvalidInput("estimate_from_counts: prior run counts do not sum to n_photons");
        }
        freq.p_plus_psi = static_cast<double>(prior[0]) / static_cast<double>(record.n_photons);
    } else {
        const QubitState psi = make_linear_polarization(record.input_angle_deg);
        freq.p_plus_psi = 0.5 * (1.0 + expectation(psi, make_stokes(StokesAxis::PM).op()));
    }
    return estimate_from_frequencies(freq);
}

}  // namespace seqmeas

namespace seqmeas {

std::vector<LgiRow> run_lgi_scan(const SweepConfig& config) {
    config.validate();
    const QubitState psi = make_linear_polarization(config.input_angle_deg);
    const DichotomicObservable target = make_stokes(StokesAxis::PM);
    std::vector<LgiRow> rows;
    rows.reserve(config.theta_grid.size());
    for (double theta : config.theta_grid) {
        SetupParams setup = config.setup;
        setup.theta_deg = theta;
        const PovmSet povm = sequential_povm(setup);
        LgiRow row;
        row.theta_deg = theta;
        row.table = quasi_probability(psi, povm, target);
        const auto table = optimal_error(psi, povm, target).first;
        std::copy(table.begin(), table.end(), row.a_opt.begin());
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<ReconstructionRow> reconstruction_table(const SetupParams& setup, double input_angle_deg,
                                                    const ReconstructionConfig& cfg) {
    const QubitState psi = make_linear_polarization(input_angle_deg);
    const DichotomicObservable target = make_stokes(StokesAxis::PM);
    const double mean = expectation(psi, target.op());
    const double mean2 = expectation(psi, target.op() * target.op());
    const auto [plus, minus] = variation_states(psi, target, cfg);
    const PovmSet povm = sequential_povm(setup);

    std::vector<ReconstructionRow> rows;
    for (const auto& e : povm) {
        ReconstructionRow row;
        row.outcome = e.label();
        row.p_psi = born_probability(psi, e);
        row.p_plus = born_probability(plus, e);
        row.p_minus = born_probability(minus, e);
        row.correlation_reconstructed = reconstruct_correlation(row.p_plus, row.p_minus, mean, mean2, cfg);
        row.correlation_direct = real_cross_correlation(psi, e, target.op());
        row.a_opt = resolved(row.correlation_reconstructed, row.p_psi);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace seqmeas
