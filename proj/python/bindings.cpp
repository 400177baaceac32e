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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "seqmeas/error_analysis.hpp"
#include "seqmeas/errors.hpp"
#include "seqmeas/harness.hpp"
#include "seqmeas/measurement_model.hpp"
#include "seqmeas/report_io.hpp"

namespace py = pybind11;
using namespace seqmeas;

namespace {

py::dict row_to_dict(const SweepRow& r) {
    const auto& cols = io::sweep_columns();
    auto opt = [](const std::optional<double>& v) -> py::object {
        return v ? py::object(py::float_(*v)) : py::object(py::none());
    };
    py::dict d;
    d[cols[0].c_str()] = r.theta_deg;
    d[cols[1].c_str()] = r.p_error;
    for (std::size_t i = 0; i < 4; ++i) d[cols[2 + i].c_str()] = r.probs.probs[i];
    for (std::size_t i = 0; i < 2; ++i) d[cols[6 + i].c_str()] = opt(r.a_opt_m1[i]);
    for (std::size_t i = 0; i < 4; ++i) d[cols[8 + i].c_str()] = opt(r.a_opt_m1m2[i]);
    d[cols[12].c_str()] = opt(r.eps_sq_eigen);
    d[cols[13].c_str()] = opt(r.eps_sq_opt_m1);
    d[cols[14].c_str()] = opt(r.eps_sq_opt_m1m2);
    return d;
}

SetupParams make_setup(double theta_deg, double v_pm, double v_hv) {
    SetupParams s{theta_deg, v_pm, v_hv};
    s.validate();
    return s;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Sequential variable-strength qubit measurement: errors, weak values and crossings";

    py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
    py::register_exception<DegenerateBranch>(m, "DegenerateBranch", PyExc_ArithmeticError);
    py::register_exception<UnresolvableOutcome>(m, "UnresolvableOutcome", PyExc_ArithmeticError);

    m.attr("DEFAULT_V_PM") = kDefaultVpm;
    m.attr("DEFAULT_V_HV") = kDefaultVhv;
    m.attr("DEFAULT_INPUT_ANGLE") = kDefaultInputAngleDeg;
    m.attr("SWEEP_COLUMNS") = io::sweep_columns();

    py::class_<SetupParams>(m, "SetupParams")
        .def(py::init(&make_setup), py::arg("theta_deg") = 0.0, py::arg("v_pm") = kDefaultVpm,
             py::arg("v_hv") = kDefaultVhv)
        .def_readonly("theta_deg", &SetupParams::theta_deg)
        .def_readonly("v_pm", &SetupParams::v_pm)
        .def_readonly("v_hv", &SetupParams::v_hv)
        .def("__repr__", [](const SetupParams& s) {
            return "SetupParams(theta_deg=" + io::format_real(s.theta_deg) + ", v_pm=" + io::format_real(s.v_pm) +
                   ", v_hv=" + io::format_real(s.v_hv) + ")";
        });

    m.def("pm_error_probability", &pm_error_probability, py::arg("setup"));
    m.def(
        "outcome_probabilities",
        [](const SetupParams& s, double input_angle) {
            return outcome_probabilities(s, make_linear_polarization(input_angle)).probs;
        },
        py::arg("setup"), py::arg("input_angle_deg") = kDefaultInputAngleDeg,
        "P(m1, m2|psi) in the order (+,+), (+,-), (-,+), (-,-).");

    m.def(
        "analytic_row",
        [](const SetupParams& s, double input_angle) { return row_to_dict(analytic_row(s, input_angle)); },
        py::arg("setup"), py::arg("input_angle_deg") = kDefaultInputAngleDeg);

    m.def(
        "run_sweep",
        [](std::vector<double> grid, double v_pm, double v_hv, double input_angle) {
            SweepConfig cfg;
            if (!grid.empty()) cfg.theta_grid = std::move(grid);
            cfg.setup = make_setup(0.0, v_pm, v_hv);
            cfg.input_angle_deg = input_angle;
            py::list out;
            for (const auto& r : run_sweep(cfg)) out.append(row_to_dict(r));
            return out;
        },
        py::arg("theta_grid") = std::vector<double>{}, py::arg("v_pm") = kDefaultVpm,
        py::arg("v_hv") = kDefaultVhv, py::arg("input_angle_deg") = kDefaultInputAngleDeg,
        "Analytic sweep; an empty grid selects 0..22.5 deg in 0.5 deg steps.");

    m.def(
        "find_crossings",
        [](double v_pm, double v_hv, double input_angle) {
            CrossingConfig cfg;
            cfg.setup = make_setup(0.0, v_pm, v_hv);
            cfg.input_angle_deg = input_angle;
            py::list out;
            for (const auto& c : find_crossings(cfg)) {
                py::dict d;
                d["kind"] = crossing_name(c.kind);
                d["description"] = c.description;
                d["theta_deg"] = c.theta_deg ? py::object(py::float_(*c.theta_deg)) : py::object(py::none());
                out.append(d);
            }
            return out;
        },
        py::arg("v_pm") = kDefaultVpm, py::arg("v_hv") = kDefaultVhv,
        py::arg("input_angle_deg") = kDefaultInputAngleDeg);

    m.def(
        "quasi_probability",
        [](const SetupParams& s, double input_angle) {
            const auto t = quasi_probability(make_linear_polarization(input_angle), sequential_povm(s),
                                             make_stokes(StokesAxis::PM));
            py::dict d;
            d["labels"] = t.labels;
            d["entries"] = t.entries;
            d["p_outcome"] = t.p_outcome;
            d["p_eigen"] = t.p_eigen;
            d["min_entry"] = t.min_entry;
            d["negativity_present"] = t.negativity_present;
            return d;
        },
        py::arg("setup"), py::arg("input_angle_deg") = kDefaultInputAngleDeg);

    py::class_<CountRecord>(m, "CountRecord")
        .def_readonly("setup", &CountRecord::setup)
        .def_readonly("input_angle_deg", &CountRecord::input_angle_deg)
        .def_readonly("n_photons", &CountRecord::n_photons)
        .def_readonly("rng_seed", &CountRecord::rng_seed)
        .def_readonly("stream", &CountRecord::stream)
        .def_readonly("psi_counts", &CountRecord::psi_counts)
        .def_readonly("plus_counts", &CountRecord::plus_counts)
        .def_readonly("minus_counts", &CountRecord::minus_counts)
        .def_readonly("prior_counts", &CountRecord::prior_counts);

    m.def(
        "monte_carlo_counts",
        [](const SetupParams& s, double input_angle, std::uint64_t n, std::uint64_t seed, std::uint64_t stream,
           bool simulate_prior) {
            return monte_carlo_counts(s, input_angle, n, seed, stream, MonteCarloOptions{simulate_prior});
        },
        py::arg("setup"), py::arg("input_angle_deg") = kDefaultInputAngleDeg, py::arg("n_photons") = 1'000'000,
        py::arg("rng_seed") = 1, py::arg("stream") = 0, py::arg("simulate_prior_run") = false);
    m.def(
        "estimate_from_counts", [](const CountRecord& r) { return row_to_dict(estimate_from_counts(r)); },
        py::arg("record"));

    m.def("conditional_average", &conditional_average, py::arg("correlation"), py::arg("p_m"),
          py::arg("outcome") = "m");
    m.def(
        "reconstruct_correlation",
        [](double p_plus, double p_minus, double mean_a, double mean_a2, double lambda) {
            return reconstruct_correlation(p_plus, p_minus, mean_a, mean_a2, ReconstructionConfig{lambda});
        },
        py::arg("p_plus"), py::arg("p_minus"), py::arg("mean_a"), py::arg("mean_a2"), py::arg("lam") = 1.0);
    m.def("classical_conditional_average", &classical_conditional_average, py::arg("m1"), py::arg("p_error"),
          py::arg("mean_a"));
    m.def("sequential_conditional_average", &sequential_conditional_average, py::arg("m1"), py::arg("m2"),
          py::arg("p_error"), py::arg("mean_a"), py::arg("p_joint"));

    m.def(
        "sweep_csv",
        [](std::vector<double> grid, double v_pm, double v_hv, double input_angle) {
            SweepConfig cfg;
            if (!grid.empty()) cfg.theta_grid = std::move(grid);
            cfg.setup = make_setup(0.0, v_pm, v_hv);
            cfg.input_angle_deg = input_angle;
            return io::sweep_csv(run_sweep(cfg));
        },
        py::arg("theta_grid") = std::vector<double>{}, py::arg("v_pm") = kDefaultVpm,
        py::arg("v_hv") = kDefaultVhv, py::arg("input_angle_deg") = kDefaultInputAngleDeg);
}
