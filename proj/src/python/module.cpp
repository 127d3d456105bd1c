// SPDX-License-Identifier: Apache-2.0
//
// risctl - control-aware link simulator for RIS-aided uplinks
// Copyright (C) 2026 The risctl authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "risctl/commands.hpp"
#include "risctl/config.hpp"
#include "risctl/engine.hpp"

namespace py = pybind11;
using namespace risctl;

namespace {

py::dict summary_dict(const experiment_summary& s)
{
    py::dict d;
    d["mean_goodput_bps"] = s.mean_goodput_bps;
    d["empirical_p_ae"] = s.empirical_p_ae;
    d["empirical_p_cc"] = s.empirical_p_cc;
    d["mean_efficiency_no_ae"] = s.mean_efficiency_no_ae;
    d["goodput_cdf_samples"] = py::array_t<double>(s.goodput_cdf_samples.size(), s.goodput_cdf_samples.data());
    d["actual_snr_samples"] = py::array_t<double>(s.actual_snr_samples.size(), s.actual_snr_samples.data());
    d["estimated_snr_samples"] = py::array_t<double>(s.estimated_snr_samples.size(), s.estimated_snr_samples.data());
    d["n_trials"] = s.n_trials;
    d["master_seed"] = s.master_seed;
    return d;
}

py::dict trial_dict(const trial_result& r)
{
    py::dict d;
    d["goodput_bps"] = r.goodput_bps;
    d["control_success"] = r.control_success;
    d["algorithmic_error"] = r.algorithmic_error();
    d["spectral_efficiency"] = r.spectral_efficiency();
    d["setup_s"] = to_seconds(r.timing.setup);
    d["algorithmic_s"] = to_seconds(r.timing.algorithmic);
    d["ack_s"] = to_seconds(r.timing.ack);
    d["payload_s"] = to_seconds(r.timing.payload);
    if (const auto* oce = std::get_if<oce_outcome>(&r.outcome)) {
        d["estimated_snr"] = oce->estimated_snr;
        d["actual_snr"] = oce->actual_snr;
    } else {
        const auto& bsw = std::get<bsw_outcome>(r.outcome);
        d["selected_index"] = bsw.selected_index ? py::cast(*bsw.selected_index) : py::none();
        d["sweep_count"] = bsw.sweep_count;
        d["estimated_snr"] = bsw.estimated_snr ? py::cast(*bsw.estimated_snr) : py::none();
        d["actual_snr"] = bsw.actual_snr ? py::cast(*bsw.actual_snr) : py::none();
    }
    return d;
}

py::array_t<std::complex<double>> codebook_matrix(const codebook& cb)
{
    py::array_t<std::complex<double>> out({cb.size(), cb.n_elements()});
    auto m = out.mutable_unchecked<2>();
    for (std::size_t c = 0; c < cb.size(); ++c)
        for (std::size_t n = 0; n < cb.n_elements(); ++n)
            m(c, n) = cb[c][n];
    return out;
}

} // namespace

PYBIND11_MODULE(_risctl, m)
{
    m.doc() = "Control-aware link simulator for RIS-aided uplinks";

    py::register_exception<config_error>(m, "ConfigError", PyExc_ValueError);

    m.def("default_config_text", &default_config_text);

    m.def("dft_codebook",
          [](std::size_t n, std::size_t c) { return codebook_matrix(dft_codebook(n, c)); },
          py::arg("n_elements"), py::arg("cardinality"),
          "DFT codebook as a (cardinality, n_elements) complex array.");

    m.def("ls_estimate",
          [](const std::vector<std::complex<double>>& obs, std::size_t n_elements) {
              const auto cb = dft_codebook(n_elements, obs.size());
              return ls_estimate(obs, cb);
          },
          py::arg("observations"), py::arg("n_elements"),
          "Least-squares channel estimate from one observation per DFT configuration.");

    m.def("optimal_config",
          [](const std::vector<std::complex<double>>& z_hat) { return optimal_config(z_hat).phases(); },
          py::arg("z_hat"));

    m.def("packet_outage",
          py::overload_cast<unsigned, double, double, double>(&packet_outage),
          py::arg("bits"), py::arg("useful_time_s"), py::arg("bandwidth_hz"), py::arg("mean_snr"));

    m.def("run_command",
          [](const std::string& name, const std::string& config_text, unsigned threads) {
              const auto cfg = parse_config(config_text);
              command_options opt;
              opt.threads = threads;
              const csv_table t = name == "snr-cdf"         ? cmd_snr_cdf(cfg, opt)
                                  : name == "goodput-sweep" ? cmd_goodput_sweep(cfg, opt)
                                  : name == "calibrate"     ? cmd_calibrate(cfg, opt)
                                  : name == "utility"       ? cmd_utility(cfg, opt)
                                  : name == "reliability"   ? cmd_reliability(cfg, opt)
                                  : throw config_error("unknown command '" + name + "'");
              return t.render();
          },
          py::arg("name"), py::arg("config_text") = "", py::arg("threads") = 0,
          "Runs a CLI command on a configuration text and returns its CSV.");

    py::class_<experiment>(m, "Experiment")
        .def(py::init([](const std::string& text) { return experiment(parse_config(text).sim); }),
             py::arg("config_text") = "")
        .def_property_readonly("pilot_length", &experiment::pilot_length)
        .def("codebook",
             [](const experiment& e, const std::string& p) { return codebook_matrix(e.codebook_for(parse_paradigm(p))); },
             py::arg("paradigm"))
        .def("min_lambda_u_db",
             [](const experiment& e, double target) {
                 const auto b = e.budgets(e.params().par);
                 return linear_to_db(min_lambda_obcc(target, std::span<const packet_budget>(b.data(), 2)));
             },
             py::arg("target_pcc"))
        .def("correct_control_prob",
             [](const experiment& e, double lambda_u, double lambda_r) {
                 const auto b = e.budgets(e.params().par);
                 return correct_control_prob(e.params().cc, b, lambda_u, lambda_r);
             },
             py::arg("lambda_u"), py::arg("lambda_r") = infinity)
        .def("run_trial",
             [](const experiment& e, std::uint64_t index, std::uint64_t seed) {
                 return trial_dict(run_trial(e, index, seed));
             },
             py::arg("trial_index"), py::arg("master_seed"))
        .def("run",
             [](const experiment& e, std::size_t n, std::uint64_t seed, unsigned threads) {
                 experiment_summary s;
                 {
                     py::gil_scoped_release release;
                     s = run_experiment(e, n, seed, threads);
                 }
                 return summary_dict(s);
             },
             py::arg("n_trials"), py::arg("master_seed"), py::arg("threads") = 0)
        .def("calibrate",
             [](const experiment& e, const std::vector<double>& grid, std::size_t n,
                std::uint64_t seed, unsigned threads) {
                 calibration_result r;
                 {
                     py::gil_scoped_release release;
                     r = calibrate_gamma0(e, grid, n, seed, threads);
                 }
                 return py::make_tuple(r.best_gamma0_db, r.table);
             },
             py::arg("gamma0_grid_db"), py::arg("n_trials"), py::arg("master_seed"),
             py::arg("threads") = 0);
}
